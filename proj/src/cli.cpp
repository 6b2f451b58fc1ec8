#include "twowalk/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "twowalk/analysis.hpp"
#include "twowalk/errors.hpp"
#include "twowalk/generators.hpp"
#include "twowalk/h_builder.hpp"
#include "twowalk/json_io.hpp"
#include "twowalk/verifier.hpp"

namespace twowalk {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNot2K2Free = 3;
constexpr int kExitCertificate = 4;
constexpr int kExitNoWalk = 5;
constexpr int kExitTooLarge = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_check(const std::string& path, std::ostream& out) {
    Graph g = parse_graph(read_file(path));
    auto witness = find_induced_2k2(g);
    json report{{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"two_k2_free", !witness.has_value()},
                {"omega", clique_number(g)},
                {"connected", is_connected(g)}};
    if (witness) report["witness"] = witness_json(*witness);
    out << report.dump() << "\n";
    return witness ? kExitNot2K2Free : kExitOk;
}

int cmd_walk(const std::string& path, bool trace, int fallback_limit, std::ostream& out) {
    Graph g = parse_graph(read_file(path));
    TwoWalkOptions opts;
    opts.fallback_limit = fallback_limit;
    TwoWalkResult r = two_walk(g, opts);

    switch (r.outcome) {
        case WalkOutcome::WalkFound: {
            json doc = walk_json(r);
            if (trace) doc["trace"] = trace_json(r.trace);
            out << doc.dump() << "\n";
            return kExitOk;
        }
        case WalkOutcome::CertificateFound:
            out << certificate_json(*r.certificate).dump() << "\n";
            return kExitCertificate;
        case WalkOutcome::NotTwoK2Free:
            out << json{{"error", "not_2k2_free"}, {"witness", witness_json(*r.witness)}}.dump()
                << "\n";
            return kExitNot2K2Free;
        case WalkOutcome::NoWalkFound:
            out << json{{"error", "no_walk_found"}, {"note", r.note}}.dump() << "\n";
            return kExitNoWalk;
    }
    return kExitNoWalk;
}

int cmd_toughness(const std::string& path, int limit, std::ostream& out) {
    Graph g = parse_graph(read_file(path));
    ToughnessValue t = toughness_exact(g, limit);
    out << json{{"n", g.vertex_count()}, {"limit", limit}, {"toughness", t.str()}}.dump()
        << "\n";
    return kExitOk;
}

int cmd_decompose(const std::string& path, std::ostream& out) {
    Graph g = parse_graph(read_file(path));
    if (auto witness = find_induced_2k2(g)) {
        out << json{{"error", "not_2k2_free"}, {"witness", witness_json(*witness)}}.dump()
            << "\n";
        return kExitNot2K2Free;
    }
    if (g.edge_count() == 0)
        throw std::invalid_argument("graph has no edges; no clique tower exists");
    out << serialize_tower(clique_tower(g));
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& walk_path, std::ostream& out) {
    Graph g = parse_graph(read_file(graph_path));
    json doc = json::parse(read_file(walk_path));
    Walk w = walk_from_json(doc);
    VerdictReport report = verify_two_walk(g, w);
    out << verdict_json(report).dump() << "\n";
    return report.ok() ? kExitOk : 1;
}

int cmd_gen(const std::string& family, int clique, int indep, double attach_prob, int n,
            double edge_prob, int max_attempts, const std::string& name, uint64_t seed,
            std::ostream& out) {
    Graph g;
    std::string spec;
    if (family == "split") {
        g = gen_split(clique, indep, attach_prob, seed);
        spec = "family=split clique=" + std::to_string(clique) + " indep=" +
               std::to_string(indep) + " attach_prob=" + std::to_string(attach_prob);
    } else if (family == "co_chordal") {
        g = gen_co_chordal(n, edge_prob, seed);
        spec = "family=co_chordal n=" + std::to_string(n) +
               " edge_prob=" + std::to_string(edge_prob);
    } else if (family == "filtered_2tough") {
        g = gen_filtered_2tough(n, seed, max_attempts);
        spec = "family=filtered_2tough n=" + std::to_string(n) +
               " max_attempts=" + std::to_string(max_attempts);
    } else if (family == "fixed") {
        g = fixed_graph(name);
        spec = "family=fixed name=" + name;
    } else {
        throw CLI::ValidationError("--family", "unknown family: " + family);
    }
    out << "# genspec " << spec << " seed=" << seed << "\n" << serialize_graph(g);
    return kExitOk;
}

struct FuzzStats {
    int pass = 0;
    int fail = 0;
    int walks_constructive = 0;
    int walks_fallback = 0;
    int certificates = 0;
    int exhausted = 0;
};

// Full pipeline plus every verifier and cross-oracle check on one instance;
// returns the violations found.
std::vector<std::string> fuzz_one(const Graph& g, bool expect_2k2_free, TwoWalkResult& r) {
    std::vector<std::string> bad;
    if (expect_2k2_free && !is_2k2_free(g)) bad.push_back("generator output not 2K2-free");

    r = two_walk(g);
    switch (r.outcome) {
        case WalkOutcome::WalkFound: {
            if (auto v = verify_two_walk(g, r.walk); !v.ok())
                bad.push_back("walk rejected: " + v.violations.front().check);
            if (r.trace.tower)
                if (auto v = validate_tower(g, *r.trace.tower); !v.ok)
                    bad.push_back("tower rejected: " + v.violation);
            if (r.trace.gamma)
                if (auto v = verify_gamma(*r.trace.gamma); !v.ok())
                    bad.push_back("gamma rejected: " + v.violations.front().check);
            if (r.trace.h) {
                if (auto v = verify_h(g, *r.trace.h); !v.ok())
                    bad.push_back("H rejected: " + v.violations.front().check);
                // euler accounting: visits = degree/2, length = occurrences
                auto counts = r.walk.visit_counts();
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    if (counts[v] != r.trace.h->degree(v) / 2) {
                        bad.push_back("walk visits do not match H degrees");
                        break;
                    }
                if (static_cast<int>(r.walk.seq.size()) != r.trace.h->occurrence_count() + 1)
                    bad.push_back("walk length does not match H occurrences");
            }
            break;
        }
        case WalkOutcome::CertificateFound: {
            if (auto v = verify_certificate(g, *r.certificate); !v.ok())
                bad.push_back("certificate rejected: " + v.violations.front().check);
            if (g.vertex_count() <= kToughnessDefaultLimit &&
                !toughness_exact(g).less_than(Rational(2, 1)))
                bad.push_back("certificate disagrees with the toughness oracle");
            break;
        }
        case WalkOutcome::NotTwoK2Free:
            if (expect_2k2_free) bad.push_back("pipeline saw a 2K2 in generator output");
            break;
        case WalkOutcome::NoWalkFound:
            if (g.vertex_count() <= kToughnessDefaultLimit &&
                toughness_exact(g).at_least(Rational(2, 1)))
                bad.push_back("no walk found on a 2-tough instance");
            break;
    }
    // a 2-tough instance must take the constructive path
    if (g.vertex_count() <= kToughnessDefaultLimit &&
        toughness_exact(g).at_least(Rational(2, 1)) &&
        !(r.outcome == WalkOutcome::WalkFound && r.path == WalkPath::Constructive))
        bad.push_back("2-tough instance did not produce a constructive walk");
    return bad;
}

int cmd_fuzz(const std::string& family, int count, uint64_t seed, int size_lo, int size_hi,
             std::ostream& out, std::ostream& err) {
    if (family != "split" && family != "co_chordal" && family != "filtered_2tough" &&
        family != "fixed")
        throw CLI::ValidationError("--family", "unknown family: " + family);

    FuzzStats stats;
    json failures = json::array();
    SplitMix64 stream(seed);
    for (int i = 0; i < count; ++i) {
        uint64_t sub = stream.next();
        SplitMix64 rng(sub);
        int n = size_lo + static_cast<int>(rng.below(size_hi - size_lo + 1));

        Graph g;
        try {
            if (family == "split") {
                int indep = 1 + static_cast<int>(rng.below(std::max(1, n / 2)));
                int clique = std::max(1, n - indep);
                double p = 0.3 + 0.6 * rng.next_unit();
                g = gen_split(clique, indep, p, rng.next());
            } else if (family == "co_chordal") {
                double p = 0.2 + 0.5 * rng.next_unit();
                g = gen_co_chordal(std::max(1, n), p, rng.next());
            } else if (family == "filtered_2tough") {
                g = gen_filtered_2tough(std::min(n, kToughnessDefaultLimit), rng.next());
            } else {
                g = fixed_graph(i % 2 == 0 ? "G1" : "G2");
            }
        } catch (const ExhaustedError&) {
            ++stats.exhausted;
            continue;
        }

        TwoWalkResult r;
        auto bad = fuzz_one(g, true, r);
        if (r.outcome == WalkOutcome::WalkFound)
            ++(r.path == WalkPath::Constructive ? stats.walks_constructive
                                                : stats.walks_fallback);
        else if (r.outcome == WalkOutcome::CertificateFound)
            ++stats.certificates;

        if (bad.empty()) {
            ++stats.pass;
        } else {
            ++stats.fail;
            std::string file = "fuzz_fail_" + std::to_string(i) + ".json";
            json dump{{"instance", i},
                      {"seed", sub},
                      {"graph", serialize_graph(g)},
                      {"violations", bad},
                      {"trace", trace_json(r.trace)}};
            std::ofstream f(file);
            f << dump.dump(2) << "\n";
            failures.push_back(file);
            err << "instance " << i << " failed: " << bad.front() << "\n";
        }
    }

    out << json{{"family", family},
                {"count", count},
                {"pass", stats.pass},
                {"fail", stats.fail},
                {"outcomes",
                 json{{"walk_constructive", stats.walks_constructive},
                      {"walk_fallback", stats.walks_fallback},
                      {"certificate", stats.certificates},
                      {"exhausted", stats.exhausted}}},
                {"failures", failures}}
               .dump()
        << "\n";
    return stats.fail == 0 ? kExitOk : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-walk construction for 2-tough 2K2-free graphs"};
    app.require_subcommand(1);

    std::string path, walk_path, family = "split", name = "G1", size_range = "6..14";
    bool trace = false;
    int fallback_limit = kFallbackDefaultLimit;
    int limit = kToughnessDefaultLimit;
    int clique = 4, indep = 2, n = 10, max_attempts = kFilteredDefaultAttempts, count = 100;
    double attach_prob = 0.8, edge_prob = 0.35;
    uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "2K2-freeness, clique number, connectivity");
    check->add_option("file", path)->required();

    auto* walk = app.add_subcommand("walk", "construct a 2-walk or a toughness certificate");
    walk->add_option("file", path)->required();
    walk->add_flag("--trace", trace, "include tower/first-class/gamma serializations");
    walk->add_option("--fallback-limit", fallback_limit, "exact-search size bound");

    auto* tough = app.add_subcommand("toughness", "exact toughness (exhaustive)");
    tough->add_option("file", path)->required();
    tough->add_option("--limit", limit, "size bound for the exhaustive sweep");

    auto* decomp = app.add_subcommand("decompose", "print the clique tower");
    decomp->add_option("file", path)->required();

    auto* verify = app.add_subcommand("verify", "re-check a walk JSON against a graph");
    verify->add_option("graph", path)->required();
    verify->add_option("walk", walk_path)->required();

    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen->add_option("--family", family, "split | co_chordal | filtered_2tough | fixed");
    gen->add_option("--clique", clique);
    gen->add_option("--indep", indep);
    gen->add_option("--attach-prob", attach_prob);
    gen->add_option("--n", n);
    gen->add_option("--edge-prob", edge_prob);
    gen->add_option("--max-attempts", max_attempts);
    gen->add_option("--name", name, "fixed graph name (G1 or G2)");
    gen->add_option("--seed", seed);

    auto* fuzz = app.add_subcommand("fuzz", "generate, run the pipeline, verify everything");
    fuzz->add_option("--family", family)->required();
    fuzz->add_option("--count", count);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--size-range", size_range, "inclusive range a..b");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (check->parsed()) return cmd_check(path, out);
        if (walk->parsed()) return cmd_walk(path, trace, fallback_limit, out);
        if (tough->parsed()) return cmd_toughness(path, limit, out);
        if (decomp->parsed()) return cmd_decompose(path, out);
        if (verify->parsed()) return cmd_verify(path, walk_path, out);
        if (gen->parsed())
            return cmd_gen(family, clique, indep, attach_prob, n, edge_prob, max_attempts, name,
                           seed, out);
        if (fuzz->parsed()) {
            size_t dots = size_range.find("..");
            if (dots == std::string::npos)
                throw CLI::ValidationError("--size-range", "expected a..b");
            int lo = std::stoi(size_range.substr(0, dots));
            int hi = std::stoi(size_range.substr(dots + 2));
            if (lo < 1 || hi < lo) throw CLI::ValidationError("--size-range", "expected a..b");
            return cmd_fuzz(family, count, seed, lo, hi, out, err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TooLargeError& e) {
        err << e.what() << "\n";
        return kExitTooLarge;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const ExhaustedError& e) {
        err << e.what() << "\n";
        return kExitNoWalk;
    } catch (const nlohmann::json::exception& e) {
        err << "bad JSON input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace twowalk
