#pragma once

#include <compare>
#include <numeric>
#include <string>

namespace twowalk {

// Exact rational; magnitudes here stay tiny (cut sizes over component
// counts), so long long is plenty.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;  // denominators positive
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Toughness with the complete-graph convention: INFINITE orders above every
// rational, so filters like "toughness >= 2" admit complete graphs.
struct ToughnessValue {
    bool infinite = false;
    Rational value;

    static ToughnessValue inf() { return {true, {}}; }
    static ToughnessValue of(Rational r) { return {false, r}; }

    bool at_least(const Rational& r) const { return infinite || value >= r; }
    bool less_than(const Rational& r) const { return !infinite && value < r; }
    std::string str() const { return infinite ? "infinite" : value.str(); }

    friend bool operator==(const ToughnessValue&, const ToughnessValue&) = default;
};

}  // namespace twowalk
