#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace twowalk {

// Fixed-width dynamic bit set over vertex ids. The dense scans (2K2
// detection, clique enumeration) live on these.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void fill() {
        for (auto& w : w_) w = ~0ull;
        trim();
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    // Smallest set bit, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    // Smallest set bit strictly above i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t word = static_cast<size_t>(i) >> 6;
        uint64_t cur = w_[word] & (~0ull << (i & 63));
        if (cur) return static_cast<int>(word * 64) + std::countr_zero(cur);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return static_cast<int>(word * 64) + std::countr_zero(w_[word]);
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Smallest bit set in both, or -1.
    int first_common(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i] & o.w_[i];
            if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
        }
        return -1;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }

    bool operator==(const Bitset&) const = default;

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (1ull << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace twowalk
