#pragma once

// Fixed-width bit set sized at construction; element sets over a table
// ring's index range.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace midealkit {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const = default;

    // a subset of b
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    // Total order (word-lexicographic); used only for deterministic sorting.
    bool lex_less(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace midealkit
