#pragma once

/*
 * Ideal lattices.  Two representations with one interface:
 *
 *  - ChainProductLattice: all ideals of a structured ring.  The lattice is
 *    the product of per-component chains, so ids are mixed-radix codes of
 *    exponent vectors and meet/join are componentwise max/min.  Nothing is
 *    enumerated eagerly except the canonical scan order.
 *
 *  - MaskLattice: all ideals of a table ring, found by brute force: every
 *    principal ideal, then closure under pairwise sums.  Complete because
 *    each ideal is the sum of the principal ideals of its elements.
 *
 * The canonical scan order is descending ideal size with a lexicographic
 * tie-break, which for Z_n is ascending generator order: (1), (2), (3), ...
 * All witness searches in classify.hpp walk this order, so reported
 * witnesses are reproducible across runs and representations.
 *
 * The shared interface (size/order/zero/top/meet/join/leq/is_zero/atoms/
 * cardinality/label) is what the classification templates consume;
 * IntervalLattice restricts any lattice to the ideals below a fixed ideal
 * for the relative ("inside J") checks.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "midealkit/bitset.hpp"
#include "midealkit/structured.hpp"
#include "midealkit/table_ring.hpp"

namespace midealkit {

inline constexpr int kDefaultLatticeCap = 20000;

struct UnsupportedOperation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ChainProductLattice {
public:
    using Id = int;

    explicit ChainProductLattice(StructuredRing r, int cap = kDefaultLatticeCap);

    const StructuredRing& ring() const { return ring_; }
    int size() const { return size_; }
    Id zero() const { return zero_; }
    Id top() const { return 0; }
    bool is_zero(Id a) const { return a == zero_; }

    Id meet(Id a, Id b) const;
    Id join(Id a, Id b) const;
    bool leq(Id a, Id b) const;  // inclusion: exponents of a >= exponents of b

    StructuredIdeal ideal(Id a) const;
    Id id_of(const StructuredIdeal& e) const;
    std::int64_t cardinality(Id a) const { return card_[a]; }
    std::string label(Id a) const { return ideal_label(ring_, ideal(a)); }

    const std::vector<Id>& order() const { return order_; }
    std::vector<Id> atoms() const;
    std::vector<Id> coatoms() const;
    std::vector<std::pair<Id, Id>> hasse() const;  // (lower, upper) covers

    bool ring_unital() const { return true; }
    bool ring_commutative() const { return true; }

private:
    StructuredRing ring_;
    std::vector<int> caps_;     // m_j
    std::vector<int> stride_;
    int size_ = 0;
    Id zero_ = 0;
    std::vector<std::int64_t> card_;
    std::vector<Id> order_;
};

// Smallest two-sided ideal containing gens.
Bitset generated_ideal(const TableRing& r, const std::vector<int>& gens);

// Subgroup of (R,+) generated by the listed elements.
Bitset additive_closure(const TableRing& r, const std::vector<int>& seed);

class MaskLattice {
public:
    using Id = int;

    explicit MaskLattice(TableRing r, int cap = kDefaultLatticeCap);

    const TableRing& ring() const { return ring_; }
    int size() const { return static_cast<int>(ideals_.size()); }
    Id zero() const { return zero_; }
    Id top() const { return top_; }
    bool is_zero(Id a) const { return a == zero_; }

    Id meet(Id a, Id b) const;
    Id join(Id a, Id b) const { return join_[static_cast<std::size_t>(a) * size() + b]; }
    bool leq(Id a, Id b) const { return ideals_[a].subset_of(ideals_[b]); }

    const Bitset& mask(Id a) const { return ideals_[a]; }
    Id id_of(const Bitset& mask) const;
    std::int64_t cardinality(Id a) const { return ideals_[a].count(); }
    std::string label(Id a) const;

    const std::vector<Id>& order() const { return order_; }
    std::vector<Id> atoms() const;
    std::vector<Id> coatoms() const;
    std::vector<std::pair<Id, Id>> hasse() const;

    bool ring_unital() const { return ring_.unital(); }
    bool ring_commutative() const { return ring_.commutative(); }

private:
    TableRing ring_;
    std::vector<Bitset> ideals_;
    std::unordered_map<Bitset, Id, BitsetHash> index_;
    std::vector<Id> join_;
    Id zero_ = 0, top_ = 0;
    std::vector<Id> order_;
};

// Ideals of the base lattice contained in `top`, as a lattice in its own
// right.  Ids are shared with the base.
template <class L>
class IntervalLattice {
public:
    using Id = typename L::Id;

    IntervalLattice(const L& base, Id top) : base_(&base), top_(top) {
        for (Id a : base.order())
            if (base.leq(a, top)) order_.push_back(a);
    }

    int size() const { return static_cast<int>(order_.size()); }
    Id zero() const { return base_->zero(); }
    Id top() const { return top_; }
    bool is_zero(Id a) const { return base_->is_zero(a); }
    Id meet(Id a, Id b) const { return base_->meet(a, b); }
    Id join(Id a, Id b) const { return base_->join(a, b); }
    bool leq(Id a, Id b) const { return base_->leq(a, b); }
    std::int64_t cardinality(Id a) const { return base_->cardinality(a); }
    std::string label(Id a) const { return base_->label(a); }
    const std::vector<Id>& order() const { return order_; }

    std::vector<Id> atoms() const {
        std::vector<Id> out;
        for (Id a : order_) {
            if (is_zero(a)) continue;
            bool minimal = true;
            for (Id b : order_) {
                if (is_zero(b) || b == a) continue;
                if (leq(b, a)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(a);
        }
        return out;
    }

private:
    const L* base_;
    Id top_;
    std::vector<Id> order_;
};

template <class L>
std::vector<typename L::Id> minimal_ideals(const L& lat) {
    return lat.atoms();
}

// Sum of all minimal ideals (zero ideal when there are none).
template <class L>
typename L::Id socle(const L& lat) {
    auto s = lat.zero();
    for (auto a : lat.atoms()) s = lat.join(s, a);
    return s;
}

// Meet of all maximal ideals; only defined for commutative unital rings.
template <class L>
typename L::Id jacobson_radical(const L& lat) {
    if (!lat.ring_unital() || !lat.ring_commutative())
        throw UnsupportedOperation(
            "jacobson_radical: supported for commutative unital rings only");
    auto j = lat.top();
    for (auto c : lat.coatoms()) j = lat.meet(j, c);
    return j;
}

}  // namespace midealkit
