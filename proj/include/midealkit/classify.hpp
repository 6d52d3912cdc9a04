#pragma once

/*
 * Per-ideal classification.
 *
 * Three independent routes decide m-ideal status:
 *   - the definitional oracle: scan all pairs (I1, I2) of nonzero ideals
 *     with I1 n I2 != 0 and test J n I1 n I2;
 *   - the dichotomy: essential or relatively irreducible;
 *   - the closed form for Z_n in terms of ideal exponents.
 * They are kept as separate code paths on purpose; the verifier sweeps
 * assert their agreement rather than assuming it.
 *
 * Predicates walk the lattice's canonical order, so the reported witness
 * is always the first violating tuple in that order.
 *
 * "Essential in an ideal J" and "m-ideal of J" are relative notions and
 * the quantifier is ambiguous: ideals of the ring J, or ideals of R lying
 * inside J.  Both readings are implemented (RelativeChecker below); for
 * Z_n they coincide because every additive subgroup of an ideal is again
 * an ideal.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "midealkit/lattice.hpp"

namespace midealkit {

template <class L>
struct Pred {
    bool value = false;
    std::vector<typename L::Id> witness;  // meaning depends on the predicate
    explicit operator bool() const { return value; }
};

// --- essential ---------------------------------------------------------

// Definitional: J n I != 0 for every nonzero ideal I.  Witness on false:
// the first nonzero I with J n I = 0.
template <class L>
Pred<L> is_essential_checked(const L& lat, typename L::Id j) {
    for (auto i : lat.order()) {
        if (lat.is_zero(i)) continue;
        if (lat.is_zero(lat.meet(j, i))) return {false, {i}};
    }
    return {true, {}};
}

// Fast path: meeting every minimal ideal is enough, since every nonzero
// ideal of a finite ring contains a minimal one.
template <class L>
bool is_essential(const L& lat, typename L::Id j) {
    for (auto a : lat.atoms())
        if (lat.is_zero(lat.meet(j, a))) return false;
    return true;
}

// --- relatively irreducible --------------------------------------------

// No two nonzero ideals inside I intersect trivially.  Witness: first
// such pair (J, K).
template <class L>
Pred<L> is_relatively_irreducible_checked(const L& lat, typename L::Id i) {
    for (auto j : lat.order()) {
        if (lat.is_zero(j) || !lat.leq(j, i)) continue;
        for (auto k : lat.order()) {
            if (lat.is_zero(k) || !lat.leq(k, i)) continue;
            if (lat.is_zero(lat.meet(j, k))) return {false, {j, k}};
        }
    }
    return {true, {}};
}

// Fast path: at most one minimal ideal below I.
template <class L>
bool is_relatively_irreducible(const L& lat, typename L::Id i) {
    int below = 0;
    for (auto a : lat.atoms())
        if (lat.leq(a, i) && ++below > 1) return false;
    return true;
}

// --- m-ideal ------------------------------------------------------------

// Definition-level check (two-ideal form).  Witness: first pair (I1, I2)
// with I1 n I2 != 0, J n I_k != 0, J n I1 n I2 = 0.
template <class L>
Pred<L> is_m_ideal_oracle(const L& lat, typename L::Id j) {
    for (auto i1 : lat.order()) {
        if (lat.is_zero(i1) || lat.is_zero(lat.meet(j, i1))) continue;
        for (auto i2 : lat.order()) {
            if (lat.is_zero(i2) || lat.is_zero(lat.meet(j, i2))) continue;
            auto both = lat.meet(i1, i2);
            if (lat.is_zero(both)) continue;
            if (lat.is_zero(lat.meet(j, both))) return {false, {i1, i2}};
        }
    }
    return {true, {}};
}

// The dichotomy route.
template <class L>
bool is_m_ideal(const L& lat, typename L::Id j) {
    return is_essential(lat, j) || is_relatively_irreducible(lat, j);
}

// Closed form for Z_n (and any structured ring with pairwise distinct
// primes): blocked exactly when two components are strict while a third
// is pinned at its maximum.  Trivial ideals take their fixed answers.
bool is_essential_zn(const FactoredInteger& f, const ExponentVector& e);
bool is_m_ideal_zn(const FactoredInteger& f, const ExponentVector& e);
bool zn_closed_form_applies(const StructuredRing& r);
bool is_m_ideal_zn(const StructuredRing& r, const StructuredIdeal& e);

// --- lattice-position predicates ----------------------------------------

template <class L>
Pred<L> is_minimal_checked(const L& lat, typename L::Id i) {
    if (lat.is_zero(i)) return {false, {}};
    for (auto b : lat.order())
        if (!lat.is_zero(b) && b != i && lat.leq(b, i)) return {false, {b}};
    return {true, {}};
}

template <class L>
Pred<L> is_maximal_checked(const L& lat, typename L::Id i) {
    if (i == lat.top()) return {false, {}};
    for (auto b : lat.order())
        if (b != i && b != lat.top() && lat.leq(i, b)) return {false, {b}};
    return {true, {}};
}

// Complement witness when true.
template <class L>
Pred<L> is_direct_summand(const L& lat, typename L::Id i) {
    for (auto j : lat.order())
        if (lat.is_zero(lat.meet(i, j)) && lat.join(i, j) == lat.top()) return {true, {j}};
    return {false, {}};
}

// --- relative checks and closedness --------------------------------------

// A pair of predicates "i essential in j" / "i m-ideal of j" for ideals
// i <= j, under a fixed reading of "ideal of j".
template <class L>
struct RelativeChecker {
    std::function<bool(typename L::Id, typename L::Id)> essential_in;
    std::function<bool(typename L::Id, typename L::Id)> m_ideal_in;
};

// Reading 1: ideals of R contained in j (the interval [0, j]).
template <class L>
RelativeChecker<L> relative_via_interval(const L& lat) {
    RelativeChecker<L> rc;
    rc.essential_in = [&lat](typename L::Id i, typename L::Id j) {
        IntervalLattice<L> iv(lat, j);
        return is_essential_checked(iv, i).value;
    };
    rc.m_ideal_in = [&lat](typename L::Id i, typename L::Id j) {
        IntervalLattice<L> iv(lat, j);
        return is_m_ideal_oracle(iv, i).value;
    };
    return rc;
}

// Reading 2 (table rings): ideals of the ring j itself, via subring_of_ideal.
class SubringRelative {
public:
    explicit SubringRelative(const MaskLattice& base) : base_(&base) {}

    bool essential_in(MaskLattice::Id i, MaskLattice::Id j);
    bool m_ideal_in(MaskLattice::Id i, MaskLattice::Id j);
    // Lattice of the ring mask(j), cached.
    const MaskLattice& sublattice(MaskLattice::Id j);
    MaskLattice::Id to_sub(MaskLattice::Id j, MaskLattice::Id i);

    RelativeChecker<MaskLattice> checker();

private:
    struct Entry {
        Subring sub;
        MaskLattice lat;
    };
    Entry& entry(MaskLattice::Id j);
    const MaskLattice* base_;
    std::map<MaskLattice::Id, Entry> cache_;
};

// No proper extension within an ideal of the ring in which i stays
// essential (resp. an m-ideal).  Witness: the offending extension J.
template <class L>
Pred<L> is_essentially_closed(const L& lat, typename L::Id i, const RelativeChecker<L>& rel) {
    for (auto j : lat.order()) {
        if (j == i || !lat.leq(i, j)) continue;
        if (rel.essential_in(i, j)) return {false, {j}};
    }
    return {true, {}};
}

template <class L>
Pred<L> is_m_closed(const L& lat, typename L::Id i, const RelativeChecker<L>& rel) {
    for (auto j : lat.order()) {
        if (j == i || !lat.leq(i, j)) continue;
        if (rel.m_ideal_in(i, j)) return {false, {j}};
    }
    return {true, {}};
}

// --- products -------------------------------------------------------------

enum class ProductClass { EssentialProduct, SingleSlotIrreducible, NotMIdeal };

inline bool product_is_m_ideal(ProductClass c) { return c != ProductClass::NotMIdeal; }

// Classifies prod I_k inside prod R_k: an m-ideal iff every slot is
// essential (all slots nonzero) or the unique nonzero slot is relatively
// irreducible.  Requires >= 2 slots, not all ideals zero.
ProductClass classify_product(
    const std::vector<std::pair<StructuredRing, StructuredIdeal>>& slots);

// --- structure scans -------------------------------------------------------

template <class L>
struct SummandScan {
    bool value = true;
    std::optional<typename L::Id> failing;  // m-ideal without a complement
};

// Every nonzero proper m-ideal has a complement.  ("Proper m-ideal" is
// read as nonzero proper: the zero ideal is always an m-ideal and always
// complemented, so including it would make the question vacuous.)
template <class L>
SummandScan<L> every_proper_m_ideal_is_summand(const L& lat) {
    for (auto i : lat.order()) {
        if (lat.is_zero(i) || i == lat.top()) continue;
        if (!is_m_ideal_oracle(lat, i).value) continue;
        if (!is_direct_summand(lat, i).value) return {false, i};
    }
    return {true, {}};
}

// Whether the atom, regarded as a ring, is simple.  For a minimal ideal
// this needs a nonzero product and no proper nonzero ideals of its own.
bool atom_is_simple_ring(const ChainProductLattice& lat, ChainProductLattice::Id atom);
bool atom_is_simple_ring(const MaskLattice& lat, MaskLattice::Id atom);

template <class L>
struct DirectSumSimple {
    bool value = false;
    std::vector<typename L::Id> summands;  // independent simple atoms found
};

// Locates pairwise-independent simple minimal ideals summing to R.
template <class L>
DirectSumSimple<L> is_direct_sum_of_simple(const L& lat) {
    DirectSumSimple<L> out;
    auto c = lat.zero();
    for (auto a : lat.atoms()) {
        if (!atom_is_simple_ring(lat, a)) continue;
        if (!lat.is_zero(lat.meet(a, c))) continue;
        out.summands.push_back(a);
        c = lat.join(c, a);
    }
    out.value = c == lat.top();
    if (!out.value) out.summands.clear();
    return out;
}

template <class L>
struct OverIdeal {
    bool is_summand = false;
    typename L::Id witness{};  // complement, or the maximal non-summand K >= i
    bool oracle_verified = false;
};

// Either i is complemented, or the first maximal element (canonical
// order) of the proper non-summands above i; the latter is expected to
// pass the m-ideal oracle and oracle_verified records that it did.
template <class L>
OverIdeal<L> find_proper_m_ideal_over(const L& lat, typename L::Id i) {
    if (lat.is_zero(i) || i == lat.top())
        throw std::domain_error("find_proper_m_ideal_over: ideal must be nonzero proper");
    if (auto s = is_direct_summand(lat, i)) return {true, s.witness[0], true};
    std::vector<typename L::Id> pool;
    for (auto k : lat.order())
        if (k != lat.top() && lat.leq(i, k) && !is_direct_summand(lat, k).value)
            pool.push_back(k);
    for (auto k : pool) {
        bool maximal = true;
        for (auto k2 : pool)
            if (k2 != k && lat.leq(k, k2)) {
                maximal = false;
                break;
            }
        if (maximal) return {false, k, is_m_ideal_oracle(lat, k).value};
    }
    throw std::logic_error("find_proper_m_ideal_over: empty candidate pool");
}

// Edge count of the longest strictly ascending chain of m-ideals.
template <class L>
int m_dimension(const L& lat) {
    std::vector<typename L::Id> ms;
    for (auto i : lat.order())
        if (is_m_ideal(lat, i)) ms.push_back(i);
    // Process small-to-large so subchains are ready.
    std::sort(ms.begin(), ms.end(),
              [&](auto a, auto b) { return lat.cardinality(a) < lat.cardinality(b); });
    std::map<typename L::Id, int> depth;
    int best = 0;
    for (std::size_t x = 0; x < ms.size(); ++x) {
        int d = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (ms[y] != ms[x] && lat.leq(ms[y], ms[x])) d = std::max(d, depth[ms[y]] + 1);
        depth[ms[x]] = d;
        best = std::max(best, d);
    }
    return best;
}

// --- matrix transport -------------------------------------------------------

enum class TransportDirection { ToMatrix, FromMatrix };

// The lattice bijection I <-> M_k(I).  FromMatrix throws std::logic_error
// if the mask is not of matrix form (impossible for genuinely enumerated
// ideals).
Bitset transport_matrix_ideal(const TableRing& base, int k, TransportDirection dir,
                              const Bitset& ideal);

// --- the full per-ideal report ------------------------------------------------

struct ClassificationReport {
    std::string ideal;
    std::vector<int> exponents;          // structured rings only
    std::int64_t generator = -1;         // structured rings with distinct primes
    std::int64_t cardinality = 0;
    bool is_zero = false, is_whole = false;
    bool essential = false;
    bool relatively_irreducible = false;
    bool minimal = false, maximal = false;
    bool m_ideal = false;
    bool essentially_closed = false, m_closed = false;
    bool direct_summand = false;
    // Second reading on table rings (ideals-of-R-inside-J); equal to the
    // main value on Z_n.
    std::optional<bool> essentially_closed_interval, m_closed_interval;
    std::vector<std::string> m_ideal_methods;
    // predicate -> labels of the witness tuple (false predicates, plus the
    // complement for direct_summand = true)
    std::map<std::string, std::vector<std::string>> witnesses;
};

ClassificationReport classify_ideal(const ChainProductLattice& lat, ChainProductLattice::Id a);
ClassificationReport classify_ideal(const MaskLattice& lat, MaskLattice::Id a,
                                    SubringRelative* cache = nullptr);

}  // namespace midealkit
