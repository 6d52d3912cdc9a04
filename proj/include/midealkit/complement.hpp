#pragma once

/*
 * m-complements: N' with N n N' = 0 such that N + N' is an m-ideal.
 *
 * The existence proof picks a maximal element of {N' : N n N' = 0,
 * Q <= N'} by Zorn's lemma; here the lattice is finite, so maximality is
 * decided by exhaustive scan and the first maximal candidate in canonical
 * order is returned.  Certificates are re-verified through the
 * definitional oracle only, never through a fast path.
 */

#include <vector>

#include "midealkit/classify.hpp"

namespace midealkit {

template <class L>
struct ComplementResult {
    typename L::Id target{}, constraint{}, found{}, sum{};
    bool meet_is_zero = false;
    bool sum_oracle_m = false;
    bool verified() const { return meet_is_zero && sum_oracle_m; }
};

// Maximal ideal disjoint from n and containing q.  Throws
// std::domain_error when n n q != 0, std::logic_error when the found
// maximal candidate fails the oracle (a maximal disjoint ideal always
// passes: if N+N' missed some I1 n I2, then N' + (I1 n I2) would be a
// strictly larger candidate).
template <class L>
ComplementResult<L> m_complement_containing(const L& lat, typename L::Id n,
                                            typename L::Id q) {
    if (!lat.is_zero(lat.meet(n, q)))
        throw std::domain_error("m_complement_containing: N and Q must intersect trivially");
    std::vector<typename L::Id> candidates;
    for (auto x : lat.order())
        if (lat.is_zero(lat.meet(n, x)) && lat.leq(q, x)) candidates.push_back(x);
    for (auto x : candidates) {
        bool maximal = true;
        for (auto y : candidates)
            if (y != x && lat.leq(x, y)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        ComplementResult<L> res;
        res.target = n;
        res.constraint = q;
        res.found = x;
        res.sum = lat.join(n, x);
        res.meet_is_zero = lat.is_zero(lat.meet(n, x));
        res.sum_oracle_m = is_m_ideal_oracle(lat, res.sum).value;
        if (!res.sum_oracle_m)
            throw std::logic_error("maximal disjoint ideal is not an m-complement of " +
                                   lat.label(n));
        return res;
    }
    throw std::logic_error("m_complement_containing: no candidate found");  // q itself always is
}

// Every N' with N n N' = 0 and N + N' an m-ideal (oracle-checked), in
// canonical order.
template <class L>
std::vector<typename L::Id> all_m_complements(const L& lat, typename L::Id n) {
    std::vector<typename L::Id> out;
    for (auto x : lat.order())
        if (lat.is_zero(lat.meet(n, x)) && is_m_ideal_oracle(lat, lat.join(n, x)).value)
            out.push_back(x);
    return out;
}

// Distributivity of the whole ideal lattice ("arithmetic" ring).
template <class L>
bool is_distributive_lattice(const L& lat) {
    for (auto a : lat.order())
        for (auto b : lat.order())
            for (auto c : lat.order())
                if (lat.meet(a, lat.join(b, c)) !=
                    lat.join(lat.meet(a, b), lat.meet(a, c)))
                    return false;
    return true;
}

// Von Neumann regularity.
bool ring_is_regular(const StructuredRing& r);  // every component Z_p
bool ring_is_regular(const TableRing& r);       // a x a = a solvable for all a

// In a regular arithmetic ring with A <= N and B an m-complement of A,
// B n N is an m-complement of A inside the ring N.  Hypothesis
// violations throw std::domain_error; the return value is the checked
// conclusion.
template <class L, class Regular>
bool relative_complement_check(const L& lat, typename L::Id a, typename L::Id n,
                               typename L::Id b, const RelativeChecker<L>& rel,
                               const Regular& ring) {
    if (!ring_is_regular(ring))
        throw std::domain_error("relative_complement_check: ring is not regular");
    if (!is_distributive_lattice(lat))
        throw std::domain_error("relative_complement_check: ideal lattice not distributive");
    if (!lat.leq(a, n)) throw std::domain_error("relative_complement_check: A must lie in N");
    if (!lat.is_zero(lat.meet(a, b)) || !is_m_ideal_oracle(lat, lat.join(a, b)).value)
        throw std::domain_error("relative_complement_check: B is not an m-complement of A");
    auto c = lat.meet(b, n);
    if (!lat.is_zero(lat.meet(a, c))) return false;
    auto sum = lat.join(a, c);
    if (sum == n) return true;  // essential in itself
    return rel.m_ideal_in(sum, n);
}

}  // namespace midealkit
