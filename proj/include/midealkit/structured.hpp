#pragma once

/*
 * Structured rings: finite commutative rings in CRT canonical form, i.e.
 * products of prime-power cyclic components Z_{p^m}.  Ideals are exponent
 * vectors, one exponent per component (the component ideal (p^e)).  The
 * zero ideal has e_j = m_j everywhere, the whole ring e_j = 0.
 *
 * Components keep their construction order and primes may repeat across
 * components (e.g. prod:zn:6,zn:10 has components [2, 3, 2, 5]), which is
 * exactly why the representation is a component list rather than a single
 * modulus.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "midealkit/arith.hpp"

namespace midealkit {

using StructuredIdeal = ExponentVector;  // per-component exponents

struct StructuredRing {
    std::vector<PrimePower> components;
    std::string origin;  // e.g. "zn:36", "prod:zn:4,zn:9"

    int component_count() const { return static_cast<int>(components.size()); }
    // Number of elements; throws std::overflow_error past 2^62.
    std::int64_t cardinality() const;
    bool is_zero_ring() const { return components.empty(); }

    StructuredIdeal zero_ideal() const;
    StructuredIdeal whole_ideal() const;
    bool is_valid_ideal(const StructuredIdeal& e) const;
    // Element count of the named ideal.
    std::int64_t ideal_cardinality(const StructuredIdeal& e) const;
    // prod p_j^{e_j}; for make_zn rings this is the usual generator of the
    // ideal as a divisor of n (zero ideal -> n).
    std::int64_t ideal_generator(const StructuredIdeal& e) const;
};

// CRT canonical form of Z_n: one component per prime power of n.
StructuredRing make_zn(std::int64_t n);

// Direct product; components concatenate.  Throws on an empty list.
StructuredRing make_product(const std::vector<StructuredRing>& rings);

// Quotient by an ideal.  Components where K has exponent 0 are swallowed
// whole; a component with exponent e survives as Z_{p^e}.  R/R is the
// zero ring (no components).
struct StructuredQuotient {
    StructuredRing ring;
    // Components of the original ring that survive, in order.
    std::vector<int> kept_components;
    // Image (I + K)/K of an ideal of the original ring.
    StructuredIdeal push_forward(const StructuredIdeal& ideal) const;

    StructuredIdeal kernel;  // K itself, in the original ring
};

StructuredQuotient make_quotient(const StructuredRing& r, const StructuredIdeal& k);

// "(g)" for single-modulus rings, "(g1,g2,...)" per component otherwise;
// the zero ideal prints as (0).
std::string ideal_label(const StructuredRing& r, const StructuredIdeal& e);

}  // namespace midealkit
