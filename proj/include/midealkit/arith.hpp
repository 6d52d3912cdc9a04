#pragma once

/*
 * Exact integer factorization and the exponent-vector algebra of ideals
 * of Z_n.
 *
 * An ideal of Z_n, n = p_1^{m_1} ... p_k^{m_k}, is named by its exponent
 * vector (e_1, ..., e_k) with 0 <= e_i <= m_i; the ideal is generated by
 * prod p_i^{e_i}.  Under this naming, intersection is the componentwise
 * maximum and sum is the componentwise minimum, so the ideal lattice of
 * Z_n is the divisor lattice of n turned upside down.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace midealkit {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    std::int64_t value() const;
    bool operator==(const PrimePower&) const = default;
};

// n >= 2 together with its sorted prime factorization.
struct FactoredInteger {
    std::int64_t value = 0;
    std::vector<PrimePower> factors;

    int prime_count() const { return static_cast<int>(factors.size()); }
};

// Per-prime ideal exponents; always paired with an owning FactoredInteger
// (or an owning structured ring, see structured.hpp).
using ExponentVector = std::vector<int>;

// Deterministic primality test by trial division (wheel mod 30).
bool is_prime(std::int64_t n);

// Unique sorted factorization.  Throws std::domain_error for n < 2.
FactoredInteger factorize(std::int64_t n);

// Ideal intersection: componentwise max.  Throws on length mismatch.
ExponentVector vec_meet(const ExponentVector& a, const ExponentVector& b);

// Ideal sum: componentwise min.  Throws on length mismatch.
ExponentVector vec_join(const ExponentVector& a, const ExponentVector& b);

// True if e has one exponent per prime of f, each within [0, m_i].
bool is_valid_exponent_vector(const FactoredInteger& f, const ExponentVector& e);

// Generator of the named ideal as a positive divisor of n (the zero ideal
// yields n itself; callers display that as 0).
std::int64_t generator_of(const FactoredInteger& f, const ExponentVector& e);

// Exponent vector of the ideal (g) of Z_n, i.e. of (gcd(g, n)); g = 0
// names the zero ideal.  Accepts any g >= 0.
ExponentVector ideal_from_generator(const FactoredInteger& f, std::int64_t g);

std::string to_string(const FactoredInteger& f);

}  // namespace midealkit
