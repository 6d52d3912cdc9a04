#include "midealkit/arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace midealkit {

namespace {

// Gaps between consecutive candidates coprime to 30, starting from 7.
constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

}  // namespace

std::int64_t PrimePower::value() const {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v *= prime;
    return v;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::int64_t d = 7;
    int w = 0;
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    return true;
}

FactoredInteger factorize(std::int64_t n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    FactoredInteger f;
    f.value = n;
    std::int64_t rest = n;
    auto strip = [&](std::int64_t p) {
        if (rest % p != 0) return;
        PrimePower pp{p, 0};
        while (rest % p == 0) {
            rest /= p;
            ++pp.exponent;
        }
        f.factors.push_back(pp);
    };
    strip(2);
    strip(3);
    strip(5);
    std::int64_t d = 7;
    int w = 0;
    while (d * d <= rest) {
        strip(d);
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    if (rest > 1) f.factors.push_back(PrimePower{rest, 1});
    return f;
}

ExponentVector vec_meet(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::domain_error("vec_meet: exponent vectors of different moduli");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

ExponentVector vec_join(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::domain_error("vec_join: exponent vectors of different moduli");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool is_valid_exponent_vector(const FactoredInteger& f, const ExponentVector& e) {
    if (e.size() != f.factors.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > f.factors[i].exponent) return false;
    return true;
}

std::int64_t generator_of(const FactoredInteger& f, const ExponentVector& e) {
    if (!is_valid_exponent_vector(f, e))
        throw std::domain_error("generator_of: exponent vector does not fit modulus");
    std::int64_t g = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int j = 0; j < e[i]; ++j) g *= f.factors[i].prime;
    return g;
}

ExponentVector ideal_from_generator(const FactoredInteger& f, std::int64_t g) {
    if (g < 0) throw std::domain_error("ideal_from_generator: generator must be >= 0");
    ExponentVector e(f.factors.size());
    if (g == 0) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.factors[i].exponent;
        return e;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::int64_t p = f.factors[i].prime;
        std::int64_t r = g;
        int v = 0;
        while (v < f.factors[i].exponent && r % p == 0) {
            r /= p;
            ++v;
        }
        e[i] = v;
    }
    return e;
}

std::string to_string(const FactoredInteger& f) {
    std::ostringstream os;
    os << f.value << " = ";
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) os << " * ";
        os << f.factors[i].prime;
        if (f.factors[i].exponent > 1) os << "^" << f.factors[i].exponent;
    }
    return os.str();
}

}  // namespace midealkit
