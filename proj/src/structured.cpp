#include "midealkit/structured.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace midealkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (a != 0 && b > (std::int64_t{1} << 62) / a)
        throw std::overflow_error("structured ring cardinality exceeds 2^62");
    return a * b;
}

bool primes_distinct(const std::vector<PrimePower>& comps) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (comps[i].prime == comps[j].prime) return false;
    return true;
}

}  // namespace

std::int64_t StructuredRing::cardinality() const {
    std::int64_t n = 1;
    for (const auto& c : components) n = checked_mul(n, c.value());
    return n;
}

StructuredIdeal StructuredRing::zero_ideal() const {
    StructuredIdeal e(components.size());
    for (std::size_t j = 0; j < components.size(); ++j) e[j] = components[j].exponent;
    return e;
}

StructuredIdeal StructuredRing::whole_ideal() const {
    return StructuredIdeal(components.size(), 0);
}

bool StructuredRing::is_valid_ideal(const StructuredIdeal& e) const {
    if (e.size() != components.size()) return false;
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] < 0 || e[j] > components[j].exponent) return false;
    return true;
}

std::int64_t StructuredRing::ideal_cardinality(const StructuredIdeal& e) const {
    if (!is_valid_ideal(e)) throw std::domain_error("ideal does not fit this ring");
    std::int64_t n = 1;
    for (std::size_t j = 0; j < e.size(); ++j) {
        PrimePower rest{components[j].prime, components[j].exponent - e[j]};
        n = checked_mul(n, rest.value());
    }
    return n;
}

std::int64_t StructuredRing::ideal_generator(const StructuredIdeal& e) const {
    if (!is_valid_ideal(e)) throw std::domain_error("ideal does not fit this ring");
    std::int64_t g = 1;
    for (std::size_t j = 0; j < e.size(); ++j)
        g = checked_mul(g, PrimePower{components[j].prime, e[j]}.value());
    return g;
}

StructuredRing make_zn(std::int64_t n) {
    FactoredInteger f = factorize(n);  // rejects n < 2
    StructuredRing r;
    r.components = f.factors;
    r.origin = "zn:" + std::to_string(n);
    return r;
}

StructuredRing make_product(const std::vector<StructuredRing>& rings) {
    if (rings.empty()) throw std::domain_error("make_product: empty factor list");
    StructuredRing r;
    std::ostringstream origin;
    origin << "prod:";
    for (std::size_t i = 0; i < rings.size(); ++i) {
        if (i) origin << ",";
        origin << rings[i].origin;
        r.components.insert(r.components.end(), rings[i].components.begin(),
                            rings[i].components.end());
    }
    r.origin = origin.str();
    r.cardinality();  // overflow guard
    return r;
}

StructuredIdeal StructuredQuotient::push_forward(const StructuredIdeal& ideal) const {
    StructuredIdeal img;
    img.reserve(kept_components.size());
    for (std::size_t j = 0; j < kept_components.size(); ++j) {
        int src = kept_components[j];
        img.push_back(std::min(ideal[src], ring.components[j].exponent));
    }
    return img;
}

StructuredQuotient make_quotient(const StructuredRing& r, const StructuredIdeal& k) {
    if (!r.is_valid_ideal(k)) throw std::domain_error("make_quotient: invalid ideal");
    StructuredQuotient q;
    q.kernel = k;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] == 0) continue;  // component swallowed by K
        q.ring.components.push_back(PrimePower{r.components[j].prime, k[j]});
        q.kept_components.push_back(static_cast<int>(j));
    }
    q.ring.origin = "quot:" + r.origin + "/" + std::to_string(r.ideal_generator(k));
    return q;
}

std::string ideal_label(const StructuredRing& r, const StructuredIdeal& e) {
    if (!r.is_valid_ideal(e)) throw std::domain_error("ideal does not fit this ring");
    std::ostringstream os;
    if (primes_distinct(r.components)) {
        std::int64_t g = r.ideal_generator(e);
        os << "(" << (g == r.cardinality() ? 0 : g) << ")";
        return os.str();
    }
    os << "(";
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (j) os << ",";
        std::int64_t g = PrimePower{r.components[j].prime, e[j]}.value();
        os << (g == r.components[j].value() ? 0 : g);
    }
    os << ")";
    return os.str();
}

}  // namespace midealkit
