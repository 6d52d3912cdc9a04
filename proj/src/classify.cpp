#include "midealkit/classify.hpp"

#include <sstream>

namespace midealkit {

bool is_essential_zn(const FactoredInteger& f, const ExponentVector& e) {
    if (!is_valid_exponent_vector(f, e))
        throw std::domain_error("is_essential_zn: exponent vector incompatible with modulus");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] >= f.factors[i].exponent) return false;
    return true;
}

bool is_m_ideal_zn(const FactoredInteger& f, const ExponentVector& e) {
    if (!is_valid_exponent_vector(f, e))
        throw std::domain_error("is_m_ideal_zn: exponent vector incompatible with modulus");
    const int k = f.prime_count();
    int strict = 0;
    for (int i = 0; i < k; ++i)
        if (e[i] < f.factors[i].exponent) ++strict;
    if (strict == 0) return true;  // zero ideal
    if (strict == k) return true;  // essential (includes the whole ring)
    // Some exponent is pinned at its maximum; blocked iff two are strict.
    return strict < 2;
}

bool zn_closed_form_applies(const StructuredRing& r) {
    for (std::size_t i = 0; i < r.components.size(); ++i)
        for (std::size_t j = i + 1; j < r.components.size(); ++j)
            if (r.components[i].prime == r.components[j].prime) return false;
    return !r.is_zero_ring();
}

bool is_m_ideal_zn(const StructuredRing& r, const StructuredIdeal& e) {
    if (!zn_closed_form_applies(r))
        throw std::domain_error("closed form needs pairwise distinct primes");
    FactoredInteger f;
    f.value = r.cardinality();
    f.factors = r.components;
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    // Exponents must be permuted the same way.
    ExponentVector sorted(e.size());
    std::vector<std::size_t> perm(e.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return r.components[a].prime < r.components[b].prime;
    });
    for (std::size_t i = 0; i < perm.size(); ++i) sorted[i] = e[perm[i]];
    return is_m_ideal_zn(f, sorted);
}

SubringRelative::Entry& SubringRelative::entry(MaskLattice::Id j) {
    auto it = cache_.find(j);
    if (it == cache_.end()) {
        Subring sub = subring_of_ideal(base_->ring(), base_->mask(j));
        MaskLattice lat(sub.ring);
        it = cache_.emplace(j, Entry{std::move(sub), std::move(lat)}).first;
    }
    return it->second;
}

const MaskLattice& SubringRelative::sublattice(MaskLattice::Id j) { return entry(j).lat; }

MaskLattice::Id SubringRelative::to_sub(MaskLattice::Id j, MaskLattice::Id i) {
    Entry& e = entry(j);
    Bitset sub(e.sub.ring.size());
    for (int x : base_->mask(i).elements()) sub.set(e.sub.from_parent(x));
    return e.lat.id_of(sub);
}

bool SubringRelative::essential_in(MaskLattice::Id i, MaskLattice::Id j) {
    if (base_->is_zero(j)) return true;  // i = j = 0; vacuously essential in the zero ring
    Entry& e = entry(j);
    return is_essential_checked(e.lat, to_sub(j, i)).value;
}

bool SubringRelative::m_ideal_in(MaskLattice::Id i, MaskLattice::Id j) {
    if (base_->is_zero(j)) return true;
    Entry& e = entry(j);
    return is_m_ideal_oracle(e.lat, to_sub(j, i)).value;
}

RelativeChecker<MaskLattice> SubringRelative::checker() {
    RelativeChecker<MaskLattice> rc;
    rc.essential_in = [this](MaskLattice::Id i, MaskLattice::Id j) { return essential_in(i, j); };
    rc.m_ideal_in = [this](MaskLattice::Id i, MaskLattice::Id j) { return m_ideal_in(i, j); };
    return rc;
}

ProductClass classify_product(
    const std::vector<std::pair<StructuredRing, StructuredIdeal>>& slots) {
    if (slots.size() < 2)
        throw std::domain_error("classify_product: needs at least two factors");
    std::vector<ChainProductLattice> lats;
    std::vector<ChainProductLattice::Id> ids;
    int nonzero = 0, last_nonzero = -1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        lats.emplace_back(slots[s].first);
        ids.push_back(lats.back().id_of(slots[s].second));
        if (!lats.back().is_zero(ids.back())) {
            ++nonzero;
            last_nonzero = static_cast<int>(s);
        }
    }
    if (nonzero == 0) throw std::domain_error("classify_product: all slot ideals are zero");
    if (nonzero == 1) {
        return is_relatively_irreducible_checked(lats[last_nonzero], ids[last_nonzero]).value
                   ? ProductClass::SingleSlotIrreducible
                   : ProductClass::NotMIdeal;
    }
    if (nonzero < static_cast<int>(slots.size())) return ProductClass::NotMIdeal;
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (!is_essential_checked(lats[s], ids[s]).value) return ProductClass::NotMIdeal;
    return ProductClass::EssentialProduct;
}

bool atom_is_simple_ring(const ChainProductLattice& lat, ChainProductLattice::Id atom) {
    // The atom lives in one component, one step below zero; it is the
    // prime field exactly when that component is Z_p.
    StructuredIdeal e = lat.ideal(atom);
    const auto& comps = lat.ring().components;
    int lowered = -1;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == comps[j].exponent) continue;
        if (e[j] != comps[j].exponent - 1 || lowered >= 0)
            throw std::domain_error("atom_is_simple_ring: not an atom");
        lowered = static_cast<int>(j);
    }
    if (lowered < 0) throw std::domain_error("atom_is_simple_ring: not an atom");
    return comps[lowered].exponent == 1;
}

bool atom_is_simple_ring(const MaskLattice& lat, MaskLattice::Id atom) {
    if (lat.is_zero(atom)) throw std::domain_error("atom_is_simple_ring: not an atom");
    const Bitset& m = lat.mask(atom);
    const TableRing& r = lat.ring();
    auto elems = m.elements();
    bool nonzero_product = false;
    for (int a : elems) {
        for (int b : elems)
            if (r.mul(a, b) != r.zero()) {
                nonzero_product = true;
                break;
            }
        if (nonzero_product) break;
    }
    if (!nonzero_product) return false;
    Subring sub = subring_of_ideal(r, m);
    MaskLattice sublat(sub.ring);
    return sublat.size() == 2;
}

Bitset transport_matrix_ideal(const TableRing& base, int k, TransportDirection dir,
                              const Bitset& ideal) {
    if (dir == TransportDirection::ToMatrix) return matrix_mask_of(base, k, ideal);
    Bitset entries = entry_set_of_matrix_mask(base, k, ideal);
    if (!(matrix_mask_of(base, k, entries) == ideal))
        throw std::logic_error("transport_matrix_ideal: mask is not of matrix form");
    return entries;
}

namespace {

template <class L>
void fill_common(const L& lat, typename L::Id a, ClassificationReport& rep,
                 const RelativeChecker<L>& rel) {
    rep.ideal = lat.label(a);
    rep.cardinality = lat.cardinality(a);
    rep.is_zero = lat.is_zero(a);
    rep.is_whole = a == lat.top();

    auto ess = is_essential_checked(lat, a);
    rep.essential = ess.value;
    auto rirr = is_relatively_irreducible_checked(lat, a);
    rep.relatively_irreducible = rirr.value;
    auto mini = is_minimal_checked(lat, a);
    rep.minimal = mini.value;
    auto maxi = is_maximal_checked(lat, a);
    rep.maximal = maxi.value;
    auto oracle = is_m_ideal_oracle(lat, a);
    bool dichotomy = rep.essential || rep.relatively_irreducible;
    if (oracle.value != dichotomy)
        throw std::logic_error("m-ideal routes disagree on " + rep.ideal + " in a " +
                               std::to_string(lat.size()) + "-ideal lattice");
    rep.m_ideal = oracle.value;
    rep.m_ideal_methods = {"oracle", "dichotomy"};
    // Fast paths must match their definitional versions.
    if (is_essential(lat, a) != rep.essential ||
        is_relatively_irreducible(lat, a) != rep.relatively_irreducible)
        throw std::logic_error("fast-path predicate mismatch on " + rep.ideal);

    auto summ = is_direct_summand(lat, a);
    rep.direct_summand = summ.value;
    auto eclosed = is_essentially_closed(lat, a, rel);
    rep.essentially_closed = eclosed.value;
    auto mclosed = is_m_closed(lat, a, rel);
    rep.m_closed = mclosed.value;

    auto put = [&](const char* key, const std::vector<typename L::Id>& w) {
        if (w.empty()) return;
        std::vector<std::string> labels;
        for (auto id : w) labels.push_back(lat.label(id));
        rep.witnesses[key] = std::move(labels);
    };
    if (!ess.value) put("essential", ess.witness);
    if (!rirr.value) put("relatively_irreducible", rirr.witness);
    if (!oracle.value) put("m_ideal", oracle.witness);
    if (!mini.value) put("minimal", mini.witness);
    if (!maxi.value) put("maximal", maxi.witness);
    if (summ.value) put("direct_summand_complement", summ.witness);
    if (!eclosed.value) put("essentially_closed", eclosed.witness);
    if (!mclosed.value) put("m_closed", mclosed.witness);
}

}  // namespace

ClassificationReport classify_ideal(const ChainProductLattice& lat, ChainProductLattice::Id a) {
    ClassificationReport rep;
    fill_common(lat, a, rep, relative_via_interval(lat));
    rep.exponents = lat.ideal(a);
    if (zn_closed_form_applies(lat.ring())) {
        rep.generator = lat.ring().ideal_generator(rep.exponents);
        bool closed = is_m_ideal_zn(lat.ring(), rep.exponents);
        if (closed != rep.m_ideal)
            throw std::logic_error("closed form disagrees with oracle on " + rep.ideal);
        rep.m_ideal_methods.push_back("closed-form");
    }
    return rep;
}

ClassificationReport classify_ideal(const MaskLattice& lat, MaskLattice::Id a,
                                    SubringRelative* cache) {
    ClassificationReport rep;
    SubringRelative local(lat);
    SubringRelative* sr = cache ? cache : &local;
    fill_common(lat, a, rep, sr->checker());
    auto interval = relative_via_interval(lat);
    rep.essentially_closed_interval = is_essentially_closed(lat, a, interval).value;
    rep.m_closed_interval = is_m_closed(lat, a, interval).value;
    return rep;
}

}  // namespace midealkit
