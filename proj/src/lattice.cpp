#include "midealkit/lattice.hpp"

#include <algorithm>

namespace midealkit {

ChainProductLattice::ChainProductLattice(StructuredRing r, int cap) : ring_(std::move(r)) {
    if (ring_.is_zero_ring())
        throw std::domain_error("ideal lattice of the one-element ring is degenerate");
    std::int64_t size = 1;
    for (const auto& c : ring_.components) {
        caps_.push_back(c.exponent);
        size *= c.exponent + 1;
        if (size > cap)
            throw SizeCapError("ideal lattice larger than cap " + std::to_string(cap));
    }
    size_ = static_cast<int>(size);
    stride_.resize(caps_.size());
    int s = 1;
    for (std::size_t j = 0; j < caps_.size(); ++j) {
        stride_[j] = s;
        s *= caps_[j] + 1;
    }
    zero_ = id_of(ring_.zero_ideal());

    card_.resize(size_);
    for (Id a = 0; a < size_; ++a) card_[a] = ring_.ideal_cardinality(ideal(a));
    order_.resize(size_);
    for (Id a = 0; a < size_; ++a) order_[a] = a;
    std::sort(order_.begin(), order_.end(), [&](Id a, Id b) {
        if (card_[a] != card_[b]) return card_[a] > card_[b];
        return ideal(a) < ideal(b);
    });
}

ChainProductLattice::Id ChainProductLattice::meet(Id a, Id b) const {
    Id out = 0;
    for (std::size_t j = 0; j < caps_.size(); ++j) {
        int ea = a / stride_[j] % (caps_[j] + 1);
        int eb = b / stride_[j] % (caps_[j] + 1);
        out += std::max(ea, eb) * stride_[j];
    }
    return out;
}

ChainProductLattice::Id ChainProductLattice::join(Id a, Id b) const {
    Id out = 0;
    for (std::size_t j = 0; j < caps_.size(); ++j) {
        int ea = a / stride_[j] % (caps_[j] + 1);
        int eb = b / stride_[j] % (caps_[j] + 1);
        out += std::min(ea, eb) * stride_[j];
    }
    return out;
}

bool ChainProductLattice::leq(Id a, Id b) const {
    for (std::size_t j = 0; j < caps_.size(); ++j) {
        int ea = a / stride_[j] % (caps_[j] + 1);
        int eb = b / stride_[j] % (caps_[j] + 1);
        if (ea < eb) return false;  // inclusion needs every exponent >=
    }
    return true;
}

StructuredIdeal ChainProductLattice::ideal(Id a) const {
    StructuredIdeal e(caps_.size());
    for (std::size_t j = 0; j < caps_.size(); ++j) e[j] = a / stride_[j] % (caps_[j] + 1);
    return e;
}

ChainProductLattice::Id ChainProductLattice::id_of(const StructuredIdeal& e) const {
    if (!ring_.is_valid_ideal(e)) throw std::domain_error("ideal does not fit this ring");
    Id a = 0;
    for (std::size_t j = 0; j < e.size(); ++j) a += e[j] * stride_[j];
    return a;
}

std::vector<ChainProductLattice::Id> ChainProductLattice::atoms() const {
    std::vector<Id> out;
    for (std::size_t j = 0; j < caps_.size(); ++j) out.push_back(zero_ - stride_[j]);
    std::sort(out.begin(), out.end(), [&](Id a, Id b) {
        if (card_[a] != card_[b]) return card_[a] > card_[b];
        return ideal(a) < ideal(b);
    });
    return out;
}

std::vector<ChainProductLattice::Id> ChainProductLattice::coatoms() const {
    std::vector<Id> out;
    for (std::size_t j = 0; j < caps_.size(); ++j) out.push_back(stride_[j]);
    std::sort(out.begin(), out.end(), [&](Id a, Id b) {
        if (card_[a] != card_[b]) return card_[a] > card_[b];
        return ideal(a) < ideal(b);
    });
    return out;
}

std::vector<std::pair<ChainProductLattice::Id, ChainProductLattice::Id>>
ChainProductLattice::hasse() const {
    // Covers in a product of chains: one exponent drops by one.
    std::vector<std::pair<Id, Id>> edges;
    for (Id a = 0; a < size_; ++a)
        for (std::size_t j = 0; j < caps_.size(); ++j) {
            int ea = a / stride_[j] % (caps_[j] + 1);
            if (ea > 0) edges.emplace_back(a, a - stride_[j]);
        }
    return edges;
}

Bitset additive_closure(const TableRing& r, const std::vector<int>& seed) {
    Bitset in(r.size());
    std::vector<int> members{r.zero()};
    in.set(r.zero());
    for (int g : seed) {
        if (in.test(g)) continue;
        // Extend by the cosets of <g> over the current subgroup.
        std::vector<int> reps;
        int j = g;
        while (!in.test(j)) {
            reps.push_back(j);
            j = r.add(j, g);
        }
        std::size_t snapshot = members.size();
        for (int rep : reps)
            for (std::size_t i = 0; i < snapshot; ++i) {
                int e = r.add(members[i], rep);
                if (!in.test(e)) {
                    in.set(e);
                    members.push_back(e);
                }
            }
    }
    return in;
}

Bitset generated_ideal(const TableRing& r, const std::vector<int>& gens) {
    const int n = r.size();
    Bitset orbit(n);
    std::vector<int> orbit_list;
    auto push = [&](int x) {
        if (!orbit.test(x)) {
            orbit.set(x);
            orbit_list.push_back(x);
        }
    };
    push(r.zero());
    for (int g : gens) {
        if (g < 0 || g >= n) throw std::domain_error("generated_ideal: element out of range");
        // {g} + Rg, then one more right sweep covers gR and RgR; the result
        // is closed under both multiplications, so the additive closure
        // below is already the ideal.
        Bitset lg(n);
        std::vector<int> lg_list{g};
        lg.set(g);
        for (int t = 0; t < n; ++t) {
            int y = r.mul(t, g);
            if (!lg.test(y)) {
                lg.set(y);
                lg_list.push_back(y);
            }
        }
        for (int y : lg_list) {
            push(y);
            for (int t = 0; t < n; ++t) push(r.mul(y, t));
        }
    }
    return additive_closure(r, orbit_list);
}

MaskLattice::MaskLattice(TableRing r, int cap) : ring_(std::move(r)) {
    if (ring_.size() == 1)
        throw std::domain_error("ideal lattice of the one-element ring is degenerate");
    const int n = ring_.size();

    std::vector<Bitset> found;
    std::unordered_map<Bitset, Id, BitsetHash> seen;
    auto add_ideal = [&](const Bitset& m) -> bool {
        if (seen.contains(m)) return false;
        seen.emplace(m, static_cast<Id>(found.size()));
        found.push_back(m);
        if (static_cast<int>(found.size()) > cap)
            throw SizeCapError("ideal lattice larger than cap " + std::to_string(cap));
        return true;
    };

    Bitset zero_mask(n);
    zero_mask.set(ring_.zero());
    add_ideal(zero_mask);
    for (int x = 0; x < n; ++x) add_ideal(generated_ideal(ring_, {x}));

    // Close under pairwise sums; every ideal is a sum of principal ideals.
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Bitset u = found[i] | found[j];
            if (seen.contains(u)) continue;
            add_ideal(additive_closure(ring_, u.elements()));
        }

    // Canonical order: descending size, lexicographic tie-break.
    std::vector<Id> perm(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Id>(i);
    std::sort(perm.begin(), perm.end(), [&](Id a, Id b) {
        int ca = found[a].count(), cb = found[b].count();
        if (ca != cb) return ca > cb;
        return found[a].lex_less(found[b]);
    });
    ideals_.reserve(found.size());
    for (Id p : perm) ideals_.push_back(found[p]);
    index_.clear();
    for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i], static_cast<Id>(i));
    zero_ = index_.at(zero_mask);
    top_ = 0;  // largest ideal sorts first; for a ring with identity this is R
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (ideals_[i].count() == n) top_ = static_cast<Id>(i);

    order_.resize(ideals_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<Id>(i);

    const int t = size();
    join_.assign(static_cast<std::size_t>(t) * t, 0);
    for (Id a = 0; a < t; ++a)
        for (Id b = 0; b <= a; ++b) {
            Bitset u = ideals_[a] | ideals_[b];
            auto it = index_.find(u);
            Id j;
            if (it != index_.end()) {
                j = it->second;
            } else {
                j = index_.at(additive_closure(ring_, u.elements()));
            }
            join_[static_cast<std::size_t>(a) * t + b] = j;
            join_[static_cast<std::size_t>(b) * t + a] = j;
        }
}

MaskLattice::Id MaskLattice::meet(Id a, Id b) const {
    return index_.at(ideals_[a] & ideals_[b]);
}

MaskLattice::Id MaskLattice::id_of(const Bitset& mask) const {
    auto it = index_.find(mask);
    if (it == index_.end()) throw std::domain_error("mask is not an ideal of this ring");
    return it->second;
}

std::string MaskLattice::label(Id a) const {
    const Bitset& m = ideals_[a];
    int c = m.count();
    if (c == 1) return "(0)";
    if (c == ring_.size()) return "(R)";
    // Greedy small generating set for display.
    Bitset span(ring_.size());
    span.set(ring_.zero());
    std::string gens;
    for (int x : m.elements()) {
        if (span.test(x)) continue;
        if (!gens.empty()) gens += ",";
        gens += std::to_string(x);
        std::vector<int> g;
        for (int y : span.elements()) g.push_back(y);
        g.push_back(x);
        span = generated_ideal(ring_, g);
        if (span == m) break;
    }
    return "<" + gens + ">#" + std::to_string(c);
}

std::vector<MaskLattice::Id> MaskLattice::atoms() const {
    std::vector<Id> out;
    for (Id a : order_) {
        if (is_zero(a)) continue;
        bool minimal = true;
        for (Id b = 0; b < size() && minimal; ++b)
            if (b != a && !is_zero(b) && leq(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

std::vector<MaskLattice::Id> MaskLattice::coatoms() const {
    std::vector<Id> out;
    for (Id a : order_) {
        if (a == top_) continue;
        bool maximal = true;
        for (Id b = 0; b < size() && maximal; ++b)
            if (b != a && b != top_ && leq(a, b)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

std::vector<std::pair<MaskLattice::Id, MaskLattice::Id>> MaskLattice::hasse() const {
    std::vector<std::pair<Id, Id>> edges;
    const int t = size();
    for (Id a = 0; a < t; ++a)
        for (Id b = 0; b < t; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (Id c = 0; c < t && cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            if (cover) edges.emplace_back(a, b);
        }
    return edges;
}

}  // namespace midealkit
