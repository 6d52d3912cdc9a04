#include "midealkit/ringspec.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace midealkit {

namespace {

std::int64_t parse_int(const std::string& text, std::size_t base_pos) {
    if (text.empty()) throw RingSpecError(base_pos, "expected an integer");
    for (char c : text)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw RingSpecError(base_pos, "expected an integer, got '" + text + "'");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size())
        throw RingSpecError(base_pos, "integer out of range: '" + text + "'");
    return v;
}

std::vector<std::pair<std::string, std::size_t>> split_commas(const std::string& s,
                                                              std::size_t base_pos) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            parts.emplace_back(s.substr(start, i - start), base_pos + start);
            start = i + 1;
        }
    }
    return parts;
}

RingSpecNode parse_at(const std::string& s, std::size_t base_pos) {
    RingSpecNode node;
    node.text = s;
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw RingSpecError(base_pos, "expected zn:/prod:/mat:/table:/quot:");
    std::string head = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    std::size_t rest_pos = base_pos + colon + 1;
    if (head == "zn") {
        node.kind = RingSpecNode::Kind::Zn;
        node.n = parse_int(rest, rest_pos);
        if (node.n < 2) throw RingSpecError(rest_pos, "zn modulus must be >= 2");
    } else if (head == "prod") {
        node.kind = RingSpecNode::Kind::Prod;
        auto parts = split_commas(rest, rest_pos);
        if (parts.size() < 1 || parts[0].first.empty())
            throw RingSpecError(rest_pos, "prod needs at least one factor");
        for (auto& [part, pos] : parts) {
            if (part.empty()) throw RingSpecError(pos, "empty prod factor");
            node.children.push_back(parse_at(part, pos));
        }
    } else if (head == "mat") {
        node.kind = RingSpecNode::Kind::Mat;
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw RingSpecError(rest_pos, "mat needs mat:<k>:<spec>");
        node.k = static_cast<int>(parse_int(rest.substr(0, colon2), rest_pos));
        if (node.k < 1) throw RingSpecError(rest_pos, "matrix size must be >= 1");
        node.children.push_back(parse_at(rest.substr(colon2 + 1), rest_pos + colon2 + 1));
    } else if (head == "table") {
        node.kind = RingSpecNode::Kind::Table;
        if (rest.empty()) throw RingSpecError(rest_pos, "table needs a file path");
        node.path = rest;
    } else if (head == "quot") {
        node.kind = RingSpecNode::Kind::Quot;
        auto slash = rest.rfind('/');
        if (slash == std::string::npos || slash + 1 == rest.size())
            throw RingSpecError(rest_pos, "quot needs quot:<spec>/<ideal>");
        node.children.push_back(parse_at(rest.substr(0, slash), rest_pos));
        node.quot_ideal = rest.substr(slash + 1);
    } else {
        throw RingSpecError(base_pos, "unknown ring kind '" + head + "'");
    }
    return node;
}

}  // namespace

RingSpecNode parse_ring_spec(const std::string& text) { return parse_at(text, 0); }

Caps Caps::from_env() {
    Caps caps;
    if (const char* env = std::getenv("MIDEALKIT_CAP")) {
        std::string s(env);
        auto comma = s.find(',');
        try {
            if (comma == std::string::npos) {
                caps.table_elements = std::stoll(s);
            } else {
                caps.table_elements = std::stoll(s.substr(0, comma));
                caps.lattice_ideals = std::stoi(s.substr(comma + 1));
            }
        } catch (const std::exception&) {
            throw std::runtime_error("MIDEALKIT_CAP must be 'E' or 'E,L'");
        }
    }
    return caps;
}

RingHandle RingHandle::realize(const std::string& spec, const Caps& caps) {
    RingHandle h = realize(parse_ring_spec(spec), caps);
    h.spec_text_ = spec;
    return h;
}

RingHandle RingHandle::realize(const RingSpecNode& node, const Caps& caps) {
    RingHandle h;
    h.caps_ = caps;
    h.spec_text_ = node.text;
    switch (node.kind) {
        case RingSpecNode::Kind::Zn: {
            h.structured_ = make_zn(node.n);
            h.leaves_.push_back({factorize(node.n), 0});
            break;
        }
        case RingSpecNode::Kind::Prod: {
            std::vector<RingHandle> factors;
            bool all_structured = true;
            for (const auto& c : node.children) {
                factors.push_back(realize(c, caps));
                all_structured = all_structured && factors.back().is_structured();
            }
            if (all_structured) {
                std::vector<StructuredRing> rs;
                int offset = 0;
                for (auto& f : factors) {
                    rs.push_back(f.structured());
                    for (auto leaf : f.leaves_) {
                        leaf.first_component += offset;
                        h.leaves_.push_back(leaf);
                    }
                    offset += f.structured().component_count();
                }
                h.structured_ = make_product(rs);
            } else {
                std::vector<TableRing> ts;
                for (auto& f : factors)
                    ts.push_back(f.is_structured() ? to_table(f.structured(), caps.table_elements)
                                                   : f.table());
                h.table_ = make_table_product(ts, caps.table_elements);
                h.table_->rename(node.text);
            }
            break;
        }
        case RingSpecNode::Kind::Mat: {
            RingHandle base = realize(node.children[0], caps);
            const TableRing base_table =
                base.is_structured() ? to_table(base.structured(), caps.table_elements)
                                     : base.table();
            h.table_ = make_matrix_ring(base_table, node.k, caps.table_elements);
            h.table_->rename(node.text);
            break;
        }
        case RingSpecNode::Kind::Table: {
            h.table_ = load_table_ring(node.path);
            break;
        }
        case RingSpecNode::Kind::Quot: {
            RingHandle base = realize(node.children[0], caps);
            int ideal = base.parse_ideal(node.quot_ideal);
            if (base.is_structured()) {
                StructuredQuotient q = make_quotient(
                    base.structured(), base.chain_lattice().ideal(ideal));
                if (q.ring.is_zero_ring())
                    throw std::domain_error("quotient by the whole ring is the zero ring; "
                                            "no classification is defined for it");
                h.structured_ = q.ring;
                for (std::size_t j = 0; j < q.ring.components.size(); ++j) {
                    FactoredInteger f;
                    f.value = q.ring.components[j].value();
                    f.factors = {q.ring.components[j]};
                    h.leaves_.push_back({f, static_cast<int>(j)});
                }
            } else {
                TableQuotient q = make_quotient(base.table(),
                                                base.mask_lattice().mask(ideal));
                if (q.ring.size() == 1)
                    throw std::domain_error("quotient by the whole ring is the zero ring; "
                                            "no classification is defined for it");
                h.table_ = q.ring;
                h.table_->rename(node.text);
            }
            break;
        }
    }
    return h;
}

RingHandle RingHandle::wrap(StructuredRing r, const Caps& caps) {
    RingHandle h;
    h.caps_ = caps;
    h.spec_text_ = r.origin;
    for (std::size_t j = 0; j < r.components.size(); ++j) {
        FactoredInteger f;
        f.value = r.components[j].value();
        f.factors = {r.components[j]};
        h.leaves_.push_back({f, static_cast<int>(j)});
    }
    h.structured_ = std::move(r);
    return h;
}

RingHandle RingHandle::wrap(TableRing r, const Caps& caps) {
    RingHandle h;
    h.caps_ = caps;
    h.spec_text_ = r.name();
    h.table_ = std::move(r);
    return h;
}

const ChainProductLattice& RingHandle::chain_lattice() const {
    if (!is_structured()) throw std::logic_error("chain_lattice on a table ring");
    if (!chain_) chain_ = std::make_shared<ChainProductLattice>(*structured_, caps_.lattice_ideals);
    return *chain_;
}

const MaskLattice& RingHandle::mask_lattice() const {
    if (is_structured()) {
        if (!mask_)
            mask_ = std::make_shared<MaskLattice>(to_table(*structured_, caps_.table_elements),
                                                  caps_.lattice_ideals);
        return *mask_;
    }
    if (!mask_) mask_ = std::make_shared<MaskLattice>(*table_, caps_.lattice_ideals);
    return *mask_;
}

int RingHandle::parse_ideal(const std::string& text) const {
    if (text.empty()) throw std::domain_error("empty ideal argument");
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == ',') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    if (is_structured()) {
        const StructuredRing& r = *structured_;
        StructuredIdeal e(r.components.size(), 0);
        if (parts.size() == 1 && leaves_.size() != 1) {
            // Single generator across the whole ring; needs distinct primes.
            if (!zn_closed_form_applies(r))
                throw std::domain_error(
                    "single-generator ideal needs pairwise distinct primes; give one "
                    "generator per factor instead");
            std::int64_t g = parse_int(parts[0], 0);
            for (std::size_t j = 0; j < r.components.size(); ++j) {
                if (g == 0) {
                    e[j] = r.components[j].exponent;
                    continue;
                }
                std::int64_t rest = g;
                int v = 0;
                while (v < r.components[j].exponent && rest % r.components[j].prime == 0) {
                    rest /= r.components[j].prime;
                    ++v;
                }
                e[j] = v;
            }
        } else {
            if (parts.size() != leaves_.size())
                throw std::domain_error("expected " + std::to_string(leaves_.size()) +
                                        " comma-separated generators, got " +
                                        std::to_string(parts.size()));
            for (std::size_t l = 0; l < leaves_.size(); ++l) {
                std::int64_t g = parse_int(parts[l], 0);
                ExponentVector le = ideal_from_generator(leaves_[l].modulus, g % leaves_[l].modulus.value);
                for (std::size_t j = 0; j < le.size(); ++j)
                    e[leaves_[l].first_component + j] = le[j];
            }
        }
        return chain_lattice().id_of(e);
    }
    std::vector<int> gens;
    for (const auto& p : parts) gens.push_back(static_cast<int>(parse_int(p, 0)));
    Bitset mask = generated_ideal(table(), gens);
    return mask_lattice().id_of(mask);
}

std::string RingHandle::ideal_label(int id) const {
    return is_structured() ? chain_lattice().label(id) : mask_lattice().label(id);
}

}  // namespace midealkit
