#include "midealkit/table_ring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace midealkit {

namespace {

std::string triple_msg(const std::string& what, std::array<int, 3> w) {
    std::ostringstream os;
    os << what << " [witness " << w[0] << "," << w[1] << "," << w[2] << "]";
    return os.str();
}

[[noreturn]] void fail(TableAxiomError::Kind k, std::array<int, 3> w, const std::string& what) {
    throw TableAxiomError(k, w, triple_msg(what, w));
}

}  // namespace

int TableRing::integer_multiple(std::int64_t t, int x) const {
    t %= characteristic_;
    if (t < 0) t += characteristic_;
    int acc = zero_;
    for (std::int64_t i = 0; i < t; ++i) acc = add(acc, x);
    return acc;
}

TableRing validate_table(const RawTables& raw) {
    const int n = raw.size;
    if (n <= 0) throw TableAxiomError(TableAxiomError::Kind::Shape, {0, 0, 0},
                                      "table size must be positive");
    auto check_shape = [&](const std::vector<std::vector<int>>& t, const char* which) {
        if (static_cast<int>(t.size()) != n)
            fail(TableAxiomError::Kind::Shape, {0, 0, 0}, std::string(which) + " table row count");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(t[i].size()) != n)
                fail(TableAxiomError::Kind::Shape, {i, 0, 0}, std::string(which) + " table row length");
            for (int j = 0; j < n; ++j)
                if (t[i][j] < 0 || t[i][j] >= n)
                    fail(TableAxiomError::Kind::Shape, {i, j, t[i][j]},
                         std::string(which) + " entry out of range");
        }
    };
    check_shape(raw.add, "add");
    check_shape(raw.mul, "mul");
    if (raw.zero < 0 || raw.zero >= n)
        fail(TableAxiomError::Kind::Shape, {raw.zero, 0, 0}, "zero index out of range");

    TableRing r;
    r.n_ = n;
    r.zero_ = raw.zero;
    r.name_ = raw.name;
    r.add_.resize(static_cast<std::size_t>(n) * n);
    r.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.add_[static_cast<std::size_t>(i) * n + j] = raw.add[i][j];
            r.mul_[static_cast<std::size_t>(i) * n + j] = raw.mul[i][j];
        }
    const int z = r.zero_;

    for (int x = 0; x < n; ++x) {
        if (r.add(z, x) != x || r.add(x, z) != x)
            fail(TableAxiomError::Kind::AddIdentity, {z, x, r.add(z, x)},
                 "declared zero is not an additive identity");
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (r.add(x, y) != r.add(y, x))
                fail(TableAxiomError::Kind::AddCommutative, {x, y, 0}, "addition not commutative");
    r.neg_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (r.add(x, y) == z) {
                r.neg_[x] = y;
                break;
            }
        if (r.neg_[x] < 0)
            fail(TableAxiomError::Kind::AddInverse, {x, 0, 0}, "element has no additive inverse");
    }

    // Small additive generating set: greedily adjoin the least element not
    // yet reachable, then re-close.  For a genuine group each generator at
    // least doubles the span.
    std::vector<int> gens;
    {
        std::vector<char> seen(n, 0);
        std::vector<int> reach{z};
        seen[z] = 1;
        while (static_cast<int>(reach.size()) < n) {
            int g = 0;
            while (seen[g]) ++g;
            gens.push_back(g);
            if (!seen[g]) {
                seen[g] = 1;
                reach.push_back(g);
            }
            for (std::size_t i = 0; i < reach.size(); ++i)
                for (int s : gens) {
                    int y = r.add(reach[i], s);
                    if (!seen[y]) {
                        seen[y] = 1;
                        reach.push_back(y);
                    }
                }
        }
    }
    r.add_gens_ = gens;

    // Light's test: associativity on generator-pinned triples implies
    // associativity everywhere once the pins generate.
    {
        std::vector<int> pins = gens;
        pins.push_back(z);
        for (int s : pins)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (r.add(r.add(x, s), y) != r.add(x, r.add(s, y)))
                        fail(TableAxiomError::Kind::AddAssociative, {x, s, y},
                             "addition not associative");
    }

    // 0*x = x*0 = 0 is the base case of the distributive expansion; a
    // violation is a distributivity failure at (0,0,x).
    for (int x = 0; x < n; ++x)
        if (r.mul(z, x) != z || r.mul(x, z) != z)
            fail(TableAxiomError::Kind::Distributive, {z, z, x},
                 "zero does not annihilate under multiplication");

    // (x+s)y = xy + sy and y(x+s) = yx + ys for generators s; with the
    // base case above this pins both distributive laws for all sums.
    for (int s : gens)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (r.mul(r.add(x, s), y) != r.add(r.mul(x, y), r.mul(s, y)))
                    fail(TableAxiomError::Kind::Distributive, {x, s, y},
                         "left distributivity fails");
                if (r.mul(y, r.add(x, s)) != r.add(r.mul(y, x), r.mul(y, s)))
                    fail(TableAxiomError::Kind::Distributive, {y, x, s},
                         "right distributivity fails");
            }

    // With distributivity settled, (ab)c = a(bc) reduces to triples whose
    // outer factors are generators.
    {
        std::vector<int> pins = gens;
        pins.push_back(z);
        for (int s : pins)
            for (int t : pins)
                for (int b = 0; b < n; ++b)
                    if (r.mul(r.mul(s, b), t) != r.mul(s, r.mul(b, t)))
                        fail(TableAxiomError::Kind::MulAssociative, {s, b, t},
                             "multiplication not associative");
    }

    if (raw.unit) {
        int e = *raw.unit;
        if (e < 0 || e >= n)
            fail(TableAxiomError::Kind::UnitClaim, {e, 0, 0}, "unit index out of range");
        for (int x = 0; x < n; ++x)
            if (r.mul(e, x) != x || r.mul(x, e) != x)
                fail(TableAxiomError::Kind::UnitClaim, {e, x, 0},
                     "declared unit is not a two-sided identity");
        r.unit_ = e;
    } else {
        for (int e = 0; e < n && !r.unit_; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) ok = r.mul(e, x) == x && r.mul(x, e) == x;
            if (ok) r.unit_ = e;
        }
    }

    r.commutative_ = true;
    for (int x = 0; x < n && r.commutative_; ++x)
        for (int y = x + 1; y < n; ++y)
            if (r.mul(x, y) != r.mul(y, x)) {
                r.commutative_ = false;
                break;
            }

    // Exponent of the additive group: lcm of the generator orders.
    std::int64_t c = 1;
    for (int g : gens) {
        std::int64_t ord = 1;
        int y = g;
        while (y != z) {
            y = r.add(y, g);
            ++ord;
        }
        c = std::lcm(c, ord);
    }
    r.characteristic_ = c;
    return r;
}

namespace {

struct MixedRadix {
    std::vector<std::int64_t> radix;
    std::vector<std::vector<int>> digits;  // element -> tuple

    MixedRadix(const std::vector<std::int64_t>& q, int n) : radix(q) {
        digits.assign(n, std::vector<int>(q.size()));
        for (int x = 0; x < n; ++x) {
            std::int64_t v = x;
            for (std::size_t j = 0; j < q.size(); ++j) {
                digits[x][j] = static_cast<int>(v % q[j]);
                v /= q[j];
            }
        }
    }
    int encode(const std::vector<int>& t) const {
        std::int64_t v = 0, stride = 1;
        for (std::size_t j = 0; j < radix.size(); ++j) {
            v += t[j] * stride;
            stride *= radix[j];
        }
        return static_cast<int>(v);
    }
};

}  // namespace

TableRing to_table(const StructuredRing& r, std::int64_t cap) {
    std::int64_t card = r.cardinality();
    if (card > cap)
        throw SizeCapError("to_table: cardinality " + std::to_string(card) +
                           " exceeds cap " + std::to_string(cap));
    const int n = static_cast<int>(card);
    std::vector<std::int64_t> q;
    for (const auto& c : r.components) q.push_back(c.value());
    MixedRadix mr(q, n);

    RawTables raw;
    raw.size = n;
    raw.zero = 0;
    raw.name = r.origin;
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    std::vector<int> t(q.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < q.size(); ++j)
                t[j] = static_cast<int>((mr.digits[a][j] + mr.digits[b][j]) % q[j]);
            raw.add[a][b] = mr.encode(t);
            for (std::size_t j = 0; j < q.size(); ++j)
                t[j] = static_cast<int>((static_cast<std::int64_t>(mr.digits[a][j]) *
                                         mr.digits[b][j]) % q[j]);
            raw.mul[a][b] = mr.encode(t);
        }
    if (n > 1) {
        for (std::size_t j = 0; j < q.size(); ++j) t[j] = 1;
        raw.unit = mr.encode(t);
    } else {
        raw.unit = 0;
    }
    return validate_table(raw);
}

Bitset mask_of_ideal(const StructuredRing& r, const StructuredIdeal& e) {
    if (!r.is_valid_ideal(e)) throw std::domain_error("mask_of_ideal: invalid ideal");
    const int n = static_cast<int>(r.cardinality());
    std::vector<std::int64_t> q, pe;
    for (std::size_t j = 0; j < r.components.size(); ++j) {
        q.push_back(r.components[j].value());
        pe.push_back(PrimePower{r.components[j].prime, e[j]}.value());
    }
    MixedRadix mr(q, n);
    Bitset mask(n);
    for (int x = 0; x < n; ++x) {
        bool in = true;
        for (std::size_t j = 0; j < q.size() && in; ++j) in = mr.digits[x][j] % pe[j] == 0;
        if (in) mask.set(x);
    }
    return mask;
}

TableRing make_matrix_ring(const TableRing& base, int k, std::int64_t cap) {
    if (!base.unital()) throw std::domain_error("make_matrix_ring: base ring must be unital");
    if (k < 1) throw std::domain_error("make_matrix_ring: k must be >= 1");
    const int nb = base.size();
    std::int64_t card = 1;
    for (int i = 0; i < k * k; ++i) {
        card *= nb;
        if (card > cap)
            throw SizeCapError("make_matrix_ring: size exceeds cap " + std::to_string(cap));
    }
    const int n = static_cast<int>(card);
    std::vector<std::int64_t> q(static_cast<std::size_t>(k) * k, nb);
    MixedRadix mr(q, n);

    RawTables raw;
    raw.size = n;
    raw.name = "mat:" + std::to_string(k) + ":" + base.name();
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    std::vector<int> t(q.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& da = mr.digits[a];
            const auto& db = mr.digits[b];
            for (std::size_t e = 0; e < q.size(); ++e) t[e] = base.add(da[e], db[e]);
            raw.add[a][b] = mr.encode(t);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    int acc = base.zero();
                    for (int m = 0; m < k; ++m)
                        acc = base.add(acc, base.mul(da[i * k + m], db[m * k + j]));
                    t[i * k + j] = acc;
                }
            raw.mul[a][b] = mr.encode(t);
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            t[i * k + j] = i == j ? *base.unit() : base.zero();
    raw.unit = mr.encode(t);
    for (auto& e : t) e = base.zero();
    raw.zero = mr.encode(t);
    return validate_table(raw);
}

TableRing make_table_product(const std::vector<TableRing>& factors, std::int64_t cap) {
    if (factors.empty()) throw std::domain_error("make_table_product: empty factor list");
    std::int64_t card = 1;
    for (const auto& f : factors) {
        card *= f.size();
        if (card > cap) throw SizeCapError("make_table_product: size exceeds cap");
    }
    const int n = static_cast<int>(card);
    std::vector<std::int64_t> q;
    for (const auto& f : factors) q.push_back(f.size());
    MixedRadix mr(q, n);

    RawTables raw;
    raw.size = n;
    raw.name = "prod-table";
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    std::vector<int> t(factors.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < factors.size(); ++j)
                t[j] = factors[j].add(mr.digits[a][j], mr.digits[b][j]);
            raw.add[a][b] = mr.encode(t);
            for (std::size_t j = 0; j < factors.size(); ++j)
                t[j] = factors[j].mul(mr.digits[a][j], mr.digits[b][j]);
            raw.mul[a][b] = mr.encode(t);
        }
    for (std::size_t j = 0; j < factors.size(); ++j) t[j] = factors[j].zero();
    raw.zero = mr.encode(t);
    if (std::all_of(factors.begin(), factors.end(),
                    [](const TableRing& f) { return f.unital(); })) {
        for (std::size_t j = 0; j < factors.size(); ++j) t[j] = *factors[j].unit();
        raw.unit = mr.encode(t);
    }
    return validate_table(raw);
}

Bitset matrix_mask_of(const TableRing& base, int k, const Bitset& entries) {
    const int nb = base.size();
    std::int64_t n = 1;
    for (int i = 0; i < k * k; ++i) n *= nb;
    std::vector<std::int64_t> q(static_cast<std::size_t>(k) * k, nb);
    MixedRadix mr(q, static_cast<int>(n));
    Bitset out(static_cast<int>(n));
    for (int x = 0; x < static_cast<int>(n); ++x) {
        bool in = true;
        for (std::size_t e = 0; e < q.size() && in; ++e) in = entries.test(mr.digits[x][e]);
        if (in) out.set(x);
    }
    return out;
}

Bitset entry_set_of_matrix_mask(const TableRing& base, int k, const Bitset& matrices) {
    const int nb = base.size();
    std::vector<std::int64_t> q(static_cast<std::size_t>(k) * k, nb);
    MixedRadix mr(q, matrices.universe_size());
    Bitset entries(nb);
    for (int x : matrices.elements())
        for (std::size_t e = 0; e < q.size(); ++e) entries.set(mr.digits[x][e]);
    return entries;
}

Unitization make_unitization(const TableRing& r, std::int64_t cap) {
    if (r.size() == 1)
        throw std::domain_error("make_unitization: degenerate one-element ring");
    const int nb = r.size();
    const int c = static_cast<int>(r.characteristic());
    const std::int64_t card = static_cast<std::int64_t>(c) * nb;
    if (card > cap)
        throw SizeCapError("make_unitization: size exceeds cap " + std::to_string(cap));
    const int n = static_cast<int>(card);

    // smul[t][x] = t-fold sum of x
    std::vector<std::vector<int>> smul(c, std::vector<int>(nb));
    for (int x = 0; x < nb; ++x) smul[0][x] = r.zero();
    for (int t = 1; t < c; ++t)
        for (int x = 0; x < nb; ++x) smul[t][x] = r.add(smul[t - 1][x], x);

    auto idx = [&](int a, int x) { return a * nb + x; };
    RawTables raw;
    raw.size = n;
    raw.zero = idx(0, r.zero());
    raw.unit = idx(1 % c, r.zero());
    raw.name = "unitization:" + r.name();
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < c; ++a)
        for (int x = 0; x < nb; ++x)
            for (int b = 0; b < c; ++b)
                for (int y = 0; y < nb; ++y) {
                    raw.add[idx(a, x)][idx(b, y)] = idx((a + b) % c, r.add(x, y));
                    int xy = r.add(r.add(smul[a][y], smul[b][x]), r.mul(x, y));
                    raw.mul[idx(a, x)][idx(b, y)] = idx((a * b) % c, xy);
                }

    Unitization u{validate_table(raw), r.unital(), Bitset(n)};
    for (int x = 0; x < nb; ++x) u.base_copy.set(x);
    return u;
}

bool is_ideal_mask(const TableRing& r, const Bitset& mask) {
    if (mask.universe_size() != r.size() || !mask.test(r.zero())) return false;
    auto elems = mask.elements();
    for (int x : elems) {
        if (!mask.test(r.neg(x))) return false;
        for (int y : elems)
            if (!mask.test(r.add(x, y))) return false;
        for (int t = 0; t < r.size(); ++t)
            if (!mask.test(r.mul(t, x)) || !mask.test(r.mul(x, t))) return false;
    }
    return true;
}

int Subring::from_parent(int parent_elem) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_elem);
    if (it == to_parent.end() || *it != parent_elem)
        throw std::domain_error("from_parent: element not in subring");
    return static_cast<int>(it - to_parent.begin());
}

Subring subring_of_ideal(const TableRing& r, const Bitset& ideal) {
    if (!ideal.test(r.zero())) throw std::domain_error("subring_of_ideal: zero missing");
    Subring s;
    s.to_parent = ideal.elements();  // ascending
    const int n = static_cast<int>(s.to_parent.size());
    std::vector<int> back(r.size(), -1);
    for (int i = 0; i < n; ++i) back[s.to_parent[i]] = i;

    RawTables raw;
    raw.size = n;
    raw.zero = back[r.zero()];
    raw.name = r.name() + "|sub";
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = r.add(s.to_parent[i], s.to_parent[j]);
            int m = r.mul(s.to_parent[i], s.to_parent[j]);
            if (back[a] < 0 || back[m] < 0)
                throw std::domain_error("subring_of_ideal: subset is not closed");
            raw.add[i][j] = back[a];
            raw.mul[i][j] = back[m];
        }
    s.ring = validate_table(raw);
    return s;
}

TableQuotient make_quotient(const TableRing& r, const Bitset& k) {
    if (!is_ideal_mask(r, k)) throw std::domain_error("make_quotient: not an ideal");
    const int n = r.size();
    TableQuotient q;
    q.projection.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (q.projection[x] >= 0) continue;
        int cls = static_cast<int>(q.representative.size());
        q.representative.push_back(x);
        for (int d : k.elements()) q.projection[r.add(x, d)] = cls;
        if (q.projection[x] != cls)
            throw std::logic_error("make_quotient: coset partition broken");
    }
    const int m = static_cast<int>(q.representative.size());
    RawTables raw;
    raw.size = m;
    raw.zero = q.projection[r.zero()];
    raw.name = r.name() + "/K";
    if (r.unital()) raw.unit = q.projection[*r.unit()];
    raw.add.assign(m, std::vector<int>(m));
    raw.mul.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            raw.add[i][j] = q.projection[r.add(q.representative[i], q.representative[j])];
            raw.mul[i][j] = q.projection[r.mul(q.representative[i], q.representative[j])];
        }
    q.ring = validate_table(raw);
    return q;
}

Bitset TableQuotient::push_forward(const TableRing& parent, const Bitset& ideal) const {
    (void)parent;
    Bitset out(ring.size());
    for (int x : ideal.elements()) out.set(projection[x]);
    return out;
}

std::string table_ring_to_json(const TableRing& r) {
    nlohmann::json j;
    j["size"] = r.size();
    j["zero"] = r.zero();
    if (r.unit())
        j["unit"] = *r.unit();
    else
        j["unit"] = nullptr;
    auto dump = [&](auto get) {
        std::vector<std::vector<int>> t(r.size(), std::vector<int>(r.size()));
        for (int i = 0; i < r.size(); ++i)
            for (int k2 = 0; k2 < r.size(); ++k2) t[i][k2] = get(i, k2);
        return t;
    };
    j["add"] = dump([&](int a, int b) { return r.add(a, b); });
    j["mul"] = dump([&](int a, int b) { return r.mul(a, b); });
    j["name"] = r.name();
    return j.dump();
}

TableRing table_ring_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RawTables raw;
    raw.size = j.at("size").get<int>();
    raw.zero = j.at("zero").get<int>();
    if (j.contains("unit") && !j.at("unit").is_null()) raw.unit = j.at("unit").get<int>();
    raw.add = j.at("add").get<std::vector<std::vector<int>>>();
    raw.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    raw.name = j.value("name", std::string("table"));
    return validate_table(raw);
}

TableRing load_table_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table-ring file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return table_ring_from_json(ss.str());
}

void save_table_ring(const TableRing& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write table-ring file: " + path);
    out << table_ring_to_json(r) << "\n";
}

}  // namespace midealkit
