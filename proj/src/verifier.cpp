#include "midealkit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "midealkit/complement.hpp"
#include "midealkit/ringspec.hpp"

namespace midealkit {

void parallel_for_index(std::int64_t count, int threads,
                        const std::function<void(std::int64_t)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int k = static_cast<int>(std::min<std::int64_t>(threads, count));
    pool.reserve(k);
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Collector {
    std::int64_t cases = 0;
    std::vector<Counterexample> ces;
    void fail(Counterexample ce) { ces.push_back(std::move(ce)); }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split_token(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == '|') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return parts;
}

std::int64_t tok_int(const std::vector<std::string>& parts, std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("replay token too short");
    return std::stoll(parts[i]);
}

VerificationReport finish(const std::string& suite, const std::string& params,
                          Clock::time_point t0, std::vector<Collector>& slots,
                          std::vector<std::string> flags) {
    VerificationReport rep;
    rep.suite = suite;
    rep.params = params;
    rep.flags = std::move(flags);
    for (auto& s : slots) {
        rep.cases += s.cases;
        for (auto& ce : s.ces) rep.counterexamples.push_back(std::move(ce));
    }
    rep.pass = rep.counterexamples.empty();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return rep;
}

// Sweep n = 2..max_n with one collector slot per n.
template <class F>
VerificationReport n_sweep(const std::string& suite, std::int64_t max_n, int threads,
                           std::vector<std::string> flags, F per_n) {
    auto t0 = Clock::now();
    std::vector<Collector> slots(static_cast<std::size_t>(max_n - 1));
    parallel_for_index(max_n - 1, threads,
                       [&](std::int64_t i) { per_n(i + 2, slots[static_cast<std::size_t>(i)]); });
    return finish(suite, "max_n=" + std::to_string(max_n), t0, slots, std::move(flags));
}

ChainProductLattice zn_lattice(std::int64_t n) { return ChainProductLattice(make_zn(n)); }

std::string zn_name(std::int64_t n) { return "zn:" + std::to_string(n); }

std::int64_t gen_of(const ChainProductLattice& lat, int id) {
    return lat.ring().ideal_generator(lat.ideal(id));
}

int id_of_gen(const ChainProductLattice& lat, std::int64_t g) {
    FactoredInteger f;
    f.value = lat.ring().cardinality();
    f.factors = lat.ring().components;
    return lat.id_of(ideal_from_generator(f, g == f.value ? 0 : g));
}

bool squarefree(std::int64_t n) {
    for (const auto& pp : factorize(n).factors)
        if (pp.exponent > 1) return false;
    return true;
}

// ---------------------------------------------------------------- charzn

namespace charzn_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat,
                                    const FactoredInteger& f, int id) {
    bool closed = is_m_ideal_zn(f, lat.ideal(id));
    bool ess_def = is_essential_checked(lat, id).value;
    bool rirr_def = is_relatively_irreducible_checked(lat, id).value;
    bool ess_fast = is_essential(lat, id);
    bool rirr_fast = is_relatively_irreducible(lat, id);
    bool dichotomy = ess_fast || rirr_fast;
    bool oracle = is_m_ideal_oracle(lat, id).value;
    bool ok = closed == dichotomy && dichotomy == oracle && ess_def == ess_fast &&
              rirr_def == rirr_fast;
    if (ok) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(id);
    ce.check = "closed-form = dichotomy = oracle (and fast paths = definitions)";
    ce.expected = "all routes equal";
    std::ostringstream os;
    os << "closed=" << bool_str(closed) << " dichotomy=" << bool_str(dichotomy)
       << " oracle=" << bool_str(oracle) << " essential(def/fast)=" << bool_str(ess_def) << "/"
       << bool_str(ess_fast) << " rel-irr(def/fast)=" << bool_str(rirr_def) << "/"
       << bool_str(rirr_fast);
    ce.actual = os.str();
    ce.replay = zn_name(n) + "|" + std::to_string(gen_of(lat, id));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    FactoredInteger f = factorize(n);
    for (int id : lat.order()) {
        ++c.cases;
        if (auto ce = check(n, lat, f, id)) c.fail(*ce);
    }
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = std::stoll(parts.at(0).substr(3));
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, factorize(n), id_of_gen(lat, tok_int(parts, 1)));
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("charzn", max_n, p.threads, {}, per_n);
}

}  // namespace charzn_suite

// ---------------------------------------------------------------- chmi

namespace chmi_suite {

std::optional<Counterexample> check_lattice(const std::string& ring_name,
                                            const std::string& replay_prefix,
                                            const auto& lat, int id,
                                            const std::string& ideal_token) {
    bool ess = is_essential_checked(lat, id).value;
    bool rirr = is_relatively_irreducible_checked(lat, id).value;
    bool oracle = is_m_ideal_oracle(lat, id).value;
    bool ok = oracle == (ess || rirr) && is_essential(lat, id) == ess &&
              is_relatively_irreducible(lat, id) == rirr;
    if (ok) return std::nullopt;
    Counterexample ce;
    ce.ring = ring_name;
    ce.ideals = lat.label(id);
    ce.check = "m-ideal oracle = essential-or-relatively-irreducible";
    ce.expected = "dichotomy";
    ce.actual = "oracle=" + bool_str(oracle) + " essential=" + bool_str(ess) +
                " rel-irr=" + bool_str(rirr);
    ce.replay = replay_prefix + "|" + ideal_token;
    return ce;
}

void check_table(const std::string& ring_name, const std::string& replay_prefix,
                 const MaskLattice& lat, Collector& c) {
    for (int id : lat.order()) {
        ++c.cases;
        std::string tok;
        for (int e : lat.mask(id).elements()) tok += (tok.empty() ? "" : ".") + std::to_string(e);
        if (auto ce = check_lattice(ring_name, replay_prefix, lat, id, tok)) c.fail(*ce);
    }
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int id : lat.order()) {
        ++c.cases;
        if (auto ce = check_lattice(zn_name(n), "zn:" + std::to_string(n), lat, id,
                                    std::to_string(gen_of(lat, id))))
            c.fail(*ce);
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    auto t0 = Clock::now();
    auto names = corpus_ring_names();
    std::int64_t slots_n = max_n - 1;
    std::vector<Collector> slots(static_cast<std::size_t>(slots_n) + names.size() + 2);
    parallel_for_index(static_cast<std::int64_t>(slots.size()), p.threads, [&](std::int64_t i) {
        if (i < slots_n) {
            per_n(i + 2, slots[static_cast<std::size_t>(i)]);
        } else if (i < slots_n + static_cast<std::int64_t>(names.size())) {
            const std::string& nm = names[static_cast<std::size_t>(i - slots_n)];
            MaskLattice lat(corpus_ring(nm));
            check_table("corpus:" + nm, "tbl:" + nm, lat, slots[static_cast<std::size_t>(i)]);
        } else {
            // small matrix rings: the dichotomy holds without commutativity
            std::int64_t nb = i - slots_n - static_cast<std::int64_t>(names.size()) + 2;
            if (nb * nb * nb * nb > p.table_cap) return;
            MaskLattice lat(make_matrix_ring(to_table(make_zn(nb)), 2, p.table_cap));
            check_table("mat:2:zn:" + std::to_string(nb), "mat2:" + std::to_string(nb), lat,
                        slots[static_cast<std::size_t>(i)]);
        }
    });
    return finish("chmi-dichotomy", "max_n=" + std::to_string(max_n) + ",corpus,mat2:2..3", t0,
                  slots, {});
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    if (parts.at(0).rfind("zn:", 0) == 0) {
        std::int64_t n = std::stoll(parts[0].substr(3));
        ChainProductLattice lat = zn_lattice(n);
        int id = id_of_gen(lat, tok_int(parts, 1));
        return check_lattice(zn_name(n), parts[0], lat, id, parts[1]);
    }
    MaskLattice lat = parts[0].rfind("tbl:", 0) == 0
                          ? MaskLattice(corpus_ring(parts[0].substr(4)))
                          : MaskLattice(make_matrix_ring(
                                to_table(make_zn(std::stoll(parts[0].substr(5)))), 2));
    std::vector<int> elems;
    std::stringstream ss(parts.at(1));
    std::string piece;
    while (std::getline(ss, piece, '.')) elems.push_back(std::stoi(piece));
    Bitset mask(lat.ring().size());
    for (int e : elems) mask.set(e);
    return check_lattice(parts[0], parts[0], lat, lat.id_of(mask), parts[1]);
}

}  // namespace chmi_suite

// ---------------------------------------------------------------- socle

namespace socle_suite {

std::optional<Counterexample> check(std::int64_t n) {
    ChainProductLattice lat = zn_lattice(n);
    int s = socle(lat);
    std::size_t n_atoms = lat.atoms().size();
    bool oracle = is_m_ideal_oracle(lat, s).value;
    bool ess = is_essential_checked(lat, s).value;
    bool ok = n_atoms <= 1 ? oracle : oracle == ess;
    int meet_ess = lat.top();
    for (int i : lat.order())
        if (is_essential(lat, i)) meet_ess = lat.meet(meet_ess, i);
    ok = ok && meet_ess == s;
    if (ok) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(s);
    ce.check = "socle m-ideal rule and socle = meet of essential ideals";
    ce.expected = "m-ideal iff essential (>=2 atoms), and equality with the meet";
    ce.actual = "oracle=" + bool_str(oracle) + " essential=" + bool_str(ess) +
                " meet-of-essentials=" + lat.label(meet_ess);
    ce.replay = std::to_string(n);
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    c.cases += 2;
    if (auto ce = check(n)) c.fail(*ce);
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("socle", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    return check(std::stoll(split_token(token).at(0)));
}

}  // namespace socle_suite

// ---------------------------------------------------------------- intersections

namespace intersections_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int a,
                                    int b) {
    if (!is_m_ideal_oracle(lat, a).value || !is_m_ideal_oracle(lat, b).value)
        return std::nullopt;
    if (is_m_ideal_oracle(lat, lat.meet(a, b)).value) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(a) + " n " + lat.label(b);
    ce.check = "intersection of two m-ideals is an m-ideal";
    ce.expected = "true";
    ce.actual = "false for " + lat.label(lat.meet(a, b));
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, a)) + "|" +
                std::to_string(gen_of(lat, b));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    std::vector<int> ms;
    for (int id : lat.order())
        if (is_m_ideal_oracle(lat, id).value) ms.push_back(id);
    for (int a : ms)
        for (int b : ms) {
            ++c.cases;
            if (auto ce = check(n, lat, a, b)) c.fail(*ce);
        }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("intersections", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)), id_of_gen(lat, tok_int(parts, 2)));
}

}  // namespace intersections_suite

// ---------------------------------------------------------------- quotient

namespace quotient_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int j,
                                    int k) {
    if (!lat.leq(k, j) || !is_m_ideal_oracle(lat, j).value) return std::nullopt;
    StructuredQuotient q = make_quotient(lat.ring(), lat.ideal(k));
    if (q.ring.is_zero_ring()) return std::nullopt;  // R/R: no ideal theory
    ChainProductLattice qlat(q.ring);
    int img = qlat.id_of(q.push_forward(lat.ideal(j)));
    if (is_m_ideal_oracle(qlat, img).value) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "J=" + lat.label(j) + " K=" + lat.label(k);
    ce.check = "J/K is an m-ideal of R/K when J is an m-ideal with K <= J";
    ce.expected = "true";
    ce.actual = "image " + qlat.label(img) + " fails the oracle in " + q.ring.origin;
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, j)) + "|" +
                std::to_string(gen_of(lat, k));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int j : lat.order()) {
        if (!is_m_ideal_oracle(lat, j).value) continue;
        for (int k : lat.order()) {
            if (!lat.leq(k, j) || (k == lat.top() && j == lat.top())) continue;
            ++c.cases;
            if (auto ce = check(n, lat, j, k)) c.fail(*ce);
        }
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("quotient", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)), id_of_gen(lat, tok_int(parts, 2)));
}

}  // namespace quotient_suite

// ---------------------------------------------------------------- product-fix

namespace fix_suite {

std::vector<std::int64_t> prime_powers(std::int64_t cap) {
    std::vector<std::int64_t> capped;
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27})
        if (q <= cap) capped.push_back(q);
    return capped;
}

std::optional<Counterexample> check(std::int64_t q1, std::int64_t q2, std::int64_t g1,
                                    std::int64_t g2) {
    StructuredRing r1 = make_zn(q1), r2 = make_zn(q2);
    ChainProductLattice l1(r1), l2(r2);
    StructuredIdeal e1 = l1.ideal(id_of_gen(l1, g1)), e2 = l2.ideal(id_of_gen(l2, g2));
    ProductClass verdict = classify_product({{r1, e1}, {r2, e2}});

    StructuredRing prod = make_product({r1, r2});
    ChainProductLattice plat(prod);
    StructuredIdeal pe = e1;
    pe.insert(pe.end(), e2.begin(), e2.end());
    bool oracle = is_m_ideal_oracle(plat, plat.id_of(pe)).value;
    if (product_is_m_ideal(verdict) == oracle) return std::nullopt;
    Counterexample ce;
    ce.ring = "prod:zn:" + std::to_string(q1) + ",zn:" + std::to_string(q2);
    ce.ideals = ideal_label(r1, e1) + " x " + ideal_label(r2, e2);
    ce.check = "slotwise product classification agrees with the oracle";
    ce.expected = "agreement";
    ce.actual = "classify_product m=" + bool_str(product_is_m_ideal(verdict)) +
                " oracle=" + bool_str(oracle);
    ce.replay = std::to_string(q1) + "|" + std::to_string(q2) + "|" + std::to_string(g1) + "|" +
                std::to_string(g2);
    return ce;
}

VerificationReport run(const SuiteParams& p, std::int64_t max_component) {
    auto t0 = Clock::now();
    auto pps = prime_powers(max_component);
    std::vector<Collector> slots(pps.size() * pps.size());
    parallel_for_index(static_cast<std::int64_t>(slots.size()), p.threads, [&](std::int64_t i) {
        std::int64_t q1 = pps[static_cast<std::size_t>(i) / pps.size()];
        std::int64_t q2 = pps[static_cast<std::size_t>(i) % pps.size()];
        Collector& c = slots[static_cast<std::size_t>(i)];
        ChainProductLattice l1(make_zn(q1)), l2(make_zn(q2));
        for (int a : l1.order())
            for (int b : l2.order()) {
                if (l1.is_zero(a) && l2.is_zero(b)) continue;  // at least one slot nonzero
                ++c.cases;
                if (auto ce = check(q1, q2, gen_of(l1, a), gen_of(l2, b))) c.fail(*ce);
            }
    });
    return finish("product-fix", "component_sizes<=" + std::to_string(max_component), t0, slots,
                  {"all-zero slot tuples excluded (at least one slot must be nonzero)"});
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    return check(tok_int(parts, 0), tok_int(parts, 1), tok_int(parts, 2), tok_int(parts, 3));
}

}  // namespace fix_suite

// ---------------------------------------------------------------- dss / nmi

namespace dss_suite {

std::optional<Counterexample> check(std::int64_t n) {
    ChainProductLattice lat = zn_lattice(n);
    bool summands = every_proper_m_ideal_is_summand(lat).value;
    bool simple_sum = is_direct_sum_of_simple(lat).value;
    bool sf = squarefree(n);
    if (summands == simple_sum && simple_sum == sf) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "-";
    ce.check = "all proper m-ideals complemented <=> direct sum of simple <=> squarefree";
    ce.expected = "three-way equivalence";
    ce.actual = "summands=" + bool_str(summands) + " direct-sum-simple=" + bool_str(simple_sum) +
                " squarefree=" + bool_str(sf);
    ce.replay = std::to_string(n);
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ++c.cases;
    if (auto ce = check(n)) c.fail(*ce);
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("dss", max_n, p.threads,
                   {"proper m-ideal read as nonzero proper"}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    return check(std::stoll(split_token(token).at(0)));
}

}  // namespace dss_suite

namespace nmi_suite {

std::optional<Counterexample> check(std::int64_t n) {
    ChainProductLattice lat = zn_lattice(n);
    bool has_proper = false;
    for (int id : lat.order()) {
        if (lat.is_zero(id) || id == lat.top()) continue;
        if (is_m_ideal_oracle(lat, id).value) {
            has_proper = true;
            break;
        }
    }
    if (has_proper != !is_prime(n)) {
        Counterexample ce;
        ce.ring = zn_name(n);
        ce.ideals = "-";
        ce.check = "no nonzero proper m-ideal <=> simple (prime modulus)";
        ce.expected = "equivalence";
        ce.actual = "has_proper=" + bool_str(has_proper) + " prime=" + bool_str(is_prime(n));
        ce.replay = std::to_string(n);
        return ce;
    }
    return std::nullopt;
}

void per_n(std::int64_t n, Collector& c) {
    ++c.cases;
    if (auto ce = check(n)) c.fail(*ce);
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("nmi", max_n, p.threads,
                   {"proper m-ideal read as nonzero proper"}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    return check(std::stoll(split_token(token).at(0)));
}

}  // namespace nmi_suite

// ---------------------------------------------------------------- morita-matrix

namespace morita_suite {

struct Setup {
    StructuredRing base;
    ChainProductLattice blat;
    TableRing base_table;
    MaskLattice mlat;
    Setup(std::int64_t n, std::int64_t cap)
        : base(make_zn(n)),
          blat(base),
          base_table(to_table(base)),
          mlat(make_matrix_ring(base_table, 2, cap)) {}
};

std::optional<Counterexample> check_ideal(std::int64_t n, Setup& s, int id) {
    Bitset bmask = mask_of_ideal(s.base, s.blat.ideal(id));
    Bitset tmask = transport_matrix_ideal(s.base_table, 2, TransportDirection::ToMatrix, bmask);
    int tid;
    try {
        tid = s.mlat.id_of(tmask);
    } catch (const std::exception&) {
        Counterexample ce;
        ce.ring = "mat:2:zn:" + std::to_string(n);
        ce.ideals = s.blat.label(id);
        ce.check = "transported ideal exists in the enumerated matrix lattice";
        ce.expected = "present";
        ce.actual = "missing";
        ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(s.blat, id));
        return ce;
    }
    Bitset back = transport_matrix_ideal(s.base_table, 2, TransportDirection::FromMatrix, tmask);
    bool ess_b = is_essential_checked(s.blat, id).value;
    bool ess_m = is_essential_checked(s.mlat, tid).value;
    bool m_b = is_m_ideal_oracle(s.blat, id).value;
    bool m_m = is_m_ideal_oracle(s.mlat, tid).value;
    if (ess_b == ess_m && m_b == m_m && back == bmask) return std::nullopt;
    Counterexample ce;
    ce.ring = "mat:2:zn:" + std::to_string(n);
    ce.ideals = s.blat.label(id);
    ce.check = "matrix transport preserves essential and m-ideal status";
    ce.expected = "preserved";
    ce.actual = "essential " + bool_str(ess_b) + "->" + bool_str(ess_m) + ", m-ideal " +
                bool_str(m_b) + "->" + bool_str(m_m);
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(s.blat, id));
    return ce;
}

std::optional<Counterexample> check_shape(std::int64_t n, Setup& s) {
    bool sizes = s.mlat.size() == s.blat.size();
    bool simple_ok = true;
    if (n == 2 || n == 3) simple_ok = s.mlat.size() == 2;
    if (sizes && simple_ok) return std::nullopt;
    Counterexample ce;
    ce.ring = "mat:2:zn:" + std::to_string(n);
    ce.ideals = "-";
    ce.check = "lattice sizes match; M_2 over a prime field is simple";
    ce.expected = "sizes equal" + std::string(n <= 3 ? ", 2 ideals" : "");
    ce.actual = "base=" + std::to_string(s.blat.size()) +
                " matrix=" + std::to_string(s.mlat.size());
    ce.replay = std::to_string(n) + "|shape";
    return ce;
}

VerificationReport run(const SuiteParams& p, std::int64_t max_base) {
    auto t0 = Clock::now();
    std::vector<Collector> slots(static_cast<std::size_t>(max_base - 1));
    parallel_for_index(max_base - 1, p.threads, [&](std::int64_t i) {
        std::int64_t n = i + 2;
        if (n * n * n * n > p.table_cap) return;  // base too large for the cap
        Collector& c = slots[static_cast<std::size_t>(i)];
        Setup s(n, p.table_cap);
        ++c.cases;
        if (auto ce = check_shape(n, s)) c.fail(*ce);
        for (int id : s.blat.order()) {
            ++c.cases;
            if (auto ce = check_ideal(n, s, id)) c.fail(*ce);
        }
    });
    return finish("morita-matrix", "bases zn:2..zn:" + std::to_string(max_base), t0, slots, {});
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    Setup s(n, kDefaultTableCap);
    if (parts.at(1) == "shape") return check_shape(n, s);
    return check_ideal(n, s, id_of_gen(s.blat, tok_int(parts, 1)));
}

}  // namespace morita_suite

// ---------------------------------------------------------------- krs

namespace krs_suite {

std::optional<Counterexample> check1(std::int64_t n, const MaskLattice& lat,
                                     SubringRelative& sr, int np, int nn) {
    if (!lat.leq(nn, np)) return std::nullopt;
    if (!sr.m_ideal_in(nn, np) || !is_m_ideal_oracle(lat, np).value) return std::nullopt;
    if (is_m_ideal_oracle(lat, nn).value) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "N=" + lat.label(nn) + " N'=" + lat.label(np);
    ce.check = "m-ideal of an m-ideal is an m-ideal (subring reading)";
    ce.expected = "true";
    ce.actual = "false";
    ce.replay = "1|" + std::to_string(n) + "|" + std::to_string(lat.cardinality(np)) + "|" +
                std::to_string(lat.cardinality(nn));
    return ce;
}

// Z_n ideal of a given size is unique, so sizes make stable replay keys.
int id_of_card(const MaskLattice& lat, std::int64_t card) {
    for (int id : lat.order())
        if (lat.cardinality(id) == card) return id;
    throw std::invalid_argument("no ideal of the requested size");
}

std::optional<Counterexample> check2(std::int64_t n, const ChainProductLattice& lat, int b1,
                                     int a1, int b2, int a2) {
    if (!lat.leq(a1, b1) || !lat.leq(a2, b2)) return std::nullopt;
    auto rel_m = [&](int x, int top) {
        IntervalLattice<ChainProductLattice> iv(lat, top);
        return is_m_ideal_oracle(iv, x).value;
    };
    if (!rel_m(a1, b1) || !rel_m(a2, b2)) return std::nullopt;
    if (rel_m(lat.meet(a1, a2), lat.meet(b1, b2))) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "A1=" + lat.label(a1) + " B1=" + lat.label(b1) + " A2=" + lat.label(a2) +
                " B2=" + lat.label(b2);
    ce.check = "relative m-ideals intersect to a relative m-ideal (regular ring)";
    ce.expected = "true";
    ce.actual = "false";
    ce.replay = "2|" + std::to_string(n) + "|" + std::to_string(gen_of(lat, b1)) + "|" +
                std::to_string(gen_of(lat, a1)) + "|" + std::to_string(gen_of(lat, b2)) + "|" +
                std::to_string(gen_of(lat, a2));
    return ce;
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n1, std::int64_t max_n2) {
    auto t0 = Clock::now();
    std::vector<Collector> slots(static_cast<std::size_t>(max_n1 - 1 + max_n2 - 1));
    parallel_for_index(static_cast<std::int64_t>(slots.size()), p.threads, [&](std::int64_t i) {
        Collector& c = slots[static_cast<std::size_t>(i)];
        if (i < max_n1 - 1) {
            std::int64_t n = i + 2;
            MaskLattice lat(to_table(make_zn(n), p.table_cap));
            SubringRelative sr(lat);
            for (int np : lat.order())
                for (int nn : lat.order()) {
                    if (!lat.leq(nn, np)) continue;
                    ++c.cases;
                    if (auto ce = check1(n, lat, sr, np, nn)) c.fail(*ce);
                }
        } else {
            std::int64_t n = i - (max_n1 - 1) + 2;
            if (!squarefree(n)) return;
            ChainProductLattice lat = zn_lattice(n);
            std::vector<std::pair<int, int>> rel_pairs;  // (A, B), A m-ideal of B
            for (int b : lat.order()) {
                IntervalLattice<ChainProductLattice> iv(lat, b);
                for (int a : lat.order())
                    if (lat.leq(a, b) && is_m_ideal_oracle(iv, a).value)
                        rel_pairs.emplace_back(a, b);
            }
            for (auto [a1, b1] : rel_pairs)
                for (auto [a2, b2] : rel_pairs) {
                    ++c.cases;
                    if (auto ce = check2(n, lat, b1, a1, b2, a2)) c.fail(*ce);
                }
        }
    });
    return finish("krs",
                  "part1 max_n=" + std::to_string(max_n1) +
                      ", part2 squarefree max_n=" + std::to_string(max_n2),
                  t0, slots,
                  {"part1 relative checks run in the subring-of-ideal reading"});
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    if (parts.at(0) == "1") {
        std::int64_t n = tok_int(parts, 1);
        MaskLattice lat(to_table(make_zn(n)));
        SubringRelative sr(lat);
        return check1(n, lat, sr, id_of_card(lat, tok_int(parts, 2)),
                      id_of_card(lat, tok_int(parts, 3)));
    }
    std::int64_t n = tok_int(parts, 1);
    ChainProductLattice lat = zn_lattice(n);
    return check2(n, lat, id_of_gen(lat, tok_int(parts, 2)), id_of_gen(lat, tok_int(parts, 3)),
                  id_of_gen(lat, tok_int(parts, 4)), id_of_gen(lat, tok_int(parts, 5)));
}

}  // namespace krs_suite

// ---------------------------------------------------------------- complements

namespace mct_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int N,
                                    int Q) {
    if (!lat.is_zero(lat.meet(N, Q))) return std::nullopt;
    std::string failure;
    try {
        auto res = m_complement_containing(lat, N, Q);
        bool ok = lat.is_zero(lat.meet(N, res.found)) && lat.leq(Q, res.found) &&
                  is_m_ideal_oracle(lat, lat.join(N, res.found)).value;
        if (ok) return std::nullopt;
        failure = "certificate failed to re-verify for " + lat.label(res.found);
    } catch (const std::exception& e) {
        failure = e.what();
    }
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "N=" + lat.label(N) + " Q=" + lat.label(Q);
    ce.check = "constrained m-complement exists and re-verifies";
    ce.expected = "verified complement";
    ce.actual = failure;
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, N)) + "|" +
                std::to_string(gen_of(lat, Q));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int N : lat.order())
        for (int Q : lat.order()) {
            if (!lat.is_zero(lat.meet(N, Q))) continue;
            ++c.cases;
            if (auto ce = check(n, lat, N, Q)) c.fail(*ce);
        }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("complements-mct", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)), id_of_gen(lat, tok_int(parts, 2)));
}

}  // namespace mct_suite

namespace lco_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int N) {
    if (!all_m_complements(lat, N).empty()) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "N=" + lat.label(N);
    ce.check = "every ideal has an m-complement";
    ce.expected = "nonempty complement list";
    ce.actual = "empty";
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, N));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int N : lat.order()) {
        ++c.cases;
        if (auto ce = check(n, lat, N)) c.fail(*ce);
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("complements-lco", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)));
}

}  // namespace lco_suite

namespace relcomp_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int A,
                                    int N, int B) {
    if (!lat.leq(A, N)) return std::nullopt;
    if (!lat.is_zero(lat.meet(A, B)) || !is_m_ideal_oracle(lat, lat.join(A, B)).value)
        return std::nullopt;
    bool ok = relative_complement_check(lat, A, N, B, relative_via_interval(lat), lat.ring());
    if (ok) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = "A=" + lat.label(A) + " N=" + lat.label(N) + " B=" + lat.label(B);
    ce.check = "B n N is an m-complement of A inside N (regular arithmetic ring)";
    ce.expected = "true";
    ce.actual = "false";
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, A)) + "|" +
                std::to_string(gen_of(lat, N)) + "|" + std::to_string(gen_of(lat, B));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    if (!squarefree(n)) return;
    ChainProductLattice lat = zn_lattice(n);
    for (int A : lat.order()) {
        auto comps = all_m_complements(lat, A);
        for (int N : lat.order()) {
            if (!lat.leq(A, N)) continue;
            for (int B : comps) {
                ++c.cases;
                if (auto ce = check(n, lat, A, N, B)) c.fail(*ce);
            }
        }
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("complements-relative", max_n, p.threads,
                   {"hypotheses (regular, arithmetic) verified per call"}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)), id_of_gen(lat, tok_int(parts, 2)),
                 id_of_gen(lat, tok_int(parts, 3)));
}

}  // namespace relcomp_suite

// ---------------------------------------------------------------- unitization

namespace uni_suite {

std::optional<Counterexample> check(const std::string& name) {
    TableRing r = corpus_ring(name);
    MaskLattice rlat(r);
    Unitization u = make_unitization(r);
    MaskLattice ulat(u.ring);

    std::vector<Bitset> m_in_r;  // masks of m-ideals of R, in R^1 coordinates
    for (int id : rlat.order())
        if (is_m_ideal_oracle(rlat, id).value) {
            Bitset lifted(u.ring.size());
            for (int x : rlat.mask(id).elements()) lifted.set(u.embed(x));
            m_in_r.push_back(lifted);
        }
    std::vector<Bitset> m_below;     // m-ideals of R^1 contained in the copy
    std::vector<Bitset> intersected; // R n J' over m-ideals J' of R^1
    for (int id : ulat.order()) {
        if (!is_m_ideal_oracle(ulat, id).value) continue;
        const Bitset& m = ulat.mask(id);
        if (m.subset_of(u.base_copy)) m_below.push_back(m);
        Bitset cut = m & u.base_copy;
        if (std::find(intersected.begin(), intersected.end(), cut) == intersected.end())
            intersected.push_back(cut);
    }
    auto same = [](std::vector<Bitset> a, std::vector<Bitset> b) {
        auto lex = [](const Bitset& x, const Bitset& y) { return x.lex_less(y); };
        std::sort(a.begin(), a.end(), lex);
        std::sort(b.begin(), b.end(), lex);
        return a == b;
    };
    if (same(m_in_r, m_below) && same(m_in_r, intersected)) return std::nullopt;
    Counterexample ce;
    ce.ring = "corpus:" + name;
    ce.ideals = "-";
    ce.check = "m-ideals of R = m-ideals of R^1 inside R = intersections of R with m-ideals of R^1";
    ce.expected = "the three families coincide";
    ce.actual = "counts " + std::to_string(m_in_r.size()) + "/" + std::to_string(m_below.size()) +
                "/" + std::to_string(intersected.size());
    ce.replay = name;
    return ce;
}

VerificationReport run(const SuiteParams& p) {
    auto t0 = Clock::now();
    auto names = corpus_ring_names();
    std::vector<Collector> slots(names.size());
    parallel_for_index(static_cast<std::int64_t>(names.size()), p.threads, [&](std::int64_t i) {
        Collector& c = slots[static_cast<std::size_t>(i)];
        ++c.cases;
        if (auto ce = check(names[static_cast<std::size_t>(i)])) c.fail(*ce);
    });
    return finish("unitization", "corpus of " + std::to_string(names.size()) +
                  " non-unital rings (<=16 elements)", t0, slots,
                  {"unitization over Z_c, c the additive characteristic"});
}

std::optional<Counterexample> replay(const std::string& token) { return check(token); }

}  // namespace uni_suite

// ---------------------------------------------------------------- fl1 / pros / sdp

namespace fl1_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int I) {
    if (lat.is_zero(I) || I == lat.top()) return std::nullopt;
    auto res = find_proper_m_ideal_over(lat, I);
    bool ok;
    std::string actual;
    if (res.is_summand) {
        ok = lat.is_zero(lat.meet(I, res.witness)) && lat.join(I, res.witness) == lat.top();
        actual = "summand witness " + lat.label(res.witness);
    } else {
        ok = lat.leq(I, res.witness) && res.witness != lat.top() && res.oracle_verified;
        actual = "maximal non-summand " + lat.label(res.witness) +
                 " oracle=" + bool_str(res.oracle_verified);
    }
    if (ok) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(I);
    ce.check = "non-summand ideals lie under a proper m-ideal";
    ce.expected = "verified witness";
    ce.actual = actual;
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, I));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int I : lat.order()) {
        if (lat.is_zero(I) || I == lat.top()) continue;
        ++c.cases;
        if (auto ce = check(n, lat, I)) c.fail(*ce);
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("fl1", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)));
}

}  // namespace fl1_suite

namespace pros_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int I) {
    if (lat.is_zero(I) || I == lat.top()) return std::nullopt;
    if (!is_direct_summand(lat, I).value) return std::nullopt;
    bool m = is_m_ideal_oracle(lat, I).value;
    bool rirr = is_relatively_irreducible_checked(lat, I).value;
    if (m == rirr) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(I);
    ce.check = "for a nontrivial summand, m-ideal <=> relatively irreducible";
    ce.expected = "equivalence";
    ce.actual = "m=" + bool_str(m) + " rel-irr=" + bool_str(rirr);
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, I));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int I : lat.order()) {
        if (lat.is_zero(I) || I == lat.top() || !is_direct_summand(lat, I).value) continue;
        ++c.cases;
        if (auto ce = check(n, lat, I)) c.fail(*ce);
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("pros", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)));
}

}  // namespace pros_suite

namespace sdp_suite {

std::optional<Counterexample> check(std::int64_t n) {
    ChainProductLattice lat = zn_lattice(n);
    int two = id_of_gen(lat, 2);
    bool m = is_m_ideal_oracle(lat, two).value;
    bool expected = n == 6;  // (2) passes in Z_6, fails in Z_90
    if (m == expected) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(two);
    ce.check = "subdirect-product regression for the ideal (2)";
    ce.expected = bool_str(expected);
    ce.actual = bool_str(m);
    ce.replay = std::to_string(n);
    return ce;
}

VerificationReport run(const SuiteParams& p) {
    (void)p;
    auto t0 = Clock::now();
    std::vector<Collector> slots(2);
    std::int64_t ns[2] = {6, 90};
    for (int i = 0; i < 2; ++i) {
        ++slots[i].cases;
        if (auto ce = check(ns[i])) slots[i].fail(*ce);
    }
    return finish("sdp-regression", "fixed cases zn:6, zn:90", t0, slots, {});
}

std::optional<Counterexample> replay(const std::string& token) {
    return check(std::stoll(split_token(token).at(0)));
}

}  // namespace sdp_suite

// ---------------------------------------------------------------- charmuclosed

namespace muclosed_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int I) {
    if (I == lat.top()) return std::nullopt;  // stated for proper ideals
    auto rel = relative_via_interval(lat);
    bool mc = is_m_closed(lat, I, rel).value;
    bool ec = is_essentially_closed(lat, I, rel).value;
    bool rirr = is_relatively_irreducible_checked(lat, I).value;
    if (mc == (ec && !rirr)) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(I);
    ce.check = "m-closed <=> essentially closed and not relatively irreducible";
    ce.expected = "equivalence";
    ce.actual = "m-closed=" + bool_str(mc) + " ess-closed=" + bool_str(ec) +
                " rel-irr=" + bool_str(rirr);
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, I));
    return ce;
}

void per_n(std::int64_t n, Collector& c) {
    ChainProductLattice lat = zn_lattice(n);
    for (int I : lat.order()) {
        if (I == lat.top()) continue;
        ++c.cases;
        if (auto ce = check(n, lat, I)) c.fail(*ce);
    }
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("charmuclosed", max_n, p.threads, {}, per_n);
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)));
}

}  // namespace muclosed_suite

// ---------------------------------------------------------------- representation

namespace repr_suite {

std::optional<Counterexample> check(std::int64_t n, std::int64_t table_cap) {
    ChainProductLattice lat = zn_lattice(n);
    MaskLattice mlat(to_table(make_zn(n), table_cap));
    auto fail = [&](const std::string& what) {
        Counterexample ce;
        ce.ring = zn_name(n);
        ce.ideals = "-";
        ce.check = "structured and table representations agree";
        ce.expected = "agreement";
        ce.actual = what;
        ce.replay = std::to_string(n);
        return ce;
    };
    if (lat.size() != mlat.size())
        return fail("lattice sizes " + std::to_string(lat.size()) + " vs " +
                    std::to_string(mlat.size()));
    std::vector<int> phi(lat.size());
    for (int id = 0; id < lat.size(); ++id) {
        try {
            phi[id] = mlat.id_of(mask_of_ideal(lat.ring(), lat.ideal(id)));
        } catch (const std::exception&) {
            return fail("ideal " + lat.label(id) + " missing from the table enumeration");
        }
    }
    for (int a = 0; a < lat.size(); ++a)
        for (int b = 0; b < lat.size(); ++b) {
            if (phi[lat.meet(a, b)] != mlat.meet(phi[a], phi[b]))
                return fail("meet differs at " + lat.label(a) + "," + lat.label(b));
            if (phi[lat.join(a, b)] != mlat.join(phi[a], phi[b]))
                return fail("join differs at " + lat.label(a) + "," + lat.label(b));
        }
    SubringRelative sr(mlat);
    auto srel = sr.checker();
    auto irel_s = relative_via_interval(lat);
    auto irel_m = relative_via_interval(mlat);
    for (int a = 0; a < lat.size(); ++a) {
        int b = phi[a];
        bool mismatch =
            is_essential_checked(lat, a).value != is_essential_checked(mlat, b).value ||
            is_relatively_irreducible_checked(lat, a).value !=
                is_relatively_irreducible_checked(mlat, b).value ||
            is_m_ideal_oracle(lat, a).value != is_m_ideal_oracle(mlat, b).value ||
            is_minimal_checked(lat, a).value != is_minimal_checked(mlat, b).value ||
            is_maximal_checked(lat, a).value != is_maximal_checked(mlat, b).value ||
            is_direct_summand(lat, a).value != is_direct_summand(mlat, b).value ||
            is_essentially_closed(lat, a, irel_s).value !=
                is_essentially_closed(mlat, b, srel).value ||
            is_m_closed(lat, a, irel_s).value != is_m_closed(mlat, b, srel).value ||
            is_essentially_closed(mlat, b, irel_m).value !=
                is_essentially_closed(mlat, b, srel).value ||
            is_m_closed(mlat, b, irel_m).value != is_m_closed(mlat, b, srel).value;
        if (mismatch) return fail("predicates differ on " + lat.label(a));
    }
    if (phi[socle(lat)] != socle(mlat)) return fail("socle differs");
    if (phi[jacobson_radical(lat)] != jacobson_radical(mlat)) return fail("radical differs");
    if (lat.hasse().size() != mlat.hasse().size()) return fail("cover-edge counts differ");
    return std::nullopt;
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    return n_sweep("representation", max_n, p.threads, {},
                   [&p](std::int64_t n, Collector& c) {
                       c.cases += 1;
                       if (auto ce = check(n, p.table_cap)) c.fail(*ce);
                   });
}

std::optional<Counterexample> replay(const std::string& token) {
    return check(std::stoll(split_token(token).at(0)), kDefaultTableCap);
}

}  // namespace repr_suite

// ---------------------------------------------------------------- selftest-fault

namespace fault_suite {

std::optional<Counterexample> check(std::int64_t n, const ChainProductLattice& lat, int id) {
    bool broken = !(is_essential(lat, id) || is_relatively_irreducible(lat, id));
    bool oracle = is_m_ideal_oracle(lat, id).value;
    if (broken == oracle) return std::nullopt;
    Counterexample ce;
    ce.ring = zn_name(n);
    ce.ideals = lat.label(id);
    ce.check = "deliberately negated dichotomy (harness self-test)";
    ce.expected = "disagreement with the oracle";
    ce.actual = "negated=" + bool_str(broken) + " oracle=" + bool_str(oracle);
    ce.replay = std::to_string(n) + "|" + std::to_string(gen_of(lat, id));
    return ce;
}

VerificationReport run(const SuiteParams& p, std::int64_t max_n) {
    auto rep = n_sweep("selftest-fault", max_n, p.threads,
                       {"expected to fail: exercises counterexample reporting"},
                       [](std::int64_t n, Collector& c) {
                           ChainProductLattice lat = zn_lattice(n);
                           for (int id : lat.order()) {
                               ++c.cases;
                               if (auto ce = check(n, lat, id)) c.fail(*ce);
                           }
                       });
    return rep;
}

std::optional<Counterexample> replay(const std::string& token) {
    auto parts = split_token(token);
    std::int64_t n = tok_int(parts, 0);
    ChainProductLattice lat = zn_lattice(n);
    return check(n, lat, id_of_gen(lat, tok_int(parts, 1)));
}

}  // namespace fault_suite

}  // namespace

// ---------------------------------------------------------------- corpus

namespace {

TableRing make_null_ring(const std::vector<int>& cyclic_orders) {
    std::int64_t card = 1;
    for (int k : cyclic_orders) card *= k;
    const int n = static_cast<int>(card);
    std::vector<std::vector<int>> digits(n, std::vector<int>(cyclic_orders.size()));
    for (int x = 0; x < n; ++x) {
        std::int64_t v = x;
        for (std::size_t j = 0; j < cyclic_orders.size(); ++j) {
            digits[x][j] = static_cast<int>(v % cyclic_orders[j]);
            v /= cyclic_orders[j];
        }
    }
    auto encode = [&](const std::vector<int>& t) {
        std::int64_t v = 0, stride = 1;
        for (std::size_t j = 0; j < cyclic_orders.size(); ++j) {
            v += t[j] * stride;
            stride *= cyclic_orders[j];
        }
        return static_cast<int>(v);
    };
    RawTables raw;
    raw.size = n;
    raw.zero = 0;
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n, 0));
    std::vector<int> t(cyclic_orders.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < cyclic_orders.size(); ++j)
                t[j] = (digits[a][j] + digits[b][j]) % cyclic_orders[j];
            raw.add[a][b] = encode(t);
        }
    return validate_table(raw);
}

// dZ_n as a standalone ring.
TableRing make_sub_ring(std::int64_t d, std::int64_t n) {
    StructuredRing zn = make_zn(n);
    FactoredInteger f = factorize(n);
    Bitset mask = mask_of_ideal(zn, ideal_from_generator(f, d));
    return subring_of_ideal(to_table(zn), mask).ring;
}

// t F_2[t] / (t^k): strictly positive powers of t, coefficients in F_2.
TableRing make_poly_ring(int k) {
    const int n = 1 << (k - 1);  // bitmask over t^1..t^{k-1}
    RawTables raw;
    raw.size = n;
    raw.zero = 0;
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            raw.add[a][b] = a ^ b;
            int prod = 0;
            for (int i = 1; i < k; ++i)
                for (int j = 1; j < k; ++j)
                    if ((a >> (i - 1) & 1) && (b >> (j - 1) & 1) && i + j < k)
                        prod ^= 1 << (i + j - 1);
            raw.mul[a][b] = prod;
        }
    return validate_table(raw);
}

// Z_4 x Z_2 with (w1,w2)(s1,s2) = (2(w2 s1 + w1 s2 + w1 s1), 0): a
// commutative non-unital ring whose copy inside its unitization is not
// essential, exercising the irreducible branch of the unitization sweep.
TableRing make_exotic8() {
    const int n = 8;
    auto a1 = [](int x) { return x & 3; };
    auto a2 = [](int x) { return x >> 2; };
    auto enc = [](int u, int v) { return (v << 2) | u; };
    RawTables raw;
    raw.size = n;
    raw.zero = 0;
    raw.add.assign(n, std::vector<int>(n));
    raw.mul.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            raw.add[x][y] = enc((a1(x) + a1(y)) % 4, (a2(x) + a2(y)) % 2);
            int m = 2 * (a2(x) * a1(y) + a1(x) * a2(y) + a1(x) * a1(y)) % 4;
            raw.mul[x][y] = enc(m, 0);
        }
    return validate_table(raw);
}

const std::map<std::string, std::function<TableRing()>>& corpus_map() {
    static const std::map<std::string, std::function<TableRing()>> m = [] {
        std::map<std::string, std::function<TableRing()>> out;
        for (int k = 2; k <= 16; ++k)
            out["null:" + std::to_string(k)] = [k] { return make_null_ring({k}); };
        out["null:2x2"] = [] { return make_null_ring({2, 2}); };
        out["null:2x4"] = [] { return make_null_ring({2, 4}); };
        const std::pair<int, int> subs[] = {{2, 4},  {2, 8},  {4, 8},   {2, 16}, {4, 16},
                                            {8, 16}, {2, 12}, {6, 12},  {3, 9},  {3, 27},
                                            {9, 27}, {5, 25}, {2, 20},  {10, 20}, {3, 18},
                                            {2, 24}, {4, 24}, {6, 36}};
        for (auto [d, n] : subs)
            out["sub:" + std::to_string(d) + ":" + std::to_string(n)] = [d = d, n = n] {
                return make_sub_ring(d, n);
            };
        out["poly:3"] = [] { return make_poly_ring(3); };
        out["poly:4"] = [] { return make_poly_ring(4); };
        out["exotic:8"] = [] { return make_exotic8(); };
        out["prod:null2,sub:2:8"] = [] {
            return make_table_product({make_null_ring({2}), make_sub_ring(2, 8)});
        };
        out["prod:sub:2:4,sub:2:4"] = [] {
            return make_table_product({make_sub_ring(2, 4), make_sub_ring(2, 4)});
        };
        out["prod:null3,sub:3:9"] = [] {
            return make_table_product({make_null_ring({3}), make_sub_ring(3, 9)});
        };
        return out;
    }();
    return m;
}

}  // namespace

std::vector<std::string> corpus_ring_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : corpus_map()) names.push_back(name);
    return names;
}

TableRing corpus_ring(const std::string& name) {
    auto it = corpus_map().find(name);
    if (it == corpus_map().end())
        throw std::invalid_argument("unknown corpus ring: " + name);
    TableRing r = it->second();
    r.rename("corpus:" + name);
    if (r.unital())
        throw std::logic_error("corpus ring " + name + " is unexpectedly unital");
    return r;
}

// ---------------------------------------------------------------- registry

namespace {

struct SuiteImpl {
    Suite meta;
    std::function<VerificationReport(const SuiteParams&, std::int64_t)> run;
    std::function<std::optional<Counterexample>(const std::string&)> replay;
};

const std::vector<SuiteImpl>& impls() {
    static const std::vector<SuiteImpl> v = {
        {{"charzn", "closed-form criterion vs dichotomy vs oracle on every ideal of Z_n",
          true, true, 200, 1000},
         [](const SuiteParams& p, std::int64_t n) { return charzn_suite::run(p, n); },
         charzn_suite::replay},
        {{"chmi-dichotomy",
          "m-ideal = essential or relatively irreducible, on Z_n, the non-unital corpus and "
          "small matrix rings",
          true, true, 200, 400},
         [](const SuiteParams& p, std::int64_t n) { return chmi_suite::run(p, n); },
         chmi_suite::replay},
        {{"socle", "socle m-ideal rule and socle = meet of essential ideals", true, true, 200,
          1000},
         [](const SuiteParams& p, std::int64_t n) { return socle_suite::run(p, n); },
         socle_suite::replay},
        {{"intersections", "pairwise intersections of m-ideals stay m-ideals", true, true, 150,
          300},
         [](const SuiteParams& p, std::int64_t n) { return intersections_suite::run(p, n); },
         intersections_suite::replay},
        {{"quotient", "images of m-ideals in quotient rings stay m-ideals", true, true, 120,
          200},
         [](const SuiteParams& p, std::int64_t n) { return quotient_suite::run(p, n); },
         quotient_suite::replay},
        {{"product-fix", "two-factor product classification vs the oracle", true, true, 16, 27},
         [](const SuiteParams& p, std::int64_t n) { return fix_suite::run(p, n); },
         fix_suite::replay},
        {{"dss", "all-proper-m-ideals-complemented <=> direct sum of simple rings", true, true,
          200, 1000},
         [](const SuiteParams& p, std::int64_t n) { return dss_suite::run(p, n); },
         dss_suite::replay},
        {{"nmi", "absence of nonzero proper m-ideals <=> simplicity", true, true, 200, 1000},
         [](const SuiteParams& p, std::int64_t n) { return nmi_suite::run(p, n); },
         nmi_suite::replay},
        {{"morita-matrix", "ideal transport to 2x2 matrix rings preserves classification", true,
          true, 4, 6},
         [](const SuiteParams& p, std::int64_t n) { return morita_suite::run(p, n); },
         morita_suite::replay},
        {{"krs", "m-ideals of m-ideals, and intersections of relative m-ideals", true, true,
          100, 200},
         [](const SuiteParams& p, std::int64_t n) {
             return krs_suite::run(p, n, n >= 200 ? 210 : 105);
         },
         krs_suite::replay},
        {{"complements-mct", "constrained m-complements exist with verified certificates", true,
          true, 100, 200},
         [](const SuiteParams& p, std::int64_t n) { return mct_suite::run(p, n); },
         mct_suite::replay},
        {{"complements-lco", "every ideal has an m-complement", true, true, 200, 500},
         [](const SuiteParams& p, std::int64_t n) { return lco_suite::run(p, n); },
         lco_suite::replay},
        {{"complements-relative", "relative m-complements in regular arithmetic rings", true,
          true, 105, 210},
         [](const SuiteParams& p, std::int64_t n) { return relcomp_suite::run(p, n); },
         relcomp_suite::replay},
        {{"unitization", "m-ideals of R vs m-ideals of its unitization", true, true, 0, 0},
         [](const SuiteParams& p, std::int64_t) { return uni_suite::run(p); },
         uni_suite::replay},
        {{"fl1", "every non-summand proper ideal sits under a proper m-ideal", true, true, 100,
          200},
         [](const SuiteParams& p, std::int64_t n) { return fl1_suite::run(p, n); },
         fl1_suite::replay},
        {{"pros", "m-ideal <=> relatively irreducible for nontrivial summands", true, true, 200,
          500},
         [](const SuiteParams& p, std::int64_t n) { return pros_suite::run(p, n); },
         pros_suite::replay},
        {{"sdp-regression", "(2) is an m-ideal of Z_6 but not of Z_90", true, true, 0, 0},
         [](const SuiteParams& p, std::int64_t) { return sdp_suite::run(p); },
         sdp_suite::replay},
        {{"charmuclosed", "m-closed <=> essentially closed and not relatively irreducible",
          true, true, 150, 300},
         [](const SuiteParams& p, std::int64_t n) { return muclosed_suite::run(p, n); },
         muclosed_suite::replay},
        {{"representation", "structured vs table enumeration and classification", true, true,
          128, 300},
         [](const SuiteParams& p, std::int64_t n) { return repr_suite::run(p, n); },
         repr_suite::replay},
        {{"selftest-fault", "negated dichotomy must produce replayable counterexamples", false,
          false, 30, 60},
         [](const SuiteParams& p, std::int64_t n) { return fault_suite::run(p, n); },
         fault_suite::replay},
    };
    return v;
}

const SuiteImpl* find_impl(const std::string& name) {
    for (const auto& s : impls())
        if (s.meta.name == name) return &s;
    return nullptr;
}

}  // namespace

const std::vector<Suite>& suite_registry() {
    static const std::vector<Suite> v = [] {
        std::vector<Suite> out;
        for (const auto& s : impls()) out.push_back(s.meta);
        return out;
    }();
    return v;
}

const Suite* find_suite(const std::string& name) {
    for (const auto& s : suite_registry())
        if (s.name == name) return &s;
    return nullptr;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
    const SuiteImpl* impl = find_impl(name);
    if (!impl) throw std::invalid_argument("unknown suite: " + name);
    std::int64_t n = params.max_n > 0 ? params.max_n : impl->meta.full_max_n;
    return impl->run(params, n);
}

std::vector<VerificationReport> run_all(Profile profile, SuiteParams base) {
    std::vector<VerificationReport> reports;
    for (const auto& s : impls()) {
        if (!s.meta.in_run_all) continue;
        SuiteParams p = base;
        if (p.max_n <= 0)
            p.max_n = profile == Profile::Quick ? s.meta.quick_max_n : s.meta.full_max_n;
        if (profile == Profile::Quick) p.table_cap = std::min<std::int64_t>(p.table_cap, 256);
        reports.push_back(s.run(p, p.max_n > 0 ? p.max_n : s.meta.full_max_n));
    }
    return reports;
}

std::optional<Counterexample> replay_case(const std::string& suite, const std::string& token) {
    const SuiteImpl* impl = find_impl(suite);
    if (!impl) throw std::invalid_argument("unknown suite: " + suite);
    return impl->replay(token);
}

std::string report_to_json(const VerificationReport& rep, bool include_timing) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["params"] = rep.params;
    j["cases"] = rep.cases;
    if (include_timing) j["elapsed_ms"] = rep.elapsed_ms;
    j["pass"] = rep.pass;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : rep.counterexamples) {
        j["counterexamples"].push_back({{"ring", ce.ring},
                                        {"ideals", ce.ideals},
                                        {"check", ce.check},
                                        {"expected", ce.expected},
                                        {"actual", ce.actual},
                                        {"replay", ce.replay}});
    }
    j["flags"] = rep.flags;
    return j.dump();
}

std::string counterexample_to_json(const std::string& suite, const Counterexample& ce) {
    nlohmann::json j{{"suite", suite},     {"ring", ce.ring},
                     {"ideals", ce.ideals}, {"check", ce.check},
                     {"expected", ce.expected}, {"actual", ce.actual},
                     {"replay", ce.replay}};
    return j.dump();
}

}  // namespace midealkit
