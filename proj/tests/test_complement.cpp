#include "doctest.h"

#include "midealkit/complement.hpp"

using namespace midealkit;

namespace {

ChainProductLattice zn(std::int64_t n) { return ChainProductLattice(make_zn(n)); }

int ideal_of(const ChainProductLattice& lat, std::int64_t g) {
    FactoredInteger f;
    f.value = lat.ring().cardinality();
    f.factors = lat.ring().components;
    return lat.id_of(ideal_from_generator(f, g));
}

}  // namespace

TEST_CASE("m_complement_containing worked examples") {
    auto z12 = zn(12);
    auto res = m_complement_containing(z12, ideal_of(z12, 4), z12.zero());
    CHECK(z12.label(res.found) == "(3)");  // (6) is also valid but not maximal
    CHECK(res.verified());
    CHECK(res.sum == z12.top());

    // complement of the zero ideal is the whole ring
    auto res0 = m_complement_containing(z12, z12.zero(), z12.zero());
    CHECK(res0.found == z12.top());

    // chain ring: only the zero ideal is disjoint from (2), and (2) is essential
    auto z4 = zn(4);
    auto res4 = m_complement_containing(z4, ideal_of(z4, 2), z4.zero());
    CHECK(res4.found == z4.zero());
    CHECK(z4.label(res4.sum) == "(2)");
    CHECK(res4.verified());

    // constrained search
    auto z30 = zn(30);
    auto resq = m_complement_containing(z30, ideal_of(z30, 6), ideal_of(z30, 0 /*zero*/));
    CHECK(resq.verified());
    CHECK_THROWS_AS(m_complement_containing(z12, ideal_of(z12, 2), ideal_of(z12, 4)),
                    std::domain_error);  // (2) n (4) = (4) != 0
}

TEST_CASE("all_m_complements") {
    auto z12 = zn(12);
    auto list = all_m_complements(z12, ideal_of(z12, 4));
    std::vector<std::string> labels;
    for (int x : list) labels.push_back(z12.label(x));
    CHECK(labels == std::vector<std::string>{"(3)", "(6)", "(0)"});

    // the zero ideal's complements are exactly the m-ideals
    auto all = all_m_complements(z12, z12.zero());
    CHECK(all.size() == 6);  // every ideal of Z_12 is an m-ideal

    auto z30 = zn(30);
    auto l30 = all_m_complements(z30, ideal_of(z30, 6));
    CHECK_FALSE(l30.empty());
    // (10) is disjoint from (6) but (6)+(10) = (2) is not an m-ideal
    for (int x : l30) CHECK(z30.label(x) != "(10)");
}

TEST_CASE("relative complement check") {
    auto z30 = zn(30);
    auto rel = relative_via_interval(z30);
    // degenerate A = N
    CHECK(relative_complement_check(z30, ideal_of(z30, 15), ideal_of(z30, 15),
                                    ideal_of(z30, 2), rel, z30.ring()));
    // proper inclusion
    CHECK(relative_complement_check(z30, ideal_of(z30, 15), ideal_of(z30, 5),
                                    ideal_of(z30, 2), rel, z30.ring()));

    // hypothesis violations are precondition errors
    auto z4 = zn(4);
    auto rel4 = relative_via_interval(z4);
    CHECK_THROWS_AS(relative_complement_check(z4, ideal_of(z4, 2), ideal_of(z4, 2),
                                              z4.zero(), rel4, z4.ring()),
                    std::domain_error);  // Z_4 is not regular
    CHECK_THROWS_AS(relative_complement_check(z30, ideal_of(z30, 5), ideal_of(z30, 15),
                                              ideal_of(z30, 6), rel, z30.ring()),
                    std::domain_error);  // A not inside N
    CHECK_THROWS_AS(relative_complement_check(z30, ideal_of(z30, 15), ideal_of(z30, 15),
                                              ideal_of(z30, 3), rel, z30.ring()),
                    std::domain_error);  // (3) n (15) = (15) != 0: not a complement
}

TEST_CASE("regularity checks") {
    CHECK(ring_is_regular(make_zn(30)));
    CHECK_FALSE(ring_is_regular(make_zn(12)));
    CHECK(ring_is_regular(to_table(make_zn(6))));
    CHECK_FALSE(ring_is_regular(to_table(make_zn(4))));
}

TEST_CASE("distributivity of ideal lattices") {
    CHECK(is_distributive_lattice(zn(360)));
    MaskLattice m(make_matrix_ring(to_table(make_zn(2)), 2));
    CHECK(is_distributive_lattice(m));  // two-element lattice
}

TEST_CASE("every returned certificate re-verifies through the oracle (n <= 60)") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        auto lat = zn(n);
        bool ok = true;
        for (int N : lat.order()) {
            auto res = m_complement_containing(lat, N, lat.zero());
            ok = ok && lat.is_zero(lat.meet(N, res.found)) &&
                 is_m_ideal_oracle(lat, lat.join(N, res.found)).value;
        }
        CHECK(ok);
    }
}
