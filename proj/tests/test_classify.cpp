#include "doctest.h"

#include "midealkit/classify.hpp"

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

TEST_CASE("essential ideals") {
    auto z12 = zn(12);
    auto r = is_essential_checked(z12, ideal_of(z12, 3));
    CHECK_FALSE(r.value);
    REQUIRE(r.witness.size() == 1);
    CHECK(z12.label(r.witness[0]) == "(4)");  // (3) n (4) = 0

    CHECK(is_essential_checked(z12, ideal_of(z12, 2)).value);
    CHECK_FALSE(is_essential_checked(z12, z12.zero()).value);

    // fast path matches the definition everywhere (spot)
    for (std::int64_t n : {4, 6, 12, 30, 36, 60, 90, 180})
        for (int id : zn(n).order()) {
            auto lat = zn(n);
            CHECK(is_essential(lat, id) == is_essential_checked(lat, id).value);
        }
}

TEST_CASE("relatively irreducible ideals") {
    auto z12 = zn(12);
    CHECK(is_relatively_irreducible_checked(z12, ideal_of(z12, 3)).value);

    auto z6 = zn(6);
    auto r = is_relatively_irreducible_checked(z6, z6.top());
    CHECK_FALSE(r.value);
    REQUIRE(r.witness.size() == 2);
    CHECK(z6.label(r.witness[0]) == "(2)");
    CHECK(z6.label(r.witness[1]) == "(3)");

    // every minimal ideal is relatively irreducible
    for (std::int64_t n = 2; n <= 200; ++n) {
        auto lat = zn(n);
        for (int a : lat.atoms()) {
            if (!is_relatively_irreducible_checked(lat, a).value) {
                CHECK(lat.label(a) == "counterexample");  // report loudly
            }
        }
    }
}

TEST_CASE("m-ideal oracle with paper witnesses") {
    auto z30 = zn(30);
    auto r = is_m_ideal_oracle(z30, ideal_of(z30, 2));
    CHECK_FALSE(r.value);
    REQUIRE(r.witness.size() == 2);
    CHECK(z30.label(r.witness[0]) == "(3)");
    CHECK(z30.label(r.witness[1]) == "(5)");

    auto z12 = zn(12);
    CHECK(is_m_ideal_oracle(z12, ideal_of(z12, 3)).value);
    CHECK(is_m_ideal_oracle(z12, z12.zero()).value);  // vacuous
}

TEST_CASE("dichotomy route") {
    auto z24 = zn(24);
    int six = ideal_of(z24, 6);
    CHECK(is_m_ideal(z24, six));
    CHECK_FALSE(is_essential(z24, six));
    CHECK(is_relatively_irreducible(z24, six));

    auto z900 = zn(900);
    CHECK_FALSE(is_m_ideal(z900, ideal_of(z900, 60)));

    auto z6 = zn(6);
    CHECK(is_m_ideal(z6, ideal_of(z6, 2)));
}

TEST_CASE("closed form for Z_n") {
    FactoredInteger f900 = factorize(900);
    CHECK(is_m_ideal_zn(f900, ideal_from_generator(f900, 6)));
    CHECK(is_m_ideal_zn(f900, ideal_from_generator(f900, 10)));
    CHECK_FALSE(is_m_ideal_zn(f900, ideal_from_generator(f900, 60)));

    FactoredInteger f180 = factorize(180);
    CHECK_FALSE(is_m_ideal_zn(f180, ideal_from_generator(f180, 5)));
    CHECK_FALSE(is_m_ideal_zn(f180, ideal_from_generator(f180, 30)));
    // trivial ideals take their fixed answers
    CHECK(is_m_ideal_zn(f180, ideal_from_generator(f180, 0)));
    CHECK(is_m_ideal_zn(f180, ideal_from_generator(f180, 1)));
    // essential sub-criterion: (30) is strict in every exponent of 900 but
    // pins the 5-part of 180
    CHECK(is_essential_zn(f900, ideal_from_generator(f900, 30)));
    CHECK_FALSE(is_essential_zn(f180, ideal_from_generator(f180, 30)));
    CHECK_FALSE(is_essential_zn(f180, ideal_from_generator(f180, 5)));

    CHECK_THROWS_AS(is_m_ideal_zn(f180, ExponentVector{1, 1}), std::domain_error);
    CHECK_THROWS_AS(is_m_ideal_zn(make_product({make_zn(2), make_zn(2)}), {0, 0}),
                    std::domain_error);  // repeated primes have no closed form
}

TEST_CASE("direct summands") {
    auto z12 = zn(12);
    auto r = is_direct_summand(z12, ideal_of(z12, 4));
    CHECK(r.value);
    REQUIRE(r.witness.size() == 1);
    CHECK(z12.label(r.witness[0]) == "(3)");

    auto z4 = zn(4);
    CHECK_FALSE(is_direct_summand(z4, ideal_of(z4, 2)).value);

    auto z6 = zn(6);
    auto r6 = is_direct_summand(z6, ideal_of(z6, 2));
    CHECK(r6.value);
    CHECK(z6.label(r6.witness[0]) == "(3)");
}

TEST_CASE("essentially closed and m-closed") {
    auto z4 = zn(4);
    auto rel4 = relative_via_interval(z4);
    auto ec = is_essentially_closed(z4, ideal_of(z4, 2), rel4);
    CHECK_FALSE(ec.value);  // (2) is essential in Z_4 itself
    REQUIRE(ec.witness.size() == 1);
    CHECK(z4.label(ec.witness[0]) == "(1)");

    auto z6 = zn(6);
    auto rel6 = relative_via_interval(z6);
    int two = ideal_of(z6, 2);
    CHECK(is_essentially_closed(z6, two, rel6).value);
    CHECK_FALSE(is_m_closed(z6, two, rel6).value);  // relatively irreducible
}

TEST_CASE("interval and subring readings coincide on Z_n") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        MaskLattice lat(to_table(make_zn(n)));
        SubringRelative sr(lat);
        bool ok = true;
        for (int j = 0; j < lat.size(); ++j) {
            IntervalLattice<MaskLattice> iv(lat, j);
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.leq(i, j)) continue;
                ok = ok && sr.essential_in(i, j) == is_essential_checked(iv, i).value;
                ok = ok && sr.m_ideal_in(i, j) == is_m_ideal_oracle(iv, i).value;
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("classify_product") {
    auto slot = [](std::int64_t q, std::int64_t g) {
        StructuredRing r = make_zn(q);
        FactoredInteger f = factorize(q);
        return std::make_pair(r, ideal_from_generator(f, g));
    };
    CHECK(classify_product({slot(4, 2), slot(9, 3)}) == ProductClass::EssentialProduct);
    CHECK(classify_product({slot(4, 2), slot(9, 0)}) == ProductClass::SingleSlotIrreducible);
    CHECK(classify_product({slot(4, 2), slot(9, 3), slot(25, 0)}) == ProductClass::NotMIdeal);

    CHECK_THROWS_AS(classify_product({slot(4, 2)}), std::domain_error);
    CHECK_THROWS_AS(classify_product({slot(4, 0), slot(9, 0)}), std::domain_error);
}

TEST_CASE("structure scans") {
    auto z30 = zn(30);
    CHECK(every_proper_m_ideal_is_summand(z30).value);
    CHECK(is_direct_sum_of_simple(z30).value);
    CHECK(is_direct_sum_of_simple(z30).summands.size() == 3);

    auto z12 = zn(12);
    auto sc = every_proper_m_ideal_is_summand(z12);
    CHECK_FALSE(sc.value);
    REQUIRE(sc.failing.has_value());
    CHECK(z12.label(*sc.failing) == "(2)");  // essential, proper, no complement
    CHECK_FALSE(is_direct_sum_of_simple(z12).value);

    auto z7 = zn(7);
    CHECK(every_proper_m_ideal_is_summand(z7).value);
    CHECK(is_direct_sum_of_simple(z7).value);
}

TEST_CASE("atom simplicity") {
    auto z12 = zn(12);
    // (4) is the prime-field atom, (6) the square-zero one
    CHECK(atom_is_simple_ring(z12, ideal_of(z12, 4)));
    CHECK_FALSE(atom_is_simple_ring(z12, ideal_of(z12, 6)));
    CHECK_THROWS_AS(atom_is_simple_ring(z12, ideal_of(z12, 2)), std::domain_error);

    MaskLattice m12(to_table(make_zn(12)));
    for (int a : m12.atoms()) {
        bool structured = atom_is_simple_ring(
            z12, z12.id_of([&] {
                // match by cardinality: atoms of Z_12 have sizes 3 and 2
                return m12.cardinality(a) == 3 ? ideal_from_generator(factorize(12), 4)
                                               : ideal_from_generator(factorize(12), 6);
            }()));
        CHECK(atom_is_simple_ring(m12, a) == structured);
    }
}

TEST_CASE("find_proper_m_ideal_over") {
    auto z4 = zn(4);
    auto r = find_proper_m_ideal_over(z4, ideal_of(z4, 2));
    CHECK_FALSE(r.is_summand);
    CHECK(z4.label(r.witness) == "(2)");
    CHECK(r.oracle_verified);

    auto z12 = zn(12);
    auto r12 = find_proper_m_ideal_over(z12, ideal_of(z12, 4));
    CHECK(r12.is_summand);
    CHECK(z12.label(r12.witness) == "(3)");

    auto z8 = zn(8);
    auto r8 = find_proper_m_ideal_over(z8, ideal_of(z8, 4));
    CHECK_FALSE(r8.is_summand);
    CHECK(z8.label(r8.witness) == "(2)");
    CHECK(r8.oracle_verified);

    CHECK_THROWS_AS(find_proper_m_ideal_over(z8, z8.zero()), std::domain_error);
    CHECK_THROWS_AS(find_proper_m_ideal_over(z8, z8.top()), std::domain_error);
}

TEST_CASE("m-dimension") {
    CHECK(m_dimension(zn(7)) == 1);   // 0 < R
    CHECK(m_dimension(zn(4)) == 2);   // 0 < (2) < R, all m-ideals
    CHECK(m_dimension(zn(30)) == 2);  // atoms are m-ideals, no m-ideal strictly between
    CHECK(m_dimension(zn(8)) == 3);   // chain ring: every ideal essential
}

TEST_CASE("matrix ideal transport") {
    TableRing z6 = to_table(make_zn(6));
    StructuredRing s6 = make_zn(6);
    Bitset two = mask_of_ideal(s6, ideal_from_generator(factorize(6), 2));
    Bitset m2two = transport_matrix_ideal(z6, 2, TransportDirection::ToMatrix, two);
    CHECK(m2two.count() == 81);  // 3^4 matrices over (2)
    CHECK(transport_matrix_ideal(z6, 2, TransportDirection::FromMatrix, m2two) == two);

    Bitset zero(6);
    zero.set(z6.zero());
    CHECK(transport_matrix_ideal(z6, 2, TransportDirection::ToMatrix, zero).count() == 1);
    Bitset all(6);
    for (int i = 0; i < 6; ++i) all.set(i);
    CHECK(transport_matrix_ideal(z6, 2, TransportDirection::ToMatrix, all).count() == 1296);

    // a non-matrix-shaped mask is an internal invariant violation
    Bitset crooked = m2two;
    crooked.reset(m2two.elements()[1]);
    CHECK_THROWS_AS(transport_matrix_ideal(z6, 2, TransportDirection::FromMatrix, crooked),
                    std::logic_error);
}

TEST_CASE("classification report invariants") {
    auto z12 = zn(12);
    ClassificationReport rep = classify_ideal(z12, ideal_of(z12, 3));
    CHECK(rep.m_ideal);
    CHECK_FALSE(rep.essential);
    CHECK(rep.relatively_irreducible);
    CHECK_FALSE(rep.minimal);
    CHECK(rep.maximal);
    CHECK(rep.m_ideal == (rep.essential || rep.relatively_irreducible));
    CHECK(rep.witnesses.contains("essential"));
    CHECK(rep.witnesses.at("essential") == std::vector<std::string>{"(4)"});
    CHECK(rep.generator == 3);
    CHECK(rep.exponents == std::vector<int>{0, 1});
    bool has_closed_form = false;
    for (const auto& m : rep.m_ideal_methods) has_closed_form |= m == "closed-form";
    CHECK(has_closed_form);

    // table-ring reports carry the second closedness reading
    MaskLattice m12(to_table(make_zn(12)));
    ClassificationReport trep = classify_ideal(m12, m12.zero());
    CHECK(trep.is_zero);
    CHECK(trep.m_ideal);
    REQUIRE(trep.essentially_closed_interval.has_value());
    CHECK(*trep.essentially_closed_interval == trep.essentially_closed);
}

TEST_CASE("unitization of a unital ring splits off a central idempotent") {
    // Z_c x R with R unital always contains (1, -1_R), so the copy of R is
    // complemented; for R = M_2(F_2) the result is F_2 x M_2(F_2).
    TableRing m2 = make_matrix_ring(to_table(make_zn(2)), 2);
    Unitization u = make_unitization(m2);
    MaskLattice lat(u.ring);
    CHECK(lat.size() == 4);
    int copy = lat.id_of(u.base_copy);
    auto s = is_direct_summand(lat, copy);
    CHECK(s.value);
    CHECK(lat.cardinality(s.witness[0]) == 2);
    CHECK(atom_is_simple_ring(lat, copy));
    CHECK(atom_is_simple_ring(lat, s.witness[0]));
    CHECK(every_proper_m_ideal_is_summand(lat).value);
    CHECK(is_direct_sum_of_simple(lat).value);
    int proper_m = 0;
    for (int id : lat.order())
        if (!lat.is_zero(id) && id != lat.top() && is_m_ideal_oracle(lat, id).value) ++proper_m;
    CHECK(proper_m == 2);
}

TEST_CASE("unitizing the two-element null ring gives a chain with one proper m-ideal") {
    RawTables raw;
    raw.size = 2;
    raw.zero = 0;
    raw.add = {{0, 1}, {1, 0}};
    raw.mul = {{0, 0}, {0, 0}};
    Unitization u = make_unitization(validate_table(raw));
    MaskLattice lat(u.ring);  // Z_2[t]/(t^2)
    REQUIRE(lat.size() == 3);
    int copy = lat.id_of(u.base_copy);
    std::vector<int> proper_m;
    for (int id : lat.order())
        if (!lat.is_zero(id) && id != lat.top() && is_m_ideal_oracle(lat, id).value)
            proper_m.push_back(id);
    REQUIRE(proper_m.size() == 1);
    CHECK(proper_m[0] == copy);
    CHECK(is_minimal_checked(lat, copy).value);
    CHECK_FALSE(is_direct_summand(lat, copy).value);
    CHECK_FALSE(atom_is_simple_ring(lat, copy));  // square-zero
}

TEST_CASE("essential implies m-ideal, minimal implies m-ideal (n <= 200)") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        auto lat = zn(n);
        bool ok = true;
        for (int id : lat.order())
            if (is_essential(lat, id)) ok = ok && is_m_ideal_oracle(lat, id).value;
        for (int a : lat.atoms()) ok = ok && is_m_ideal_oracle(lat, a).value;
        CHECK(ok);
    }
}
