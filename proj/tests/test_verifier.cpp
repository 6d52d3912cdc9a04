#include "doctest.h"

#include "midealkit/table_ring.hpp"
#include "midealkit/verifier.hpp"

using namespace midealkit;

TEST_CASE("suite registry") {
    CHECK(suite_registry().size() >= 19);
    CHECK(find_suite("charzn") != nullptr);
    CHECK(find_suite("no-such-suite") == nullptr);
    CHECK_THROWS_AS(run_suite("no-such-suite", {}), std::invalid_argument);
    const Suite* fault = find_suite("selftest-fault");
    REQUIRE(fault != nullptr);
    CHECK_FALSE(fault->in_run_all);
    CHECK_FALSE(fault->expected_pass);
}

TEST_CASE("small sweeps pass") {
    SuiteParams p;
    p.max_n = 60;
    for (const char* name : {"charzn", "socle", "dss", "nmi", "fl1", "pros", "charmuclosed",
                             "complements-lco"}) {
        VerificationReport rep = run_suite(name, p);
        CHECK(rep.pass);
        CHECK(rep.cases > 0);
        CHECK(rep.counterexamples.empty());
    }
}

TEST_CASE("reports are deterministic modulo timing") {
    SuiteParams p;
    p.max_n = 40;
    p.threads = 2;
    std::string a = report_to_json(run_suite("charzn", p), false);
    p.threads = 1;
    std::string b = report_to_json(run_suite("charzn", p), false);
    CHECK(a == b);
}

TEST_CASE("fault injection produces replayable counterexamples") {
    SuiteParams p;
    p.max_n = 20;
    VerificationReport rep = run_suite("selftest-fault", p);
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.counterexamples.empty());
    for (const auto& ce : rep.counterexamples) {
        auto again = replay_case("selftest-fault", ce.replay);
        REQUIRE(again.has_value());
        CHECK(again->actual == ce.actual);
    }
}

TEST_CASE("replay of a passing case returns nothing") {
    CHECK_FALSE(replay_case("charzn", "zn:12|3").has_value());
    CHECK_FALSE(replay_case("sdp-regression", "6").has_value());
    CHECK_THROWS_AS(replay_case("nope", "t"), std::invalid_argument);
}

TEST_CASE("the corpus consists of small non-unital rings") {
    auto names = corpus_ring_names();
    CHECK(names.size() >= 30);
    for (const auto& name : names) {
        TableRing r = corpus_ring(name);
        CHECK_FALSE(r.unital());
        CHECK(r.size() >= 2);
        CHECK(r.size() <= 16);
    }
    CHECK_THROWS_AS(corpus_ring("null:99"), std::invalid_argument);
}

TEST_CASE("report JSON carries the schema fields") {
    SuiteParams p;
    p.max_n = 12;
    std::string json = report_to_json(run_suite("charzn", p));
    for (const char* key : {"\"suite\"", "\"params\"", "\"cases\"", "\"elapsed_ms\"", "\"pass\"",
                            "\"counterexamples\""})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("known paper-level failures are reported, not hidden") {
    // The quotient sweep finds Z_60: J=(2), K=(30) maps onto the standard
    // non-m-ideal (2) of Z_30.
    SuiteParams p;
    p.max_n = 60;
    VerificationReport rep = run_suite("quotient", p);
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.counterexamples.empty());
    CHECK(rep.counterexamples[0].ring == "zn:60");
    auto again = replay_case("quotient", rep.counterexamples[0].replay);
    CHECK(again.has_value());

    // The unitization sweep finds 2Z_12: the copy of R inside R^1 is
    // neither essential nor relatively irreducible there.
    VerificationReport uni = run_suite("unitization", {});
    CHECK_FALSE(uni.pass);
    bool found = false;
    for (const auto& ce : uni.counterexamples) found = found || ce.ring == "corpus:sub:2:12";
    CHECK(found);
}

TEST_CASE("run_all excludes self-test suites") {
    SuiteParams p;
    p.max_n = 12;
    auto reports = run_all(Profile::Quick, p);
    for (const auto& rep : reports) CHECK(rep.suite != "selftest-fault");
}
