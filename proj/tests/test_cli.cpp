#include "doctest.h"

#include <regex>
#include <sstream>

#include "midealkit/cli.hpp"

using namespace midealkit;

namespace {

struct Run {
    int code;
    std::string out, err;
};

template <class F>
Run capture(F f) {
    std::ostringstream out, err;
    int code = f(out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify command text and JSON") {
    Run r = capture([](std::ostream& o, std::ostream& e) {
        return cmd_classify("zn:900", "60", false, o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("m_ideal: no") != std::string::npos);
    CHECK(r.out.find("witness[m_ideal]") != std::string::npos);

    r = capture([](std::ostream& o, std::ostream& e) {
        return cmd_classify("zn:12", "3", true, o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("\"m_ideal\":true") != std::string::npos);
    CHECK(r.out.find("\"essential\":false") != std::string::npos);
    CHECK(r.out.find("\"relatively_irreducible\":true") != std::string::npos);
    CHECK(r.out.find("\"minimal\":false") != std::string::npos);

    r = capture([](std::ostream& o, std::ostream& e) {
        return cmd_classify("zn:x", "3", false, o, e);
    });
    CHECK(r.code == 1);
    CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("classify JSON round-trips through replay") {
    Run c = capture([](std::ostream& o, std::ostream& e) {
        return cmd_classify("zn:900", "60", true, o, e);
    });
    REQUIRE(c.code == 0);
    std::string line = c.out.substr(0, c.out.find('\n'));

    Run rep = capture([&](std::ostream& o, std::ostream& e) { return cmd_replay(line, o, e); });
    CHECK(rep.code == 0);
    CHECK(rep.out.find("verdict reproduced") != std::string::npos);

    // a tampered verdict is detected
    std::string tampered = line;
    auto pos = tampered.find("\"m_ideal\":false");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 15, "\"m_ideal\":true ");
    Run bad = capture([&](std::ostream& o, std::ostream& e) { return cmd_replay(tampered, o, e); });
    CHECK(bad.code == 2);
}

TEST_CASE("complement command matches the worked example") {
    Run r = capture([](std::ostream& o, std::ostream& e) {
        return cmd_complement("zn:12", "4", std::nullopt, true, false, o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("m-complement of (4): (3)") != std::string::npos);
    CHECK(r.out.find("(3) (6) (0)") != std::string::npos);

    Run rq = capture([](std::ostream& o, std::ostream& e) {
        return cmd_complement("zn:12", "4", std::optional<std::string>("6"), false, false, o, e);
    });
    CHECK(rq.code == 0);
    CHECK(rq.out.find("(6)") != std::string::npos);
}

TEST_CASE("ideals command lists every ideal") {
    Run r = capture([](std::ostream& o, std::ostream& e) {
        return cmd_ideals("zn:12", false, o, e);
    });
    CHECK(r.code == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 6);

    Run rj = capture([](std::ostream& o, std::ostream& e) {
        return cmd_ideals("mat:2:zn:2", true, o, e);
    });
    CHECK(rj.code == 0);
    int jlines = 0;
    for (char ch : rj.out) jlines += ch == '\n';
    CHECK(jlines == 2);  // simple ring
}

TEST_CASE("DOT output is well formed with one node per ideal (n <= 300)") {
    std::regex node_re("n[0-9]+ \\[label=\"[^\"]+\", mideal=\"(true|false)\", "
                       "essential=\"(true|false)\", style=filled, fillcolor=\"[a-z]+\"\\];");
    std::regex edge_re("n[0-9]+ -> n[0-9]+;");
    for (std::int64_t n = 2; n <= 300; ++n) {
        Run r = capture([&](std::ostream& o, std::ostream& e) {
            return cmd_lattice("zn:" + std::to_string(n), "dot", o, e);
        });
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        int nodes = 0, edges = 0, braces = 0;
        bool header = false;
        while (std::getline(in, line)) {
            if (line == "digraph ideal_lattice {") header = true;
            if (line.find('{') != std::string::npos) ++braces;
            if (line.find('}') != std::string::npos) --braces;
            std::string trimmed = line.substr(line.find_first_not_of(' ') == std::string::npos
                                                  ? 0
                                                  : line.find_first_not_of(' '));
            if (std::regex_match(trimmed, node_re)) ++nodes;
            if (std::regex_match(trimmed, edge_re)) ++edges;
        }
        REQUIRE(header);
        REQUIRE(braces == 0);
        ChainProductLattice lat{make_zn(n)};
        REQUIRE(nodes == lat.size());
        REQUIRE(edges == static_cast<int>(lat.hasse().size()));
    }
}

TEST_CASE("lattice JSON") {
    Run r = capture([](std::ostream& o, std::ostream& e) {
        return cmd_lattice("zn:12", "json", o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ideals\"") != std::string::npos);
    CHECK(r.out.find("\"edges\"") != std::string::npos);

    Run bad = capture([](std::ostream& o, std::ostream& e) {
        return cmd_lattice("zn:12", "png", o, e);
    });
    CHECK(bad.code == 1);
}

TEST_CASE("verify command exit codes") {
    SuiteParams p;
    Run ok = capture([&](std::ostream& o, std::ostream& e) {
        return cmd_verify("sdp-regression", p, "quick", false, o, e);
    });
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    SuiteParams pf;
    pf.max_n = 20;
    Run fail = capture([&](std::ostream& o, std::ostream& e) {
        return cmd_verify("selftest-fault", pf, "quick", false, o, e);
    });
    CHECK(fail.code == 2);
    CHECK(fail.out.find("FAIL") != std::string::npos);
    CHECK(fail.out.find("counterexample") != std::string::npos);

    Run usage = capture([&](std::ostream& o, std::ostream& e) {
        return cmd_verify("made-up", p, "quick", false, o, e);
    });
    CHECK(usage.code == 1);
}

TEST_CASE("counterexample JSON lines replay through the CLI") {
    SuiteParams p;
    p.max_n = 20;
    VerificationReport rep = run_suite("selftest-fault", p);
    REQUIRE_FALSE(rep.counterexamples.empty());
    std::string line = counterexample_to_json(rep.suite, rep.counterexamples[0]);
    Run r = capture([&](std::ostream& o, std::ostream& e) { return cmd_replay(line, o, e); });
    CHECK(r.code == 2);
    CHECK(r.out.find("counterexample confirmed") != std::string::npos);
}

TEST_CASE("run_cli dispatches argv") {
    const char* argv[] = {"midealkit", "classify", "zn:6", "2", "--json"};
    CHECK(run_cli(5, argv) == 0);
    const char* bad[] = {"midealkit", "classify"};
    CHECK(run_cli(2, bad) == 1);
}
