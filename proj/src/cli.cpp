#include "midealkit/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "midealkit/complement.hpp"

namespace midealkit {

namespace {

nlohmann::json report_json(const ClassificationReport& rep) {
    nlohmann::json j;
    j["ideal"] = rep.ideal;
    if (!rep.exponents.empty()) j["exponents"] = rep.exponents;
    if (rep.generator >= 0) j["generator"] = rep.generator;
    j["cardinality"] = rep.cardinality;
    j["flags"] = {{"is_zero", rep.is_zero},
                  {"is_whole", rep.is_whole},
                  {"essential", rep.essential},
                  {"relatively_irreducible", rep.relatively_irreducible},
                  {"minimal", rep.minimal},
                  {"maximal", rep.maximal},
                  {"m_ideal", rep.m_ideal},
                  {"essentially_closed", rep.essentially_closed},
                  {"m_closed", rep.m_closed},
                  {"direct_summand", rep.direct_summand}};
    if (rep.essentially_closed_interval)
        j["flags"]["essentially_closed_interval"] = *rep.essentially_closed_interval;
    if (rep.m_closed_interval) j["flags"]["m_closed_interval"] = *rep.m_closed_interval;
    j["methods"] = rep.m_ideal_methods;
    j["witnesses"] = nlohmann::json::object();
    for (const auto& [k, v] : rep.witnesses) j["witnesses"][k] = v;
    return j;
}

ClassificationReport classify_by_handle(const RingHandle& h, int id) {
    if (h.is_structured()) return classify_ideal(h.chain_lattice(), id);
    return classify_ideal(h.mask_lattice(), id);
}

void print_report_text(const ClassificationReport& rep, std::ostream& out) {
    out << "ideal " << rep.ideal;
    if (!rep.exponents.empty()) {
        out << "  exponents=[";
        for (std::size_t i = 0; i < rep.exponents.size(); ++i)
            out << (i ? "," : "") << rep.exponents[i];
        out << "]";
    }
    out << "  |I|=" << rep.cardinality << "\n";
    auto line = [&](const char* name, bool v) {
        out << "  " << name << ": " << (v ? "yes" : "no") << "\n";
    };
    line("m_ideal", rep.m_ideal);
    line("essential", rep.essential);
    line("relatively_irreducible", rep.relatively_irreducible);
    line("minimal", rep.minimal);
    line("maximal", rep.maximal);
    line("essentially_closed", rep.essentially_closed);
    line("m_closed", rep.m_closed);
    line("direct_summand", rep.direct_summand);
    out << "  methods:";
    for (const auto& m : rep.m_ideal_methods) out << " " << m;
    out << "\n";
    for (const auto& [k, w] : rep.witnesses) {
        out << "  witness[" << k << "]:";
        for (const auto& s : w) out << " " << s;
        out << "\n";
    }
}

template <class L>
void emit_dot(const L& lat, std::ostream& out) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < lat.order().size(); ++i) pos[lat.order()[i]] = static_cast<int>(i);
    out << "digraph ideal_lattice {\n  rankdir=BT;\n";
    for (auto id : lat.order()) {
        bool m = is_m_ideal(lat, id);
        bool ess = is_essential(lat, id);
        out << "  n" << pos[id] << " [label=\"" << lat.label(id) << "\", mideal=\""
            << (m ? "true" : "false") << "\", essential=\"" << (ess ? "true" : "false")
            << "\", style=filled, fillcolor=\"" << (m ? (ess ? "lightblue" : "palegreen") : "white")
            << "\"];\n";
    }
    for (auto [lo, hi] : lat.hasse()) out << "  n" << pos[lo] << " -> n" << pos[hi] << ";\n";
    out << "}\n";
}

template <class L>
nlohmann::json lattice_json(const L& lat) {
    nlohmann::json j;
    std::map<int, int> pos;
    for (std::size_t i = 0; i < lat.order().size(); ++i) pos[lat.order()[i]] = static_cast<int>(i);
    j["ideals"] = nlohmann::json::array();
    for (auto id : lat.order())
        j["ideals"].push_back({{"id", pos[id]},
                               {"label", lat.label(id)},
                               {"cardinality", lat.cardinality(id)},
                               {"mideal", is_m_ideal(lat, id)},
                               {"essential", is_essential(lat, id)}});
    j["edges"] = nlohmann::json::array();
    for (auto [lo, hi] : lat.hasse()) j["edges"].push_back({pos[lo], pos[hi]});
    return j;
}

int fail_usage(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 1;
}

}  // namespace

std::string classification_to_json(const std::string& ring_spec, const std::string& ideal_text,
                                   const ClassificationReport& rep) {
    nlohmann::json j;
    j["command"] = "classify";
    j["ring"] = ring_spec;
    j["ideal"] = ideal_text;
    j["report"] = report_json(rep);
    return j.dump();
}

int cmd_ideals(const std::string& spec, bool json, std::ostream& out, std::ostream& err) {
    try {
        RingHandle h = RingHandle::realize(spec);
        std::vector<int> ids =
            h.is_structured() ? h.chain_lattice().order() : h.mask_lattice().order();
        std::optional<SubringRelative> cache;
        if (!h.is_structured()) cache.emplace(h.mask_lattice());
        for (int id : ids) {
            ClassificationReport rep = h.is_structured()
                                           ? classify_ideal(h.chain_lattice(), id)
                                           : classify_ideal(h.mask_lattice(), id, &*cache);
            if (json) {
                out << classification_to_json(spec, rep.ideal, rep) << "\n";
            } else {
                out << rep.ideal;
                if (!rep.exponents.empty()) {
                    out << " e=[";
                    for (std::size_t i = 0; i < rep.exponents.size(); ++i)
                        out << (i ? "," : "") << rep.exponents[i];
                    out << "]";
                }
                out << "  |I|=" << rep.cardinality << "  m=" << rep.m_ideal
                    << " ess=" << rep.essential << " rirr=" << rep.relatively_irreducible
                    << " min=" << rep.minimal << " max=" << rep.maximal
                    << " eclosed=" << rep.essentially_closed << " mclosed=" << rep.m_closed
                    << " summand=" << rep.direct_summand << "\n";
            }
        }
        return 0;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_classify(const std::string& spec, const std::string& ideal, bool json,
                 std::ostream& out, std::ostream& err) {
    try {
        RingHandle h = RingHandle::realize(spec);
        int id = h.parse_ideal(ideal);
        ClassificationReport rep = classify_by_handle(h, id);
        if (json)
            out << classification_to_json(spec, ideal, rep) << "\n";
        else
            print_report_text(rep, out);
        return 0;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_complement(const std::string& spec, const std::string& ideal,
                   const std::optional<std::string>& containing, bool all, bool json,
                   std::ostream& out, std::ostream& err) {
    try {
        RingHandle h = RingHandle::realize(spec);
        int n = h.parse_ideal(ideal);
        nlohmann::json j;
        j["command"] = "complement";
        j["ring"] = spec;
        j["ideal"] = h.ideal_label(n);
        auto run = [&](const auto& lat) {
            int q = containing ? h.parse_ideal(*containing) : lat.zero();
            auto res = m_complement_containing(lat, n, q);
            j["found"] = lat.label(res.found);
            j["sum"] = lat.label(res.sum);
            j["certificate"] = {{"meet_is_zero", res.meet_is_zero},
                                {"sum_oracle_m_ideal", res.sum_oracle_m}};
            if (!json)
                out << "m-complement of " << lat.label(n) << (containing ? " containing " : "")
                    << (containing ? lat.label(q) : std::string()) << ": " << lat.label(res.found)
                    << "   (sum " << lat.label(res.sum) << ", oracle-verified)\n";
            if (all) {
                auto list = all_m_complements(lat, n);
                j["all"] = nlohmann::json::array();
                for (int x : list) j["all"].push_back(lat.label(x));
                if (!json) {
                    out << "all m-complements:";
                    for (int x : list) out << " " << lat.label(x);
                    out << "\n";
                }
            }
        };
        if (h.is_structured())
            run(h.chain_lattice());
        else
            run(h.mask_lattice());
        if (json) out << j.dump() << "\n";
        return 0;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_lattice(const std::string& spec, const std::string& format, std::ostream& out,
                std::ostream& err) {
    try {
        RingHandle h = RingHandle::realize(spec);
        if (format == "dot") {
            if (h.is_structured())
                emit_dot(h.chain_lattice(), out);
            else
                emit_dot(h.mask_lattice(), out);
        } else if (format == "json") {
            nlohmann::json j =
                h.is_structured() ? lattice_json(h.chain_lattice()) : lattice_json(h.mask_lattice());
            j["ring"] = spec;
            out << j.dump() << "\n";
        } else {
            return fail_usage(err, "unknown lattice format '" + format + "' (dot|json)");
        }
        return 0;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_verify(const std::string& suite, const SuiteParams& params, const std::string& profile,
               bool json, std::ostream& out, std::ostream& err) {
    try {
        std::vector<VerificationReport> reports;
        if (suite == "all") {
            Profile p = profile == "full" ? Profile::Full : Profile::Quick;
            reports = run_all(p, params);
        } else {
            reports.push_back(run_suite(suite, params));
        }
        bool all_pass = true;
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.pass;
            if (json) {
                out << report_to_json(rep) << "\n";
            } else {
                out << "suite " << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
                    << rep.cases << " cases, " << rep.elapsed_ms << " ms; " << rep.params
                    << ")\n";
                for (const auto& ce : rep.counterexamples)
                    out << "  counterexample: " << ce.ring << " " << ce.ideals << " — "
                        << ce.check << ": expected " << ce.expected << ", got " << ce.actual
                        << "  [replay: " << counterexample_to_json(rep.suite, ce) << "]\n";
            }
        }
        return all_pass ? 0 : 2;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_replay(const std::string& json_line, std::ostream& out, std::ostream& err) {
    try {
        nlohmann::json j = nlohmann::json::parse(json_line);
        if (j.contains("command") && j["command"] == "classify") {
            RingHandle h = RingHandle::realize(j.at("ring").get<std::string>());
            int id = h.parse_ideal(j.at("ideal").get<std::string>());
            ClassificationReport rep = classify_by_handle(h, id);
            nlohmann::json fresh = report_json(rep)["flags"];
            nlohmann::json recorded = j.at("report").at("flags");
            if (fresh == recorded) {
                out << "replay: classification verdict reproduced for " << j["ring"] << " "
                    << rep.ideal << "\n";
                return 0;
            }
            out << "replay: MISMATCH\n  recorded: " << recorded.dump()
                << "\n  fresh:    " << fresh.dump() << "\n";
            return 2;
        }
        if (j.contains("suite")) {
            auto again = replay_case(j.at("suite").get<std::string>(),
                                     j.at("replay").get<std::string>());
            if (again) {
                out << "replay: counterexample confirmed — " << again->check << ": expected "
                    << again->expected << ", got " << again->actual << "\n";
                return 2;
            }
            out << "replay: case passes now (reported counterexample not reproduced)\n";
            return 0;
        }
        return fail_usage(err, "unrecognized replay line (need classify output or a "
                               "counterexample object)");
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"finite-ring ideal classifier and theorem-sweep harness"};
    app.require_subcommand(1);

    std::string spec, ideal, containing, format = "dot", suite, profile = "quick", line;
    bool json = false, all = false;
    SuiteParams params;

    auto* ideals = app.add_subcommand("ideals", "list and classify every ideal of a ring");
    ideals->add_option("spec", spec, "ring spec, e.g. zn:36")->required();
    ideals->add_flag("--json", json, "one JSON object per ideal");

    auto* classify = app.add_subcommand("classify", "classify one ideal");
    classify->add_option("spec", spec)->required();
    classify->add_option("ideal", ideal, "generator (zn), per-factor list (prod), elements (table)")
        ->required();
    classify->add_flag("--json", json);

    auto* complement = app.add_subcommand("complement", "search m-complements");
    complement->add_option("spec", spec)->required();
    complement->add_option("ideal", ideal)->required();
    complement->add_option("--containing", containing, "require the complement to contain Q");
    complement->add_flag("--all", all, "list every m-complement");
    complement->add_flag("--json", json);

    auto* lattice = app.add_subcommand("lattice", "emit the ideal lattice");
    lattice->add_option("spec", spec)->required();
    lattice->add_option("--format", format, "dot|json")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--max-n", params.max_n, "override the modulus bound");
    verify->add_option("--table-cap", params.table_cap, "table-ring size cap");
    verify->add_option("--threads", params.threads, "worker threads (0 = auto)");
    verify->add_option("--profile", profile, "quick|full (for 'all')")->capture_default_str();
    verify->add_flag("--json", json, "JSON-lines report");

    auto* replay = app.add_subcommand("replay", "re-check a classify/counterexample JSON line");
    replay->add_option("line", line, "JSON line, or '-' to read stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (ideals->parsed()) return cmd_ideals(spec, json, std::cout, std::cerr);
    if (classify->parsed()) return cmd_classify(spec, ideal, json, std::cout, std::cerr);
    if (complement->parsed())
        return cmd_complement(spec, ideal,
                              containing.empty() ? std::nullopt
                                                 : std::optional<std::string>(containing),
                              all, json, std::cout, std::cerr);
    if (lattice->parsed()) return cmd_lattice(spec, format, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(suite, params, profile, json, std::cout, std::cerr);
    if (replay->parsed()) {
        if (line == "-") std::getline(std::cin, line);
        return cmd_replay(line, std::cout, std::cerr);
    }
    return 1;
}

}  // namespace midealkit
