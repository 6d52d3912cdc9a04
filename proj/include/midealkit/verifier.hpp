#pragma once

/*
 * Theorem-sweep harness.  Each suite exhaustively checks one property
 * over a parameterized family of rings and reports counterexamples
 * (expected: none).  Every counterexample carries a replay token; the
 * suite's replay hook re-runs exactly that case through the same checking
 * code, so any reported line can be confirmed in isolation.
 *
 * Reports are deterministic for fixed parameters: sweeps may run on
 * several threads but results merge in parameter order, and the JSON form
 * can omit the elapsed-time field for byte-for-byte comparison.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace midealkit {

class TableRing;

struct SuiteParams {
    std::int64_t max_n = 0;  // 0 = suite default
    std::int64_t table_cap = 4096;
    int lattice_cap = 20000;
    int threads = 0;  // 0 = hardware concurrency
};

struct Counterexample {
    std::string ring;
    std::string ideals;
    std::string check;
    std::string expected;
    std::string actual;
    std::string replay;  // token accepted by replay_case
};

struct VerificationReport {
    std::string suite;
    std::string params;
    std::int64_t cases = 0;
    std::int64_t elapsed_ms = 0;
    bool pass = false;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> flags;
};

struct Suite {
    std::string name;
    std::string description;
    bool in_run_all = true;          // self-test suites opt out
    bool expected_pass = true;
    std::int64_t quick_max_n = 0;    // 0 = suite has no n parameter
    std::int64_t full_max_n = 0;
};

const std::vector<Suite>& suite_registry();
const Suite* find_suite(const std::string& name);

// Runs one suite; throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name, const SuiteParams& params = {});

enum class Profile { Quick, Full };
std::vector<VerificationReport> run_all(Profile profile, SuiteParams base = {});

// Re-runs a single case from its replay token.  Returns the counterexample
// if the case still fails, std::nullopt if it passes now.
std::optional<Counterexample> replay_case(const std::string& suite, const std::string& token);

std::string report_to_json(const VerificationReport& rep, bool include_timing = true);
std::string counterexample_to_json(const std::string& suite, const Counterexample& ce);

// Parallel sweep helper: calls fn(i) for i in [0, count) on up to
// `threads` workers; results must be written into per-index slots by the
// caller for deterministic merging.
void parallel_for_index(std::int64_t count, int threads,
                        const std::function<void(std::int64_t)>& fn);

// The fixed corpus of small non-unital table rings used by the
// unitization and dichotomy sweeps.
std::vector<std::string> corpus_ring_names();
// Builds one by name; throws std::invalid_argument for unknown names.
TableRing corpus_ring(const std::string& name);

}  // namespace midealkit
