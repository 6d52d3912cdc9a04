#pragma once

// Command layer behind the midealkit binary.  Each cmd_* returns the
// process exit code: 0 ok, 1 usage/input error, 2 a verification
// counterexample (or failed replay) was found.

#include <iosfwd>
#include <optional>
#include <string>

#include "midealkit/classify.hpp"
#include "midealkit/ringspec.hpp"
#include "midealkit/verifier.hpp"

namespace midealkit {

std::string classification_to_json(const std::string& ring_spec, const std::string& ideal_text,
                                   const ClassificationReport& rep);

int cmd_ideals(const std::string& spec, bool json, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& spec, const std::string& ideal, bool json,
                 std::ostream& out, std::ostream& err);
int cmd_complement(const std::string& spec, const std::string& ideal,
                   const std::optional<std::string>& containing, bool all, bool json,
                   std::ostream& out, std::ostream& err);
int cmd_lattice(const std::string& spec, const std::string& format, std::ostream& out,
                std::ostream& err);
int cmd_verify(const std::string& suite, const SuiteParams& params, const std::string& profile,
               bool json, std::ostream& out, std::ostream& err);
int cmd_replay(const std::string& json_line, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace midealkit
