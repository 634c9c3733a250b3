#pragma once

// Command runner behind the ckq executable. Kept as a library so the tests
// can drive it in-process and parse its JSON back.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ckq/freealg.hpp"
#include "ckq/relations.hpp"
#include "ckq/scalar.hpp"
#include "ckq/structures.hpp"

namespace ckq::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum class Format { text, json };

struct Command {
  std::string subcommand;  // relations | pairings | check | info
  int dim = 3;
  Basis basis = Basis::symplectic;
  std::optional<JSignature> sig;  // formal j when empty
  Format format = Format::text;
  std::string select = "all";
};

// exact serialization, used for output and for round-trip tests
json scalar_to_json(const CKScalar& x);
CKScalar scalar_from_json(const json& terms, int jcount);
json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j, int jcount);
json relations_to_json(const RelationSet& rs);
std::vector<Relation> relations_from_json(const json& j, int jcount);
json report_to_json(const VerificationReport& r);

/// Names used for j exponents in text output.
std::vector<std::string> j_names(int dim, const std::optional<JSignature>& sig);

/// Executes a parsed command. Returns the process exit code.
int run_command(const Command& c, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Exit 2 on usage errors.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ckq::cli
