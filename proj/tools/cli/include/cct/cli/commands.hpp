#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cct/config.hpp"
#include "cct/invariants.hpp"

namespace cct::cli {

extern const char* const kToolVersion;

/// Bad flag combinations and unknown names; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::optional<std::string> spec;
  std::optional<std::string> gen;
  std::optional<std::string> target;
  std::string format = "text";
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
  // factor
  std::optional<std::string> class_spec;  // "p-group:P" or "member:NAME,NAME"
  std::optional<std::size_t> hom_index;
  // homs, factor: how many homomorphisms to list
  std::size_t limit = 64;
  Limits limits;
};

struct Report {
  nlohmann::json json;
  std::string text;
  int exit_code = 0;
};

/// Assembles the report envelope; any finding makes the status "failure" and
/// the exit code 1.
Report make_report(const Options& opts, nlohmann::json inputs, nlohmann::json result,
                   const std::vector<Finding>& findings, std::string text, double elapsed_ms);

/// Runs one command. Throws UsageError, SyntaxError, UndefinedName,
/// BudgetExceeded or OrderBudgetExceeded.
Report run(const Options& opts);

/// Argument parsing, CCT_ORDER_MAX, error reporting and exit codes.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cct::cli
