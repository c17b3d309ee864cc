#pragma once

// Named verification suites and their JSON reports.

#include <cstdint>
#include <string>
#include <vector>

#include "semipredual/json_io.hpp"

namespace semipredual {

inline constexpr int report_schema_version = 1;

struct Check {
  std::string id;
  Verdict verdict = Verdict::pass;
  json witness = json::object();
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::string suite;
  json params = json::object();
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::vector<Check> checks;
  double seconds = 0;

  /// fail if any check fails, else undetermined if any is, else pass.
  Verdict status() const;
  /// 0 pass, 1 fail, 2 undetermined.
  int exit_code() const;
  json to_json() const;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> const& suite_names();

/// Throws UnknownSuite, JsonInputError for malformed or out-of-range params.
Report run_suite(std::string const& name, json const& params, std::uint64_t seed = 0, std::size_t jobs = 1);

}  // namespace semipredual
