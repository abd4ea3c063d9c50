#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wroots/driver.hpp"
#include "wroots/report.hpp"

namespace wroots::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2, kNotFired = 3 };

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Precision used when --digits is absent: WROOTS_DIGITS if set, else 64.
int default_digits();

/// "1..10", "1,2,5", "1..3,8" -> ascending list as written.
std::vector<int> parse_int_list(std::string_view text);
/// "1,1.1,2" or "1.0..2.0:0.1" (inclusive, exact decimal stepping).
std::vector<std::string> parse_decimal_list(std::string_view text);

enum class Depth { Standard, Extended };

struct ExampleCase {
  std::string table;  // output stem, e.g. "table1"
  Polynomial f;
  StartGenerator x0;
  std::vector<int> standard_orders;
  std::vector<int> deep_orders;
};

/// The built-in reproduction problems; example 3 yields two cases (degree 20 and 30).
std::vector<ExampleCase> example_cases(int example, int digits);

RunConfig reproduce_config(int order, Depth depth, int digits);

struct BatchFailure {
  std::size_t index = 0;
  std::string start;  // seed or r0
  int order = 1;
  Outcome outcome = Outcome::MaxIterations;
  std::string diagnostic;
};

struct BatchSummary {
  std::size_t count = 0;
  std::size_t certified_count = 0;
  double mean_m = 0;
  double mean_k = 0;
  std::vector<BatchFailure> failures;

  std::string json(int indent = 2) const;
};

struct BatchInstance {
  std::string start;
  int order = 1;
  StartGenerator x0;
};

/// Runs every instance on a pool of `threads` workers.
BatchSummary run_batch(const Polynomial& f, const std::vector<BatchInstance>& instances,
                       const RunConfig& base, unsigned threads);

}  // namespace wroots::cli
