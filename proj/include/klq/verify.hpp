#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "klq/kl.hpp"

namespace klq::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
  double seconds = 0.0;
};

struct Options {
  int threads = 1;
  std::string cache_path;  // optional persistent memo shared by the checks
};

/// The core suite: published values, the headline pair, convention locks,
/// counting identities, engine-vs-reference equivalence, the small-degree
/// zero/one sweep, the search pipeline and the cell-graph checks.
std::vector<Check> core_suite(const Options& options = {});

/// Long-running additions: the two degree-16 polynomials and the two
/// degree-14 remark polynomials.  Expect hours without a warm cache.
std::vector<Check> extended_suite(const Options& options = {});

/// Prints one line per check ("ok"/"FAIL" with expected vs computed) and
/// returns the number of failures.
int print_report(const std::vector<Check>& checks, std::ostream& out);

}  // namespace klq::verify
