#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permgrid {

struct CheckResult {
  std::string name;   ///< short identifier, e.g. "slicing-lines"
  std::string claim;  ///< what was checked, in words
  long checked = 0;
  long failures = 0;
  /// The first failing instance in enumeration order (smallest first).
  std::optional<std::string> counterexample;
  /// Extra context, e.g. how many generated candidates were rejected.
  std::string note;
  double seconds = 0;

  bool passed() const { return failures == 0 && checked > 0; }
};

struct VerifyOptions {
  /// Overrides the suite's default size limit when positive.
  int max_len = 0;
  int jobs = 1;
};

/// decomposition, pins, turns, intervals, slicing, corners, extensions.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error(PARAM) for an
/// unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options = {});

// Individual checks; `max_len` is the suite's size parameter.

/// Round trip, maximal-interval parts and uniqueness of the simple skeleton, n <= max_len.
std::vector<CheckResult> verify_decomposition(int max_len, int jobs);
/// Structural pin properties on simple hosts n <= max_len plus 200 random
/// hosts of length max_len + 1; right-reaching sequences on simple hosts n <= max_len + 1.
std::vector<CheckResult> verify_pins(int max_len, int jobs);
/// Realized pin words with at most max_len directions: 3(p+q) turns give a
/// sum of p 21s or a skew sum of q 12s.
std::vector<CheckResult> verify_turns(int max_len, int jobs);
/// Intervals of sums of L <= max_len copies of 21.
std::vector<CheckResult> verify_intervals(int max_len, int jobs);
/// Every slicing line of a sum-indecomposable permutation separates a 21.
std::vector<CheckResult> verify_slicing(int max_len, int jobs);
/// NE-corner 21s of simple permutations are sliced from the NW or SE corner.
std::vector<CheckResult> verify_corners(int max_len, int jobs);
/// Extended spirals of up to max_len pins: 2k extensions (k <= 3) give a
/// sum of k 21s or a skew sum of k 12s; extended spirals with up to three
/// extensions are simple; bare spirals avoid 3412 and 2143. Lowering
/// max_extensions restricts the sweep (and the sums checked) accordingly.
std::vector<CheckResult> verify_extensions(int max_len, int jobs, int max_extensions = 6);

}  // namespace permgrid
