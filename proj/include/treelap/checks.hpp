#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace treelap {

struct CheckItem {
  std::string name;
  bool pass = false;
  bool skipped = false;  // precondition not met for this tree (not a failure)
  std::string detail;    // filled in on failure
};

struct TreeReport {
  int index = -1;
  int n = 0;
  bool all_pass = true;
  std::vector<CheckItem> items;
};

// Which invariant groups to evaluate per tree. The sampled sub-checks (extra
// roots, random shifts) derive their randomness from `seed` and the tree
// index only, so a batch gives identical results no matter how it is
// scheduled.
struct CheckOptions {
  bool core = true;            // counting statistics and the proved inequalities
  bool greedy = true;          // greedy witness is minimum
  bool brute_small = true;     // exhaustive cross-check when n <= 16
  bool weight_push = true;     // 4/3 weight propagation contract (when applicable)
  bool eps_threshold = true;   // degree-threshold propagation contract (when applicable)
  bool contraction = true;     // one clean-path contraction step (when present)
  bool root_invariance = true; // inertia counts ignore root and tie-break choices
  bool oracle = false;         // dense floating-point eigensolver agreement
  bool localization = false;   // bisection localization accounting
  Rational localization_tol = Rational(1, 1000000);
  std::uint64_t seed = 1;
};

// Runs every enabled check against one tree. Never throws: an exception
// inside a check becomes a failing item, which keeps the batch runner safe to
// parallelize.
TreeReport check_tree(const Tree& t, int index, const CheckOptions& opts);

enum class BatchMode { serial, parallel };

// Evaluates a batch of independent trees. The serial mode is the reference
// implementation; the parallel mode distributes trees across OpenMP threads
// and writes each report into its input slot, so both modes return
// bit-identical results in input order. Builds without OpenMP degrade the
// parallel mode to the serial loop.
std::vector<TreeReport> run_batch(const std::vector<Tree>& trees, const CheckOptions& opts,
                                  BatchMode mode);

struct BatchSummary {
  int trees = 0;
  int trees_failed = 0;
  // check name -> (times run, times failed); skipped checks are not run.
  std::map<std::string, std::pair<int, int>> per_check;
  std::vector<std::string> failures;  // human-readable, capped
};

BatchSummary summarize(const std::vector<TreeReport>& reports, std::size_t max_failures = 25);

}  // namespace treelap
