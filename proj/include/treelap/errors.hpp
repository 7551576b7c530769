#pragma once

#include <stdexcept>
#include <string>

namespace treelap {

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes: parse/validation/parameter problems exit 1, algorithm precondition
// failures (tree not in the required family) exit 3, and invariant violations
// detected during verification exit 2.

// Malformed input text: bad tokens, missing header line, wrong line count.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid edge set: self-loop, duplicate edge, cycle, or a
// disconnected graph.
struct NotATreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex id outside 0..n-1.
struct IdRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside its documented domain (generator sizes, tolerance <= 0,
// brute-force size cap, invalid contraction path, ...).
struct BadParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates an algorithm's family precondition; the message names the
// offending vertices so the caller can see why.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric routine failed to converge within its iteration budget.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace treelap
