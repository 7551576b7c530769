#pragma once

#include <utility>
#include <vector>

#include "treelap/rational.hpp"
#include "treelap/rng.hpp"
#include "treelap/tree.hpp"

namespace treelap {

// Signs of the diagonal produced by congruence-diagonalizing L(T) + alpha*I.
// By Sylvester's law of inertia these equal the counts of Laplacian
// eigenvalues below, at, and above -alpha, which is the whole point: exact
// eigenvalue counting with rational arithmetic and no root-finding.
struct InertiaCounts {
  int negative = 0;
  int zero = 0;
  int positive = 0;

  bool operator==(const InertiaCounts&) const = default;
};

// How a vertex with several zero-valued children picks the one that gets the
// value 2. The counts are invariant under the choice (and under the root);
// the randomized rule exists so tests can check exactly that.
enum class ZeroChildRule { smallest_id, random_pick };

struct DiagonalizationResult {
  std::vector<Rational> value;                        // final diagonal value per vertex
  InertiaCounts counts;
  std::vector<std::pair<int, int>> removed_edges;        // (vertex, its parent), in processing order
  std::vector<std::pair<int, int>> zero_child_choices;   // (vertex, chosen zero child)
};

// Bottom-up congruence diagonalization of L(T) + alpha*I over the rationals.
//
// Every vertex starts at d(v) + alpha. A vertex with no remaining children
// keeps its value. A vertex whose (non-detached) children are all nonzero
// absorbs them: value -= sum of reciprocals. If some child is zero, the
// vertex takes -1/2, the chosen child takes 2, and the edge to the vertex's
// own parent is detached so the parent no longer sees it. Leaves are just the
// no-children case: they keep d(v) + alpha untouched.
//
// `rng` is only consulted under ZeroChildRule::random_pick.
DiagonalizationResult diagonalize(const RootedTree& rt, const Rational& alpha,
                                  ZeroChildRule rule = ZeroChildRule::smallest_id,
                                  SplitMix64* rng = nullptr);

// Number of Laplacian eigenvalues strictly below beta. Roots at vertex 0.
int count_below(const Tree& t, const Rational& beta);

// Multiplicity of beta as a Laplacian eigenvalue.
int count_equal(const Tree& t, const Rational& beta);

// Eigenvalues in [0, 1), the small-eigenvalue statistic.
int mu(const Tree& t);

// Eigenvalues in [2, n], the large-eigenvalue statistic.
int nu(const Tree& t);

// Eigenvalues in the interval from a to b with selectable endpoint closure.
// Requires a <= b; an interval that is empty by construction (a == b, both
// endpoints open) and a > b both raise BadParameterError.
int count_in_interval(const Tree& t, const Rational& a, const Rational& b, bool closed_left,
                      bool closed_right);

// One localized chunk of spectrum: `multiplicity` eigenvalues in [lo, hi].
// `exact` marks a degenerate interval lo == hi hit exactly during bisection.
struct SpectralInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 0;
  bool exact = false;
};

// Bisects the a-priori bracket [0, n] until every eigenvalue cluster is
// pinned to an interval of width <= tol (or hit exactly). Midpoints are exact
// dyadic rationals, so every probe is an exact inertia computation; the
// multiplicities sum to n. Intervals are returned sorted by position.
std::vector<SpectralInterval> localize_spectrum(const Tree& t, const Rational& tol);

}  // namespace treelap
