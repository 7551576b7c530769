#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace treelap {

// One processed vertex in a weight-propagation run. Weights and values are
// snapshots at decision time (weight after any zero-branch bump, value after
// the vertex's own update), so a trace replay can re-derive the membership
// test verbatim.
struct DecisionRecord {
  int vertex = -1;
  Rational weight;
  Rational value;
  bool zero_branch = false;
  int chosen_child = -1;  // the zero-valued child consumed, if any
  bool joined = false;
  Rational pushed;  // amount sent to the parent; for the root, the residual
};

struct DominationCertificate {
  std::string method;  // "dp", "greedy", "alg2", "alg3"
  std::vector<int> members;  // ascending
  int root = -1;             // rooting used by the run (-1 for dp)
  std::vector<DecisionRecord> trace;  // processing order; alg2/alg3 only
  Rational root_residual;             // weight left over at the root (alg2/alg3)
  bool small_n_bypass = false;        // trivial 1- or 2-vertex instance
};

// True iff every vertex is in `members` or adjacent to a member. Members may
// be unsorted but must be valid ids.
bool is_dominating(const Tree& t, const std::vector<int>& members);

// Exact domination number with a witness set, by the standard three-state
// tree DP (in the set / dominated by a child / waiting for the parent).
// Deterministic: ties prefer keeping a vertex out of the set, and the forced
// member in an all-dominated tie is the smallest id.
std::pair<int, std::vector<int>> min_dominating_dp(const Tree& t);

DominationCertificate dp_certificate(const Tree& t);

// Exhaustive check over all vertex subsets via subset-cover DP. Exists purely
// to validate the DP on small instances; refuses n > 20.
int gamma_bruteforce(const Tree& t);

// Classic linear-time greedy: walk bottom-up from vertex 0 and add any vertex
// with a still-undominated child, then patch the root. Produces a minimum
// dominating set on trees; serves as a second independent witness builder.
DominationCertificate greedy_dominating(const Tree& t);

// Weight-propagation construction for trees with no two adjacent degree-2
// vertices. Runs the rational diagonalization (shift -1) interleaved with
// weight pushes: penultimate vertices start at 4/3, a vertex whose weight
// justifies membership and that still has an undominated child joins the set
// and pushes weight - 1, everyone else pushes their full weight. Edge
// detachments affect only the value recurrence; pushes and domination marks
// always follow the original rooted tree. Roots at the smallest-id
// penultimate vertex. The result is a minimum dominating set of size at most
// mu + (p - 1)/3.
//
// Trees on 1 or 2 vertices are returned trivially ({0}); otherwise a tree
// with adjacent degree-2 vertices raises PreconditionError naming them.
DominationCertificate weight_push_dominating(const Tree& t);

// Threshold variant for trees whose deep vertices all have degree >= k
// (k >= 3): penultimate vertices start at 1 + eps with
// eps = 1/((k-2)(k+1)), and a vertex joins exactly when its weight reaches
// 1 + eps. Produces a dominating set smaller than (1 + eps) * p.
//
// eps_override = 1 reruns the same propagation with threshold 2 on trees with
// no adjacent degree-2 vertices (giving |D| < 2p); other override values are
// rejected. Trees on 1 or 2 vertices are returned trivially.
DominationCertificate eps_threshold_dominating(const Tree& t, int k,
                                               std::optional<Rational> eps_override = std::nullopt);

// The eps used by eps_threshold_dominating for a given k.
Rational eps_for_degree(int k);

}  // namespace treelap
