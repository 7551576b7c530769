#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treelap/errors.hpp"

namespace treelap {

// Immutable unrooted tree on vertices 0..n-1. Construction validates the full
// tree property (exactly n-1 edges, no self-loops or duplicates, connected),
// so every Tree in the system is structurally sound by type.
class Tree {
 public:
  static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  // Neighbors in ascending id order.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  // Edges normalized to (min, max) and sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;

 private:
  Tree() = default;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Edge-list text format:
//   - '#' starts a comment that runs to end of line; blank lines are skipped
//   - first significant line: vertex count n
//   - then exactly n-1 lines "u v" with 0-based endpoints
// parse_tree throws ParseError / IdRangeError / NotATreeError as appropriate;
// write_tree emits the same format (sorted edges, no comments).
Tree parse_tree(const std::string& text);
Tree load_tree(const std::string& path);
std::string write_tree(const Tree& t);

// Rooted view of a tree: parents, children (ascending id), and a bottom-up
// processing order (every vertex appears after all of its descendants; it is
// the reverse of a BFS from the root, so the order is deterministic).
class RootedTree {
 public:
  RootedTree(Tree t, int root);

  const Tree& tree() const { return tree_; }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }  // -1 for the root
  const std::vector<int>& children(int v) const { return children_[v]; }
  const std::vector<int>& bottom_up_order() const { return order_; }
  int depth(int v) const { return depth_[v]; }

 private:
  Tree tree_;
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> order_;
  std::vector<int> depth_;
};

inline RootedTree root_at(const Tree& t, int root) { return RootedTree(t, root); }

// Vertex roles used throughout: a leaf has degree 1; a penultimate vertex has
// degree >= 2 and at least one leaf neighbor; everything else is deep. The
// lone vertex of the one-vertex tree has no leaf neighbor and degree 0, so it
// classifies as deep.
enum class VertexKind { leaf, penultimate, deep };

struct Classification {
  std::vector<VertexKind> kind;
  int leaf_count = 0;
  int penultimate_count = 0;
  int deep_count = 0;
};

Classification classify(const Tree& t);

// Count of penultimate vertices (the "p" statistic).
int penultimate_count(const Tree& t);

// Smallest-id penultimate vertex, if any. Used as the canonical root for the
// weight-propagation algorithms.
std::optional<int> smallest_penultimate(const Tree& t);

// A path a-b-c-d whose interior vertices b and c both have degree 2. In a
// tree any adjacent degree-2 pair b < c extends uniquely to such a path, and
// its four vertices are automatically distinct.
struct CleanPath {
  int a, b, c, d;
};

// Lexicographically smallest adjacent degree-2 pair (b, c) with b < c, or
// nullopt when the tree has no adjacent degree-2 vertices.
std::optional<CleanPath> find_clean_path(const Tree& t);

struct ContractionResult {
  Tree tree;                    // the contracted tree on n-3 vertices
  int merged;                   // new id of the vertex replacing {a, b, c, d}
  std::vector<int> old_to_new;  // size n; the four removed ids all map to merged
};

// Contracts the path onto a single vertex e adjacent to every outside
// neighbor of a and d. Surviving ids are renumbered order-preservingly, with
// e sorted at min(a, b, c, d). Throws BadParameterError if the path is not a
// clean length-3 path of t.
ContractionResult contract_clean_path(const Tree& t, const CleanPath& p);

struct ReductionResult {
  Tree tree;
  int steps;
  std::vector<CleanPath> contracted;  // the path chosen at each step, in original-of-step ids
};

// Repeatedly contracts find_clean_path until none remains. Terminates because
// each step removes three vertices.
ReductionResult reduce_adjacent_degree2(const Tree& t);

// Minimum degree among deep vertices; nullopt when there are none (which
// vacuously satisfies any minimum-degree threshold).
std::optional<int> min_deep_degree(const Tree& t);

// True when no two adjacent vertices both have degree 2 (the domain of the
// 4/3-bound weight propagation).
bool no_adjacent_degree2(const Tree& t);

// Vertices witnessing a violation: every vertex of an adjacent degree-2 pair.
std::vector<int> adjacent_degree2_witnesses(const Tree& t);

// True when every deep vertex has degree >= k.
bool min_deep_degree_at_least(const Tree& t, int k);

// Deep vertices of degree < k, ascending.
std::vector<int> low_degree_deep_witnesses(const Tree& t, int k);

}  // namespace treelap
