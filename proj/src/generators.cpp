#include "treelap/generators.hpp"

#include <set>

#include "treelap/rng.hpp"

namespace treelap {

Tree ratio54_example() {
  return Tree::from_edges(11, {{0, 1},
                               {0, 2},
                               {1, 3},
                               {1, 4},
                               {2, 5},
                               {2, 6},
                               {3, 7},
                               {4, 8},
                               {5, 9},
                               {6, 10}});
}

Tree tight_ratio_family(int k) {
  if (k < 1) throw BadParameterError("subtree count must be at least 1, got " + std::to_string(k));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(9) * k);
  for (int i = 0; i < k; ++i) {
    const int u = 1 + 9 * i, a = u + 1, b = u + 2;
    const int p1 = u + 3, l1 = u + 4, p2 = u + 5, l2 = u + 6, p3 = u + 7, l3 = u + 8;
    edges.insert(edges.end(),
                 {{0, u}, {u, a}, {a, b}, {u, p1}, {p1, l1}, {b, p2}, {p2, l2}, {b, p3}, {p3, l3}});
  }
  return Tree::from_edges(9 * k + 1, std::move(edges));
}

Tree caterpillar(int n) {
  if (n < 1) throw BadParameterError("segment count must be at least 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  const int spine = 3 * n;
  for (int v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
  for (int i = 2; i <= n; ++i) edges.emplace_back(3 * i - 2, spine + i - 2);
  return Tree::from_edges(4 * n - 1, std::move(edges));
}

Tree star(int n) {
  if (n < 1) throw BadParameterError("vertex count must be at least 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(n, std::move(edges));
}

Tree path(int n) {
  if (n < 1) throw BadParameterError("vertex count must be at least 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree::from_edges(n, std::move(edges));
}

Tree spider(int legs, int leg_len) {
  if (legs < 1 || leg_len < 1)
    throw BadParameterError("spider needs at least one leg of length at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < legs; ++i) {
    const int first = 1 + i * leg_len;
    edges.emplace_back(0, first);
    for (int j = 1; j < leg_len; ++j) edges.emplace_back(first + j - 1, first + j);
  }
  return Tree::from_edges(1 + legs * leg_len, std::move(edges));
}

Tree prufer_decode(int n, const std::vector<int>& sequence) {
  if (n < 1) throw BadParameterError("vertex count must be at least 1, got " + std::to_string(n));
  if (n <= 2) {
    return n == 1 ? Tree::from_edges(1, {}) : Tree::from_edges(2, {{0, 1}});
  }
  if (static_cast<int>(sequence.size()) != n - 2)
    throw BadParameterError("code length must be n-2");
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n) throw IdRangeError("code entry " + std::to_string(v) + " out of range");
    ++degree[v];
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int v : sequence) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  const int x = *leaves.begin();
  const int y = *std::next(leaves.begin());
  edges.emplace_back(x, y);
  return Tree::from_edges(n, std::move(edges));
}

std::vector<int> prufer_encode(const Tree& t) {
  const int n = t.vertex_count();
  if (n <= 2) return {};
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);

  std::vector<char> gone(n, 0);
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(n) - 2);
  for (int step = 0; step < n - 2; ++step) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    gone[leaf] = 1;
    int parent = -1;
    for (int w : t.neighbors(leaf)) {
      if (!gone[w]) {
        parent = w;
        break;
      }
    }
    code.push_back(parent);
    if (--degree[parent] == 1) leaves.insert(parent);
  }
  return code;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw BadParameterError("vertex count must be at least 1, got " + std::to_string(n));
  if (n <= 2) return prufer_decode(n, {});
  SplitMix64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n) - 2);
  for (int& v : code) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return prufer_decode(n, code);
}

Tree random_no_adjacent_degree2(int n, std::uint64_t seed) {
  Tree t = reduce_adjacent_degree2(random_tree(n, seed)).tree;
  // Contraction can collapse small inputs below the 3-vertex floor the
  // propagation algorithms assume; grow such remnants back into a P_3.
  while (t.vertex_count() < 3) {
    auto edges = t.edges();
    edges.emplace_back(0, t.vertex_count());
    t = Tree::from_edges(t.vertex_count() + 1, std::move(edges));
  }
  return t;
}

Tree random_min_deep_degree(int n, int k, std::uint64_t seed) {
  if (k < 3) throw BadParameterError("degree threshold must be at least 3, got " + std::to_string(k));
  const Tree backbone = random_tree(n, seed);
  const auto cls = classify(backbone);
  auto edges = backbone.edges();
  int next = n;
  for (int v = 0; v < n; ++v) {
    if (cls.kind[v] != VertexKind::deep) continue;
    for (int extra = backbone.degree(v); extra < k; ++extra) {
      edges.emplace_back(v, next);          // branch vertex
      edges.emplace_back(next, next + 1);   // its leaf
      next += 2;
    }
  }
  return Tree::from_edges(next, std::move(edges));
}

}  // namespace treelap
