#pragma once

#include <cstdint>
#include <vector>

#include "treelap/tree.hpp"

namespace treelap {

// Eleven-vertex tree whose domination number (5) exceeds its count of
// small eigenvalues (4): a root over two internal vertices, each carrying two
// penultimate-plus-leaf pairs. Ids: root 0, internals 1-2, penultimates 3-6,
// leaves 7-10 (leaf 6+i hangs off penultimate 2+i).
Tree ratio54_example();

// Family approaching the 4/3 domination-to-small-eigenvalue ratio: a root
// joined to k copies of a fixed 9-vertex subtree. Copy i occupies ids
// 1+9i .. 9+9i as (u, a, b, p1, l1, p2, l2, p3, l3): u hangs off the root and
// carries the chain u-a-b plus penultimate pair (p1, l1); b carries pairs
// (p2, l2) and (p3, l3). Totals: n = 9k+1, mu = 3k+1, gamma = 4k.
Tree tight_ratio_family(int k);

// Caterpillar on 4n-1 vertices: a path of 3n vertices (ids 0..3n-1 in path
// order) with one extra leaf on every third path vertex except the first
// (path ids 4, 7, ..., 3n-2; the added leaves take ids 3n..4n-2 in the same
// order). Its large-eigenvalue count is 2n-1 against a domination number of
// n, so the ratio tends to 2.
Tree caterpillar(int n);

// Star on n vertices, center 0.
Tree star(int n);

// Path on n vertices in id order.
Tree path(int n);

// `legs` paths of `leg_len` vertices hanging off center 0; leg i occupies ids
// 1 + i*leg_len .. (i+1)*leg_len walking outward.
Tree spider(int legs, int leg_len);

// Uniform random labeled tree via a seeded Pruefer sequence (SplitMix64).
Tree random_tree(int n, std::uint64_t seed);

// Random tree with no two adjacent degree-2 vertices: sample, contract clean
// length-3 paths until none remain, and pad with leaves on vertex 0 if the
// result drops below 3 vertices. Output size is at most n but varies.
Tree random_no_adjacent_degree2(int n, std::uint64_t seed);

// Random tree whose deep vertices all have degree >= k: sample a backbone on
// n vertices, then give every under-degree deep vertex pendant length-2 paths
// (in ascending id order) until it reaches k. Output may exceed n vertices.
Tree random_min_deep_degree(int n, int k, std::uint64_t seed);

// Pruefer code of a labeled tree (length n-2, empty for n <= 2) and its
// inverse. decode accepts any sequence over 0..n-1.
std::vector<int> prufer_encode(const Tree& t);
Tree prufer_decode(int n, const std::vector<int>& sequence);

}  // namespace treelap
