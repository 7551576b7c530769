#include <doctest.h>

#include <set>

#include "treelap/domination.hpp"
#include "treelap/generators.hpp"
#include "treelap/inertia.hpp"

using namespace treelap;

TEST_CASE("eleven-vertex example statistics") {
  const Tree t = ratio54_example();
  CHECK(t.vertex_count() == 11);
  CHECK(penultimate_count(t) == 4);
  CHECK(mu(t) == 4);
  CHECK(min_dominating_dp(t).first == 5);  // gamma/mu = 5/4
  CHECK(no_adjacent_degree2(t));
}

TEST_CASE("tight family statistics") {
  SUBCASE("shape for k = 2") {
    const Tree t = tight_ratio_family(2);
    CHECK(t.vertex_count() == 19);
    CHECK(t.degree(0) == 2);           // root sees one vertex per subtree
    CHECK(penultimate_count(t) == 6);  // three per subtree
    CHECK(mu(t) == 7);
    CHECK(min_dominating_dp(t).first == 8);
  }
  SUBCASE("counting statistics across k") {
    for (int k : {1, 2, 3, 7, 10}) {
      const Tree t = tight_ratio_family(k);
      CHECK(t.vertex_count() == 9 * k + 1);
      CHECK(mu(t) == 3 * k + 1);
      CHECK(min_dominating_dp(t).first == 4 * k);
      CHECK(no_adjacent_degree2(t));
    }
  }
  SUBCASE("per-vertex diagonalization values at shift -1") {
    // Rooted at the hub: hub -1/2; the first subtree's top vertex is the
    // hub's consumed zero child (2), the other tops stay 0; chain vertices
    // 1/2 then 2; penultimate vertices -1/2; leaves 2.
    const int k = 3;
    const Tree t = tight_ratio_family(k);
    const auto r = diagonalize(root_at(t, 0), Rational(-1));
    CHECK(r.value[0] == Rational(-1, 2));
    for (int i = 0; i < k; ++i) {
      const std::size_t u = static_cast<std::size_t>(1 + 9 * i);
      CHECK(r.value[u] == (i == 0 ? Rational(2) : Rational(0)));
      CHECK(r.value[u + 1] == Rational(1, 2));  // chain vertex a
      CHECK(r.value[u + 2] == Rational(2));     // chain vertex b
      CHECK(r.value[u + 3] == Rational(-1, 2));
      CHECK(r.value[u + 5] == Rational(-1, 2));
      CHECK(r.value[u + 7] == Rational(-1, 2));
      CHECK(r.value[u + 4] == Rational(2));
      CHECK(r.value[u + 6] == Rational(2));
      CHECK(r.value[u + 8] == Rational(2));
    }
  }
}

TEST_CASE("caterpillar statistics") {
  SUBCASE("sizes and counts") {
    for (int n : {1, 2, 3, 5, 9}) {
      const Tree t = caterpillar(n);
      CHECK(t.vertex_count() == 4 * n - 1);
      CHECK(nu(t) == 2 * n - 1);
      CHECK(min_dominating_dp(t).first == n);
    }
  }
  SUBCASE("diagonalization values at shift -2 for three segments") {
    // Rooted at the top spine vertex, the spine reads (-1, 1, -1, 1, 1, -1,
    // 1, 1, -2) and both added leaves end at -1.
    const Tree t = caterpillar(3);
    const auto r = diagonalize(root_at(t, 8), Rational(-2));
    const std::vector<Rational> spine{Rational(-1), Rational(1),  Rational(-1),
                                      Rational(1),  Rational(1),  Rational(-1),
                                      Rational(1),  Rational(1),  Rational(-2)};
    for (std::size_t v = 0; v < spine.size(); ++v) CHECK(r.value[v] == spine[v]);
    CHECK(r.value[9] == Rational(-1));
    CHECK(r.value[10] == Rational(-1));
    CHECK(nu(t) == 5);
  }
}

TEST_CASE("basic families") {
  CHECK(star(1).vertex_count() == 1);
  CHECK(star(7).degree(0) == 6);
  CHECK(path(6).degree(5) == 1);
  CHECK(spider(4, 3).vertex_count() == 13);
  CHECK(spider(4, 3).degree(0) == 4);
  CHECK_THROWS_AS(star(0), BadParameterError);
  CHECK_THROWS_AS(path(-1), BadParameterError);
  CHECK_THROWS_AS(spider(0, 2), BadParameterError);
  CHECK_THROWS_AS(tight_ratio_family(0), BadParameterError);
  CHECK_THROWS_AS(caterpillar(0), BadParameterError);
}

TEST_CASE("pruefer codes") {
  SUBCASE("decode matches known small cases") {
    const Tree t = prufer_decode(4, {1, 1});  // star around vertex 1
    CHECK(t.degree(1) == 3);
    CHECK(prufer_encode(t) == std::vector<int>{1, 1});
  }
  SUBCASE("encode and decode are inverse on random trees") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(40));
      const Tree t = random_tree(n, rng.next());
      const Tree back = prufer_decode(n, prufer_encode(t));
      CHECK(back.edges() == t.edges());
    }
  }
  SUBCASE("bad codes are rejected") {
    CHECK_THROWS_AS(prufer_decode(5, {0, 9, 1}), IdRangeError);
    CHECK_THROWS_AS(prufer_decode(5, {0, 1}), BadParameterError);
  }
}

TEST_CASE("random generators are deterministic per seed") {
  CHECK(random_tree(25, 7).edges() == random_tree(25, 7).edges());
  CHECK(random_tree(25, 7).edges() != random_tree(25, 8).edges());
  CHECK(random_no_adjacent_degree2(40, 9).edges() == random_no_adjacent_degree2(40, 9).edges());
  CHECK(random_min_deep_degree(30, 4, 5).edges() == random_min_deep_degree(30, 4, 5).edges());
}

TEST_CASE("random family postconditions") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(70));
    CHECK(random_tree(n, rng.next()).vertex_count() == n);

    const Tree reduced = random_no_adjacent_degree2(std::max(n, 3), rng.next());
    CHECK(reduced.vertex_count() >= 3);
    CHECK(no_adjacent_degree2(reduced));

    for (int k : {3, 5}) {
      const Tree thick = random_min_deep_degree(std::max(n, 4), k, rng.next());
      CHECK(min_deep_degree_at_least(thick, k));
    }
  }
}

TEST_CASE("random labeled trees cover distinct shapes") {
  // 16 labeled trees exist on 4 vertices; a short seed sweep should find
  // several distinct ones (sanity check that seeding actually varies).
  std::set<std::vector<std::pair<int, int>>> shapes;
  for (std::uint64_t seed = 0; seed < 24; ++seed) shapes.insert(random_tree(4, seed).edges());
  CHECK(shapes.size() >= 6);
}
