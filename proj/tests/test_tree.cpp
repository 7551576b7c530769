#include <doctest.h>

#include <algorithm>

#include "treelap/domination.hpp"
#include "treelap/generators.hpp"
#include "treelap/tree.hpp"

using namespace treelap;

TEST_CASE("edge-list parsing accepts comments and blank lines") {
  const Tree t = parse_tree("# a three-vertex path\n\n3\n0 1   # first edge\n1 2\n");
  CHECK(t.vertex_count() == 3);
  CHECK(t.degree(1) == 2);
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(2, 1));
  CHECK_FALSE(t.has_edge(0, 2));
}

TEST_CASE("writer output parses back to the same tree") {
  const Tree t = parse_tree("4\n2 0\n0 1\n3 0\n");
  const Tree again = parse_tree(write_tree(t));
  CHECK(again.vertex_count() == 4);
  CHECK(again.edges() == t.edges());  // normalized and sorted either way
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n"), ParseError);            // missing edge line
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 2\n2 0\n"), ParseError);  // extra edge line
  CHECK_THROWS_AS(parse_tree("2\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 5\n"), IdRangeError);
  CHECK_THROWS_AS(parse_tree("4\n0 1\n0 2\n3 3\n"), NotATreeError);  // self-loop
  CHECK_THROWS_AS(parse_tree("3\n0 1\n0 1\n"), NotATreeError);      // duplicate
  // Right edge count but a triangle plus an isolated vertex.
  CHECK_THROWS_AS(parse_tree("4\n0 1\n1 2\n0 2\n"), NotATreeError);
  CHECK(parse_tree("1\n").vertex_count() == 1);
}

TEST_CASE("rooting gives sorted children and a descendants-first order") {
  const Tree t = parse_tree("7\n0 1\n0 2\n1 3\n1 4\n2 5\n5 6\n");
  const RootedTree rt = root_at(t, 0);
  CHECK(rt.parent(0) == -1);
  CHECK(rt.children(1) == std::vector<int>{3, 4});
  CHECK(rt.depth(6) == 3);
  // Every vertex appears after all of its children.
  std::vector<int> position(7);
  const auto& order = rt.bottom_up_order();
  for (int i = 0; i < 7; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int v = 0; v < 7; ++v)
    for (int c : rt.children(v)) CHECK(position[static_cast<std::size_t>(c)] < position[static_cast<std::size_t>(v)]);
  CHECK(order.back() == 0);
}

TEST_CASE("vertex classification") {
  SUBCASE("star") {
    const auto c = classify(star(6));
    CHECK(c.kind[0] == VertexKind::penultimate);
    CHECK(c.leaf_count == 5);
    CHECK(c.penultimate_count == 1);
    CHECK(c.deep_count == 0);
  }
  SUBCASE("two-vertex path has no penultimate vertex") {
    const auto c = classify(path(2));
    CHECK(c.leaf_count == 2);
    CHECK(c.penultimate_count == 0);
    CHECK_FALSE(smallest_penultimate(path(2)).has_value());
  }
  SUBCASE("single vertex classifies as deep") {
    const auto c = classify(path(1));
    CHECK(c.kind[0] == VertexKind::deep);
  }
  SUBCASE("spider center is deep") {
    const auto c = classify(spider(3, 2));
    CHECK(c.kind[0] == VertexKind::deep);
    CHECK(c.penultimate_count == 3);
    CHECK(penultimate_count(spider(3, 2)) == 3);
    CHECK(smallest_penultimate(spider(3, 2)) == 1);
  }
}

TEST_CASE("clean path discovery") {
  SUBCASE("path on 7 picks the lexicographically smallest pair") {
    const auto p = find_clean_path(path(7));
    REQUIRE(p.has_value());
    CHECK(p->a == 0);
    CHECK(p->b == 1);
    CHECK(p->c == 2);
    CHECK(p->d == 3);
  }
  SUBCASE("no adjacent degree-2 vertices") {
    CHECK_FALSE(find_clean_path(star(6)).has_value());
    CHECK_FALSE(find_clean_path(path(3)).has_value());
    CHECK(no_adjacent_degree2(path(3)));
    CHECK(adjacent_degree2_witnesses(path(5)) == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("contracting a clean path") {
  SUBCASE("path on 4 collapses to a point") {
    const auto r = contract_clean_path(path(4), CleanPath{0, 1, 2, 3});
    CHECK(r.tree.vertex_count() == 1);
    CHECK(r.merged == 0);
    CHECK(r.old_to_new == std::vector<int>{0, 0, 0, 0});
  }
  SUBCASE("path on 7 collapses to a path on 4") {
    const auto r = contract_clean_path(path(7), CleanPath{0, 1, 2, 3});
    CHECK(r.tree.vertex_count() == 4);
    CHECK(r.tree.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(r.merged == 0);
    // Survivors 4, 5, 6 shift down behind the merged vertex.
    CHECK(r.old_to_new == std::vector<int>{0, 0, 0, 0, 1, 2, 3});
  }
  SUBCASE("interior contraction keeps outside neighbors") {
    // Star of three length-3 legs; contract inside the first leg.
    const Tree t = spider(3, 3);
    const auto p = find_clean_path(t);
    REQUIRE(p.has_value());
    const auto r = contract_clean_path(t, *p);
    CHECK(r.tree.vertex_count() == 7);
    CHECK(min_dominating_dp(r.tree).first >= 1);  // still a valid tree
    CHECK(r.tree.degree(r.merged) == 2);          // merged vertex joins the two other legs
  }
  SUBCASE("invalid paths are rejected") {
    CHECK_THROWS_AS(contract_clean_path(path(5), CleanPath{0, 1, 3, 4}), BadParameterError);
    CHECK_THROWS_AS(contract_clean_path(star(6), CleanPath{1, 0, 2, 3}), BadParameterError);
    CHECK_THROWS_AS(contract_clean_path(path(4), CleanPath{0, 1, 2, 9}), BadParameterError);
  }
}

TEST_CASE("full reduction removes all adjacent degree-2 pairs") {
  SUBCASE("path on 7 reduces to a point in two steps") {
    const auto r = reduce_adjacent_degree2(path(7));
    CHECK(r.steps == 2);
    CHECK(r.tree.vertex_count() == 1);
  }
  SUBCASE("already reduced trees are untouched") {
    const auto r = reduce_adjacent_degree2(star(6));
    CHECK(r.steps == 0);
    CHECK(r.tree.vertex_count() == 6);
  }
  SUBCASE("result never has adjacent degree-2 vertices") {
    for (int n = 4; n <= 40; ++n) {
      const auto r = reduce_adjacent_degree2(random_tree(n, 77u + static_cast<unsigned>(n)));
      CHECK(no_adjacent_degree2(r.tree));
      CHECK(r.tree.vertex_count() == n - 3 * r.steps);
    }
  }
}

TEST_CASE("minimum deep degree") {
  CHECK_FALSE(min_deep_degree(star(8)).has_value());  // no deep vertices at all
  CHECK(min_deep_degree(spider(3, 2)) == 3);
  CHECK(min_deep_degree(tight_ratio_family(2)) == 2);  // chain vertex inside each subtree
  CHECK(min_deep_degree_at_least(star(8), 99));
  CHECK(min_deep_degree_at_least(spider(4, 2), 4));
  CHECK_FALSE(min_deep_degree_at_least(spider(3, 2), 4));
  CHECK(low_degree_deep_witnesses(spider(3, 2), 4) == std::vector<int>{0});
}
