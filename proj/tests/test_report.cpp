#include <doctest.h>

#include "treelap/generators.hpp"
#include "treelap/report.hpp"

using namespace treelap;
using nlohmann::json;

TEST_CASE("rational serialization round-trips exactly") {
  for (const auto& q : {make_rational(-7, 3), Rational(0), make_rational(22, 7),
                        parse_rational("1e-9"), make_rational(4, 3)}) {
    const json j = rational_json(q);
    CHECK(j.at("num").is_string());
    CHECK(j.at("den").is_string());
    CHECK(rational_from_json(j) == q);
  }
  const json j = rational_json(make_rational(-1, 2));
  CHECK(j.at("num") == "-1");
  CHECK(j.at("den") == "2");
  CHECK(j.at("dec") == "-0.500000000000");
}

TEST_CASE("analysis payload carries the counting statistics") {
  const json a = analysis_json(ratio54_example());
  CHECK(a.at("n") == 11);
  CHECK(a.at("mu") == 4);
  CHECK(a.at("gamma") == 5);
  CHECK(a.at("penultimate") == 4);
  CHECK(a.at("gamma_witness").size() == 5);
  CHECK(rational_from_json(a.at("ratio_gamma_mu")) == make_rational(5, 4));
  CHECK(a.at("all_checks_pass") == true);
  CHECK(a.at("weight_push").at("size") == 5);
  // Degree histogram: four leaves, five degree-2, two degree-3 vertices.
  CHECK(a.at("degree_histogram") == json::array({0, 4, 5, 2}));
  CHECK(a.at("no_adjacent_degree2") == true);
  CHECK(a.at("min_deep_degree") == 2);  // the hub and both internal vertices are deep
  CHECK(analysis_json(star(5)).at("min_deep_degree").is_null());
}

TEST_CASE("certificate payload carries bounds and optional trace") {
  const Tree t = ratio54_example();
  const auto cert = weight_push_dominating(t);
  const json without = certificate_json(cert, t);
  CHECK(without.at("method") == "alg2");
  CHECK(without.at("size") == 5);
  CHECK(without.at("is_dominating") == true);
  CHECK_FALSE(without.contains("trace"));
  bool saw_bound = false;
  for (const auto& b : without.at("bounds_checked"))
    saw_bound |= b.at("name") == "size_le_mu_plus_third_of_p_minus_1" && b.at("pass") == true;
  CHECK(saw_bound);

  const json with = certificate_json(cert, t, true);
  REQUIRE(with.contains("trace"));
  CHECK(with.at("trace").size() == cert.trace.size());
  const auto& first = with.at("trace").at(0);
  CHECK(first.contains("vertex"));
  CHECK(first.contains("weight"));
  CHECK(first.contains("pushed"));
  CHECK(rational_from_json(with.at("root_residual")) == cert.root_residual);
}

TEST_CASE("interval payload preserves exactness flags") {
  const auto intervals = localize_spectrum(star(4), Rational(1, 512));
  const json j = intervals_json(intervals);
  REQUIRE(j.size() == 3);
  CHECK(j.at(1).at("multiplicity") == 2);
  CHECK(j.at(1).at("exact") == true);
  CHECK(rational_from_json(j.at(1).at("lo")) == 1);
}

TEST_CASE("summary payload flattens the per-check map") {
  std::vector<Tree> trees{path(5), star(6), caterpillar(2)};
  const auto reports = run_batch(trees, CheckOptions{}, BatchMode::serial);
  const json j = summary_json(summarize(reports));
  CHECK(j.at("trees") == 3);
  CHECK(j.at("trees_failed") == 0);
  bool saw = false;
  for (const auto& c : j.at("checks")) saw |= c.at("name") == "greedy_minimum" && c.at("run") == 3;
  CHECK(saw);
}
