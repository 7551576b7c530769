#include <doctest.h>

#include <cmath>

#include "treelap/generators.hpp"
#include "treelap/inertia.hpp"
#include "treelap/oracle.hpp"

using namespace treelap;

TEST_CASE("laplacian assembly") {
  const auto m = laplacian_matrix(path(3));
  CHECK(m.at(0, 0) == 1.0);
  CHECK(m.at(1, 1) == 2.0);
  CHECK(m.at(0, 1) == -1.0);
  CHECK(m.at(0, 2) == 0.0);
  CHECK(m.at(2, 1) == -1.0);
}

TEST_CASE("jacobi eigenvalues of small trees") {
  SUBCASE("2-path") {
    const auto eigs = jacobi_eigenvalues(laplacian_matrix(path(2)));
    REQUIRE(eigs.size() == 2);
    CHECK(eigs[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(eigs[1] == doctest::Approx(2.0).epsilon(1e-9));
  }
  SUBCASE("4-star spectrum {0, 1, 1, 4}") {
    const auto eigs = jacobi_eigenvalues(laplacian_matrix(star(4)));
    REQUIRE(eigs.size() == 4);
    CHECK(eigs[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(eigs[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eigs[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eigs[3] == doctest::Approx(4.0).epsilon(1e-9));
  }
  SUBCASE("paths match the closed form") {
    for (int n : {5, 9, 17}) {
      const auto eigs = jacobi_eigenvalues(laplacian_matrix(path(n)));
      for (int k = 0; k < n; ++k) {
        const double expected = 2.0 - 2.0 * std::cos(k * M_PI / n);
        CHECK(eigs[static_cast<std::size_t>(k)] == doctest::Approx(expected).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("jacobi agrees with exact counting on random trees") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(60));
    const Tree t = random_tree(n, rng.next());
    const auto eigs = jacobi_eigenvalues(laplacian_matrix(t));
    double sum = 0.0;
    for (double e : eigs) sum += e;
    CHECK(sum == doctest::Approx(2.0 * (n - 1)).epsilon(1e-8));

    const auto below1 = interval_count_numeric(eigs, -1.0, 1.0, 1e-6);
    if (below1) CHECK(*below1 == count_below(t, Rational(1)));
    const auto in_02 = interval_count_numeric(eigs, 0.0, 2.0, 1e-6);
    if (in_02) CHECK(*in_02 == count_in_interval(t, Rational(0), Rational(2), true, false));
  }
}

TEST_CASE("numeric interval counting refuses ambiguous inputs") {
  const std::vector<double> eigs{0.0, 1.0, 1.0 + 1e-9, 3.0};
  // 1 + 1e-9 sits within the guard of the open endpoint.
  CHECK_FALSE(interval_count_numeric(eigs, 0.0, 1.0 + 2e-9, 1e-6).has_value());
  // An exact hit on the closed endpoint is counted with confidence...
  CHECK(interval_count_numeric(eigs, 0.0, 0.5, 1e-6) == 1);
  // ...but a near-hit on the closed endpoint is ambiguous.
  CHECK_FALSE(interval_count_numeric(eigs, 1.0 - 1e-9, 2.0, 1e-6).has_value());
  CHECK(interval_count_numeric(eigs, 0.5, 4.0, 1e-6) == 3);
}

TEST_CASE("size cap on the dense solver") {
  CHECK_THROWS_AS(jacobi_eigenvalues(DenseMatrix(600)), BadParameterError);
}
