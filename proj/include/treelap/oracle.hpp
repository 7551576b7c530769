#pragma once

#include <optional>
#include <vector>

#include "treelap/tree.hpp"

namespace treelap {

// Dense symmetric matrix in row-major storage. Deliberately minimal: it only
// exists to feed the independent floating-point eigensolver that cross-checks
// the exact integer counts.
struct DenseMatrix {
  int n = 0;
  std::vector<double> a;

  explicit DenseMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Laplacian D - A of the tree.
DenseMatrix laplacian_matrix(const Tree& t);

// Eigenvalues by the cyclic Jacobi rotation method, ascending. Independent of
// the exact engine by construction (different algorithm, different
// arithmetic). Throws BadParameterError for n > 512 and NoConvergenceError if
// the off-diagonal norm is still above tol after max_sweeps sweeps.
std::vector<double> jacobi_eigenvalues(DenseMatrix m, double tol = 1e-10, int max_sweeps = 100);

// Counts eigenvalues in [a, b) from a floating-point spectrum, refusing to
// answer when the result could be an artifact of rounding: nullopt if any
// eigenvalue lies within `guard` of b, or within `guard` of a without being
// exactly a. Exact hits on the closed endpoint a are counted with confidence;
// everything else near a boundary is indeterminate.
std::optional<int> interval_count_numeric(const std::vector<double>& eigenvalues, double a, double b,
                                          double guard);

}  // namespace treelap
