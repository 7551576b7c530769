#include "treelap/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace treelap {

DenseMatrix laplacian_matrix(const Tree& t) {
  const int n = t.vertex_count();
  DenseMatrix m(n);
  for (int v = 0; v < n; ++v) m.at(v, v) = t.degree(v);
  for (auto [u, v] : t.edges()) {
    m.at(u, v) = -1.0;
    m.at(v, u) = -1.0;
  }
  return m;
}

namespace {

double off_diagonal_norm(const DenseMatrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) sum += m.at(i, j) * m.at(i, j);
  return std::sqrt(2.0 * sum);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(DenseMatrix m, double tol, int max_sweeps) {
  if (m.n > 512)
    throw BadParameterError("dense eigensolver capped at 512 vertices, got " + std::to_string(m.n));
  if (m.n == 1) return {m.at(0, 0)};

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(m) <= tol) break;
    for (int p = 0; p < m.n - 1; ++p) {
      for (int q = p + 1; q < m.n; ++q) {
        const double apq = m.at(p, q);
        if (apq == 0.0) continue;
        // Classic two-sided rotation choosing the smaller angle root.
        const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        const double tangent =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tangent * tangent + 1.0);
        const double s = tangent * c;
        for (int k = 0; k < m.n; ++k) {
          const double akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < m.n; ++k) {
          const double apk = m.at(p, k), aqk = m.at(q, k);
          m.at(p, k) = c * apk - s * aqk;
          m.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  if (off_diagonal_norm(m) > tol)
    throw NoConvergenceError("Jacobi sweeps exhausted with off-diagonal norm " +
                             std::to_string(off_diagonal_norm(m)));

  std::vector<double> eigenvalues(m.n);
  for (int i = 0; i < m.n; ++i) eigenvalues[i] = m.at(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

std::optional<int> interval_count_numeric(const std::vector<double>& eigenvalues, double a, double b,
                                          double guard) {
  int count = 0;
  for (double lambda : eigenvalues) {
    // Within guard of the open endpoint: can't tell which side it is on.
    if (std::abs(lambda - b) <= guard) return std::nullopt;
    // Within guard of the closed endpoint: only an exact hit is trustworthy.
    if (lambda != a && std::abs(lambda - a) <= guard) return std::nullopt;
    if (lambda >= a && lambda < b) ++count;
  }
  return count;
}

}  // namespace treelap
