#pragma once

// Small dense helpers: Householder least squares and a tridiagonal solve.
// Problem sizes here are tiny (polynomial fits of degree <= 8, spline
// systems along one axis), so no external linear algebra is pulled in.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace g2cc {

// Solves min ||A x - b||_2 by Householder QR. A is row-major m x n, m >= n.
inline std::vector<double> least_squares(std::vector<double> A,
                                         std::vector<double> b,
                                         std::size_t m, std::size_t n) {
  if (A.size() != m * n || b.size() != m || m < n)
    throw std::invalid_argument("least_squares: bad dimensions");
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += A[i * n + k] * A[i * n + k];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::domain_error("least_squares: rank deficient");
    double alpha = A[k * n + k] > 0 ? -norm : norm;
    // v = column - alpha e_k, applied implicitly
    std::vector<double> v(m - k);
    v[0] = A[k * n + k] - alpha;
    for (std::size_t i = k + 1; i < m; ++i) v[i - k] = A[i * n + k];
    double vtv = 0.0;
    for (double x : v) vtv += x * x;
    if (vtv == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += v[i - k] * A[i * n + j];
      double beta = 2.0 * dot / vtv;
      for (std::size_t i = k; i < m; ++i) A[i * n + j] -= beta * v[i - k];
    }
    double dot = 0.0;
    for (std::size_t i = k; i < m; ++i) dot += v[i - k] * b[i];
    double beta = 2.0 * dot / vtv;
    for (std::size_t i = k; i < m; ++i) b[i] -= beta * v[i - k];
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= A[k * n + j] * x[j];
    x[k] = acc / A[k * n + k];
  }
  return x;
}

// Thomas algorithm for a tridiagonal system (lower, diag, upper, rhs).
// Diagonals are modified in place.
inline std::vector<double> solve_tridiagonal(std::vector<double> lower,
                                             std::vector<double> diag,
                                             std::vector<double> upper,
                                             std::vector<double> rhs) {
  std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  return x;
}

}  // namespace g2cc
