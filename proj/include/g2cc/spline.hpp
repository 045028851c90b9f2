#pragma once

// Cubic interpolating spline with not-a-knot end conditions, in moment form.
// Needs at least four nodes; outside the node range the boundary cubic is
// extended. Value, first and second derivative are available, so a
// spline-backed ScalarFn remains twice differentiable.

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "g2cc/linalg.hpp"
#include "g2cc/scalar_fn.hpp"

namespace g2cc {

class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    std::size_t n = x_.size();
    if (n < 4 || y_.size() != n)
      throw std::invalid_argument("CubicSpline: need >= 4 nodes");
    for (std::size_t i = 1; i < n; ++i)
      if (!(x_[i] > x_[i - 1]))
        throw std::invalid_argument("CubicSpline: abscissae not increasing");

    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

    // Reduced tridiagonal system for the interior moments M_1..M_{n-2};
    // the not-a-knot conditions eliminate M_0 and M_{n-1}.
    std::size_t m = n - 2;
    std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0), rhs(m);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      std::size_t r = i - 1;
      rhs[r] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
      lower[r] = h[i - 1] / 6.0;
      diag[r] = (h[i - 1] + h[i]) / 3.0;
      upper[r] = h[i] / 6.0;
    }
    // left end: M_0 = (1 + h0/h1) M_1 - (h0/h1) M_2
    diag[0] = (h[0] + h[1]) * (h[0] + 2.0 * h[1]) / (6.0 * h[1]);
    upper[0] = (h[1] * h[1] - h[0] * h[0]) / (6.0 * h[1]);
    // right end, mirrored
    double hn = h[n - 2], hp = h[n - 3];
    diag[m - 1] = (hn + hp) * (hn + 2.0 * hp) / (6.0 * hp);
    lower[m - 1] = (hp * hp - hn * hn) / (6.0 * hp);

    std::vector<double> mid = solve_tridiagonal(lower, diag, upper, rhs);
    M_.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) M_[i + 1] = mid[i];
    M_[0] = (1.0 + h[0] / h[1]) * M_[1] - (h[0] / h[1]) * M_[2];
    M_[n - 1] = (1.0 + hn / hp) * M_[n - 2] - (hn / hp) * M_[n - 3];
  }

  double operator()(double x) const { return eval(x); }

  double eval(double x) const {
    std::size_t i = segment(x);
    double h = x_[i + 1] - x_[i], u = x_[i + 1] - x, v = x - x_[i];
    return M_[i] * u * u * u / (6.0 * h) + M_[i + 1] * v * v * v / (6.0 * h) +
           (y_[i] / h - M_[i] * h / 6.0) * u +
           (y_[i + 1] / h - M_[i + 1] * h / 6.0) * v;
  }

  double deriv(double x) const {
    std::size_t i = segment(x);
    double h = x_[i + 1] - x_[i], u = x_[i + 1] - x, v = x - x_[i];
    return -M_[i] * u * u / (2.0 * h) + M_[i + 1] * v * v / (2.0 * h) +
           (y_[i + 1] - y_[i]) / h - (M_[i + 1] - M_[i]) * h / 6.0;
  }

  double deriv2(double x) const {
    std::size_t i = segment(x);
    double h = x_[i + 1] - x_[i];
    return M_[i] * (x_[i + 1] - x) / h + M_[i + 1] * (x - x_[i]) / h;
  }

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

  // Wraps a shared spline as a twice-differentiable ScalarFn.
  static ScalarFn as_scalar_fn(std::shared_ptr<const CubicSpline> sp,
                               std::string label) {
    ScalarFn second = ScalarFn::make(
        label + "''", [sp](double t) { return sp->deriv2(t); },
        [sp](double t) {
          // third derivative: piecewise constant
          std::size_t i = sp->segment(t);
          double h = sp->x_[i + 1] - sp->x_[i];
          return (sp->M_[i + 1] - sp->M_[i]) / h;
        });
    ScalarFn first = ScalarFn::with_derivative(
        label + "'", [sp](double t) { return sp->deriv(t); }, second);
    return ScalarFn::with_derivative(
        label, [sp](double t) { return sp->eval(t); }, first);
  }

 private:
  std::size_t segment(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : std::size_t(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
  }

  std::vector<double> x_, y_, M_;
};

}  // namespace g2cc
