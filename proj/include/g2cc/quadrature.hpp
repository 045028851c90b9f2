#pragma once

// Quadrature helpers on top of boost's adaptive Gauss-Kronrod rule. All
// integrands passed here must already be smooth: endpoint singularities are
// removed analytically by the callers (substitution or splitting), never by
// brute-force refinement.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <functional>
#include <stdexcept>
#include <vector>

namespace g2cc {

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13) {
  if (a == b) return 0.0;
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 12, tol, &err);
  double scale = std::max(1.0, std::abs(v));
  if (err > 1e-8 * scale)
    throw std::runtime_error("integrate: quadrature did not converge");
  return v;
}

// Cumulative integral of f over the node sequence: out[k] = int_{x0}^{xk} f.
inline std::vector<double> cumulative_integral(
    const std::function<double(double)>& f, const std::vector<double>& x,
    double tol = 1e-13) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t k = 1; k < x.size(); ++k)
    out[k] = out[k - 1] + integrate(f, x[k - 1], x[k], tol);
  return out;
}

}  // namespace g2cc
