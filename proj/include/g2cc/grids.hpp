#pragma once

// Sample-grid builders shared by the verification harness and the CLI.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace g2cc {

inline std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * double(i) / double(n - 1);
  out.back() = hi;
  return out;
}

// Chebyshev-distributed points per decade of t on [lo, hi], avoiding the
// endpoints of each decade clustering pathologically. t = 0 is never
// included; boundary behaviour is handled by polynomial fits instead.
inline std::vector<double> chebyshev_decade_grid(double lo, double hi,
                                                 std::size_t per_decade = 400) {
  std::vector<double> out;
  double d0 = std::floor(std::log10(lo));
  double d1 = std::ceil(std::log10(hi));
  for (double d = d0; d < d1; d += 1.0) {
    double a = std::max(lo, std::pow(10.0, d));
    double b = std::min(hi, std::pow(10.0, d + 1.0));
    if (!(a < b)) continue;
    for (std::size_t k = 0; k < per_decade; ++k) {
      double theta = M_PI * (double(k) + 0.5) / double(per_decade);
      double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g2cc
