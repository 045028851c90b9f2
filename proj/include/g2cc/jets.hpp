#pragma once

// Forward-mode second-order jets: value, first and second derivative
// propagated through arithmetic. Used to turn closed-form profile formulas
// into twice-differentiable ScalarFns without hand-deriving chain rules.

#include <cmath>
#include <functional>
#include <string>

#include "g2cc/scalar_fn.hpp"

namespace g2cc {

struct Jet2 {
  double f = 0.0, df = 0.0, d2f = 0.0;

  static Jet2 var(double x) { return {x, 1.0, 0.0}; }
  static Jet2 con(double c) { return {c, 0.0, 0.0}; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.f + b.f, a.df + b.df, a.d2f + b.d2f};
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.f - b.f, a.df - b.df, a.d2f - b.d2f};
  }
  friend Jet2 operator-(const Jet2& a) { return {-a.f, -a.df, -a.d2f}; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.f * b.f, a.df * b.f + a.f * b.df,
            a.d2f * b.f + 2.0 * a.df * b.df + a.f * b.d2f};
  }
  friend Jet2 operator*(double c, const Jet2& a) {
    return {c * a.f, c * a.df, c * a.d2f};
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    double q = a.f / b.f;
    double dq = (a.df - q * b.df) / b.f;
    double d2q = (a.d2f - 2.0 * dq * b.df - q * b.d2f) / b.f;
    return {q, dq, d2q};
  }
  friend Jet2 sqrt(const Jet2& a) {
    double s = std::sqrt(a.f);
    double ds = a.df / (2.0 * s);
    return {s, ds, (a.d2f / 2.0 - ds * ds) / s};
  }

  // Chain rule: this jet is g(u) with derivatives in u; compose with the
  // t-jet of u to obtain derivatives in t.
  Jet2 chain(const Jet2& u) const {
    return {f, df * u.df, d2f * u.df * u.df + df * u.d2f};
  }
};

// ScalarFn from a t-jet-valued callable (two derivative levels available).
inline ScalarFn scalar_fn_from_jet(std::string label,
                                   std::function<Jet2(double)> g) {
  auto g2 = g;
  ScalarFn second = ScalarFn::make(
      label + "''", [g](double t) { return g(t).d2f; },
      [label](double) -> double {
        throw std::logic_error("ScalarFn: no third derivative of " + label);
      });
  ScalarFn first = ScalarFn::with_derivative(
      label + "'", [g2](double t) { return g2(t).df; }, second);
  return ScalarFn::with_derivative(
      label, [g2](double t) { return g2(t).f; }, first);
}

}  // namespace g2cc
