#pragma once

// Scalar functions of the cohomogeneity-one parameter t that know their own
// analytic t-derivative. Sums, products and quotients propagate derivatives
// by the Leibniz/quotient rules, so arbitrarily nested coefficient
// expressions (metric functions, torsion coefficients, ...) stay exactly
// differentiable. Finite differences never enter the computation path.

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2cc {

class ScalarFn {
 public:
  using Fn = std::function<double(double)>;

  ScalarFn() : ScalarFn(zero()) {}

  static ScalarFn zero() {
    static const ScalarFn z = make_impl(
        "0", [](double) { return 0.0; }, [] { return ScalarFn::zero(); },
        /*is_zero=*/true);
    return z;
  }

  static ScalarFn constant(double c) {
    if (c == 0.0) return zero();
    return make_impl(
        format_num(c), [c](double) { return c; }, [] { return zero(); });
  }

  // Polynomial c0 + c1 t + c2 t^2 + ...
  static ScalarFn polynomial(std::vector<double> coeffs,
                             std::string label = "") {
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.empty()) return zero();
    if (coeffs.size() == 1) return constant(coeffs[0]);
    auto eval = [coeffs](double t) {
      double acc = 0.0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
      return acc;
    };
    auto mk_deriv = [coeffs] {
      std::vector<double> d(coeffs.size() - 1);
      for (std::size_t i = 1; i < coeffs.size(); ++i)
        d[i - 1] = coeffs[i] * static_cast<double>(i);
      return polynomial(std::move(d));
    };
    if (label.empty()) label = "poly";
    return make_impl(std::move(label), std::move(eval), std::move(mk_deriv));
  }

  // Arbitrary function with user-supplied first derivative. Higher
  // derivatives are unavailable unless chained via with_derivative().
  static ScalarFn make(std::string label, Fn eval, Fn deriv) {
    auto d = std::make_shared<Fn>(std::move(deriv));
    std::string dlabel = label + "'";
    auto mk_deriv = [d, dlabel] {
      return make_impl(
          dlabel, [d](double t) { return (*d)(t); },
          [dlabel] {
            throw std::logic_error("ScalarFn: no derivative beyond " + dlabel);
            return ScalarFn();  // unreachable
          });
    };
    return make_impl(std::move(label), std::move(eval), std::move(mk_deriv));
  }

  // Function given together with its full derivative as another ScalarFn
  // (which may itself carry derivatives, recursively).
  static ScalarFn with_derivative(std::string label, Fn eval, ScalarFn deriv) {
    return make_impl(std::move(label), std::move(eval),
                     [deriv] { return deriv; });
  }

  double operator()(double t) const { return impl_->eval(t); }
  double eval(double t) const { return impl_->eval(t); }
  double deriv(double t) const { return derivative().eval(t); }

  ScalarFn derivative() const {
    if (is_zero()) return zero();
    return impl_->make_deriv();
  }

  bool is_zero() const { return impl_->is_zero; }
  const std::string& label() const { return impl_->label; }

  friend ScalarFn operator+(const ScalarFn& f, const ScalarFn& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return make_impl(
        "(" + f.label() + "+" + g.label() + ")",
        [f, g](double t) { return f(t) + g(t); },
        [f, g] { return f.derivative() + g.derivative(); });
  }

  friend ScalarFn operator-(const ScalarFn& f, const ScalarFn& g) {
    if (g.is_zero()) return f;
    return make_impl(
        "(" + f.label() + "-" + g.label() + ")",
        [f, g](double t) { return f(t) - g(t); },
        [f, g] { return f.derivative() - g.derivative(); });
  }

  friend ScalarFn operator-(const ScalarFn& f) {
    if (f.is_zero()) return f;
    return make_impl(
        "(-" + f.label() + ")", [f](double t) { return -f(t); },
        [f] { return -f.derivative(); });
  }

  friend ScalarFn operator*(const ScalarFn& f, const ScalarFn& g) {
    if (f.is_zero() || g.is_zero()) return zero();
    return make_impl(
        f.label() + "*" + g.label(), [f, g](double t) { return f(t) * g(t); },
        [f, g] { return f.derivative() * g + f * g.derivative(); });
  }

  friend ScalarFn operator*(double c, const ScalarFn& f) {
    if (c == 0.0 || f.is_zero()) return zero();
    if (c == 1.0) return f;
    return make_impl(
        format_num(c) + "*" + f.label(), [c, f](double t) { return c * f(t); },
        [c, f] { return c * f.derivative(); });
  }

  friend ScalarFn operator*(const ScalarFn& f, double c) { return c * f; }

  friend ScalarFn operator/(const ScalarFn& f, const ScalarFn& g) {
    if (f.is_zero()) return zero();
    return make_impl(
        "(" + f.label() + "/" + g.label() + ")",
        [f, g](double t) { return f(t) / g(t); },
        [f, g] {
          return (f.derivative() * g - f * g.derivative()) / (g * g);
        });
  }

  friend ScalarFn sqrt(const ScalarFn& f) {
    if (f.is_zero()) return zero();
    return make_impl(
        "sqrt(" + f.label() + ")",
        [f](double t) { return std::sqrt(f(t)); },
        [f] { return f.derivative() / (2.0 * sqrt(f)); });
  }

 private:
  struct Impl {
    std::string label;
    Fn eval;
    std::function<ScalarFn()> make_deriv;
    bool is_zero = false;
  };

  explicit ScalarFn(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  static ScalarFn make_impl(std::string label, Fn eval,
                            std::function<ScalarFn()> make_deriv,
                            bool is_zero = false) {
    auto impl = std::make_shared<Impl>();
    impl->label = std::move(label);
    impl->eval = std::move(eval);
    impl->make_deriv = std::move(make_deriv);
    impl->is_zero = is_zero;
    return ScalarFn(std::move(impl));
  }

  static std::string format_num(double c) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", c);
    return buf;
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace g2cc
