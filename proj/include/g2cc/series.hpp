#pragma once

// Truncated power series arithmetic around t = 0, templated on the
// coefficient ring so the singular-orbit Taylor bootstrap can run either in
// double precision or in exact rational arithmetic.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace g2cc {

template <class R>
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t truncation_order)
      : c_(truncation_order + 1, R(0)) {}
  Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {}

  // Highest retained power.
  std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }

  const R& operator[](std::size_t k) const {
    static const R kZero{0};
    return k < c_.size() ? c_[k] : kZero;
  }
  R& at(std::size_t k) {
    if (k >= c_.size()) c_.resize(k + 1, R(0));
    return c_[k];
  }

  const std::vector<R>& coeffs() const { return c_; }

  Series truncated(std::size_t n) const {
    std::vector<R> out(n + 1, R(0));
    for (std::size_t k = 0; k <= n && k < c_.size(); ++k) out[k] = c_[k];
    return Series(std::move(out));
  }

  friend Series operator+(const Series& a, const Series& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return Series(std::move(out));
  }

  friend Series operator-(const Series& a, const Series& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return Series(std::move(out));
  }

  // Product truncated at max(order a, order b).
  friend Series operator*(const Series& a, const Series& b) {
    std::size_t n = std::max(a.order(), b.order());
    std::vector<R> out(n + 1, R(0));
    for (std::size_t i = 0; i <= n && i < a.c_.size(); ++i) {
      if (a.c_[i] == R(0)) continue;
      for (std::size_t j = 0; i + j <= n && j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(std::move(out));
  }

  friend Series operator*(const R& s, const Series& a) {
    std::vector<R> out = a.c_;
    for (auto& v : out) v = s * v;
    return Series(std::move(out));
  }

  // Termwise derivative; the truncation order drops by one.
  Series derivative() const {
    if (c_.size() <= 1) return Series(std::vector<R>{R(0)});
    std::vector<R> out(c_.size() - 1, R(0));
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = R(int(k)) * c_[k];
    return Series(std::move(out));
  }

  // Reciprocal of a series with nonzero constant term.
  Series reciprocal() const {
    if (c_.empty() || c_[0] == R(0))
      throw std::domain_error("Series::reciprocal: zero constant term");
    std::size_t n = order();
    std::vector<R> out(n + 1, R(0));
    out[0] = R(1) / c_[0];
    for (std::size_t k = 1; k <= n; ++k) {
      R acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += (*this)[j] * out[k - j];
      out[k] = -acc / c_[0];
    }
    return Series(std::move(out));
  }

  // Square root of a series with positive constant term (double-valued
  // rings need a sqrt on R; only instantiated for floating point).
  Series sqrt_series() const {
    using std::sqrt;
    std::size_t n = order();
    std::vector<R> out(n + 1, R(0));
    out[0] = sqrt(c_[0]);
    for (std::size_t k = 1; k <= n; ++k) {
      R acc = (*this)[k];
      for (std::size_t j = 1; j < k; ++j) acc -= out[j] * out[k - j];
      out[k] = acc / (R(2) * out[0]);
    }
    return Series(std::move(out));
  }

  double eval_double(double t) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * t + static_cast<double>(c_[i]);
    return acc;
  }

 private:
  std::vector<R> c_;  // c_[k] multiplies t^k
};

}  // namespace g2cc
