#pragma once

// Sparse exterior algebra over the seven-dimensional invariant coframe
//
//   e0 = dt,  e1..e3 = eta_1^+..eta_3^+,  e4..e6 = eta_1^-..eta_3^-
//
// on I x (S^3 x S^3). A form is a sparse sum of wedge monomials (7-bit
// masks, canonical ascending order, signs absorbed into the coefficients)
// with t-dependent ScalarFn coefficients. The exterior derivative splits as
// d = dt ^ d/dt + d_N, where d_N comes from the Maurer-Cartan structure
// equations of su(2)+su(2) in the Milnor frame.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "g2cc/scalar_fn.hpp"

namespace g2cc {

// Canonical coframe order: dt, eta1+, eta2+, eta3+, eta1-, eta2-, eta3-.
enum BasisIndex : int {
  kDt = 0,
  kEta1Plus = 1,
  kEta2Plus = 2,
  kEta3Plus = 3,
  kEta1Minus = 4,
  kEta2Minus = 5,
  kEta3Minus = 6,
};

using Mask = std::uint8_t;  // 7-bit set of BasisIndex

inline constexpr Mask kFullMask = 0x7F;

inline int mask_degree(Mask m) { return std::popcount(unsigned(m)); }

inline std::string basis_name(int i) {
  static const char* names[7] = {"dt",   "eta1+", "eta2+", "eta3+",
                                 "eta1-", "eta2-", "eta3-"};
  return names[i];
}

inline std::string monomial_name(Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i < 7; ++i)
    if (m & (Mask(1) << i)) {
      if (!s.empty()) s += "^";
      s += basis_name(i);
    }
  return s;
}

// Sign of e_A ^ e_B as a multiple of e_{A|B}, for disjoint ascending-ordered
// monomials: parity of the merge permutation. Zero if the masks intersect.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int i = 0; i < 7; ++i) {
    if (b & (Mask(1) << i)) {
      // count members of a that must jump over this index
      Mask higher = Mask(a & ~((Mask(1) << (i + 1)) - 1));
      inversions += std::popcount(unsigned(higher));
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// Diagonal coframe scaling of the ansatz metric at a fixed t:
// e^0 = dt, e^i = a_i eta_i^+, e^{i+3} = b_i eta_i^- orthonormal, with
// a_i = 2A_i(t), b_i = 2B_i(t).
struct CoframeScaling {
  std::array<double, 3> a;  // 2A_i(t)
  std::array<double, 3> b;  // 2B_i(t)

  double factor(int idx) const {
    if (idx == 0) return 1.0;
    return idx <= 3 ? a[idx - 1] : b[idx - 4];
  }
};

class InvariantForm {
 public:
  using TermMap = std::map<Mask, ScalarFn>;

  explicit InvariantForm(int degree = 0) : degree_(degree) {
    if (degree < 0 || degree > 7)
      throw std::invalid_argument("InvariantForm: degree out of range");
  }

  static InvariantForm zero(int degree) { return InvariantForm(degree); }

  static InvariantForm scalar(ScalarFn f) {
    InvariantForm out(0);
    out.add_term(0, std::move(f));
    return out;
  }

  static InvariantForm basis(int index) {
    InvariantForm out(1);
    out.add_term(Mask(1) << index, ScalarFn::constant(1.0));
    return out;
  }

  static InvariantForm monomial(Mask m, ScalarFn coeff) {
    InvariantForm out(mask_degree(m));
    out.add_term(m, std::move(coeff));
    return out;
  }

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ScalarFn coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarFn::zero() : it->second;
  }

  void add_term(Mask m, ScalarFn coeff) {
    if (coeff.is_zero()) return;
    if (mask_degree(m) != degree_)
      throw std::invalid_argument("InvariantForm: degree mismatch on " +
                                  monomial_name(m));
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_.emplace(m, std::move(coeff));
    else
      it->second = it->second + coeff;
  }

  friend InvariantForm operator+(const InvariantForm& f,
                                 const InvariantForm& g) {
    if (f.degree_ != g.degree_)
      throw std::invalid_argument("form addition: degree mismatch");
    InvariantForm out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, c);
    return out;
  }

  friend InvariantForm operator-(const InvariantForm& f,
                                 const InvariantForm& g) {
    return f + (-1.0) * g;
  }

  friend InvariantForm operator*(double s, const InvariantForm& f) {
    InvariantForm out(f.degree_);
    if (s == 0.0) return out;
    for (const auto& [m, c] : f.terms_) out.add_term(m, s * c);
    return out;
  }

  friend InvariantForm operator*(const ScalarFn& s, const InvariantForm& f) {
    InvariantForm out(f.degree_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : f.terms_) out.add_term(m, s * c);
    return out;
  }

  // Pointwise coefficient evaluation.
  double coefficient_at(Mask m, double t) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0.0 : it->second(t);
  }

  // Max |coefficient| over stored monomials at t.
  double max_abs_coefficient(double t) const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, std::abs(c(t)));
    return mx;
  }

 private:
  int degree_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Wedge product

inline InvariantForm wedge(const InvariantForm& f, const InvariantForm& g) {
  int deg = f.degree() + g.degree();
  if (deg > 7)
    throw std::invalid_argument("wedge: degree " + std::to_string(deg) +
                                " exceeds 7");
  InvariantForm out(deg);
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(Mask(ma | mb), double(s) * (ca * cb));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure-equation derivative d_N (forms on the orbit, coefficients frozen)
//
//   d eta_i^+ = -eps_{ijk} (eta_j^+ ^ eta_k^+ + eta_j^- ^ eta_k^-)
//   d eta_i^- = -2 eps_{ijk} eta_j^- ^ eta_k^+
//
// with full summation over repeated j,k; this is the convention that matches
// d eta(X,Y) = -eta([X,Y]) for the basis with [T_i,T_j] = 2 eps_{ijk} T_k.

inline int epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;  // for i,j,k in {0,1,2}
}

inline const std::array<InvariantForm, 7>& dN_basis_table() {
  static const std::array<InvariantForm, 7> table = [] {
    std::array<InvariantForm, 7> t{
        InvariantForm(2), InvariantForm(2), InvariantForm(2),
        InvariantForm(2), InvariantForm(2), InvariantForm(2),
        InvariantForm(2)};
    auto plus = [](int i) { return Mask(1) << (1 + i); };
    auto minus = [](int i) { return Mask(1) << (4 + i); };
    for (int i = 0; i < 3; ++i) {
      InvariantForm dplus(2), dminus(2);
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          int eps = epsilon3(i, j, k);
          if (eps == 0) continue;
          // eta_j^+ ^ eta_k^+ and eta_j^- ^ eta_k^-
          dplus.add_term(Mask(plus(j) | plus(k)),
                         ScalarFn::constant(-eps * merge_sign(plus(j), plus(k))));
          dplus.add_term(Mask(minus(j) | minus(k)),
                         ScalarFn::constant(-eps * merge_sign(minus(j), minus(k))));
          // eta_j^- ^ eta_k^+
          dminus.add_term(Mask(minus(j) | plus(k)),
                          ScalarFn::constant(-2.0 * eps *
                                             merge_sign(minus(j), plus(k))));
        }
      }
      t[1 + i] = dplus;
      t[4 + i] = dminus;
    }
    return t;
  }();
  return table;
}

inline InvariantForm d_N(const InvariantForm& f) {
  InvariantForm out(f.degree() + 1);
  if (f.degree() + 1 > 7) return out;
  const auto& table = dN_basis_table();
  for (const auto& [m, c] : f.terms()) {
    int pos = 0;  // 1-indexed position of the bit within the monomial
    for (int i = 0; i < 7; ++i) {
      if (!(m & (Mask(1) << i))) continue;
      ++pos;
      const InvariantForm& de = table[i];
      if (de.empty()) continue;
      double sign = (pos % 2 == 1) ? 1.0 : -1.0;
      Mask rest = Mask(m & ~(Mask(1) << i));
      InvariantForm piece =
          wedge(InvariantForm::monomial(rest, sign * c), de);
      for (const auto& [mm, cc] : piece.terms()) out.add_term(mm, cc);
    }
  }
  return out;
}

// Full exterior derivative d = dt ^ d/dt + d_N.
inline InvariantForm d(const InvariantForm& f) {
  InvariantForm out(f.degree() + 1);
  if (f.degree() + 1 > 7) return out;
  const Mask dt_bit = Mask(1) << kDt;
  for (const auto& [m, c] : f.terms()) {
    if (m & dt_bit) continue;  // dt ^ dt = 0
    ScalarFn dc = c.derivative();
    if (!dc.is_zero()) out.add_term(Mask(m | dt_bit), dc);  // dt first: sign +1
  }
  InvariantForm dn = d_N(f);
  for (const auto& [m, c] : dn.terms()) out.add_term(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// Hodge star for the diagonal ansatz metric.
//
// Each monomial is rescaled to the orthonormal coframe, starred there
// (complement monomial, permutation sign relative to the volume monomial
// dt ^ e^1 ^ ... ^ e^6, times orientation_sign), and rescaled back. In seven
// dimensions star(star(f)) = f on every degree.

inline InvariantForm hodge_star(const InvariantForm& f,
                                const CoframeScaling& s,
                                int orientation_sign) {
  for (int i = 0; i < 3; ++i)
    if (s.a[i] == 0.0 || s.b[i] == 0.0)
      throw std::domain_error("hodge_star: singular coframe scaling");
  InvariantForm out(7 - f.degree());
  for (const auto& [m, c] : f.terms()) {
    Mask comp = Mask(kFullMask & ~m);
    int sign = merge_sign(m, comp) * orientation_sign;
    double factor = 1.0;
    for (int i = 0; i < 7; ++i) {
      double fi = s.factor(i);
      if (m & (Mask(1) << i))
        factor /= fi;
      else
        factor *= fi;
    }
    out.add_term(comp, (double(sign) * factor) * c);
  }
  return out;
}

// Symbolic variant: scalings supplied as t-dependent functions, so the
// result is again a form with differentiable coefficients.
inline InvariantForm hodge_star(const InvariantForm& f,
                                const std::array<ScalarFn, 7>& scale,
                                int orientation_sign) {
  InvariantForm out(7 - f.degree());
  for (const auto& [m, c] : f.terms()) {
    Mask comp = Mask(kFullMask & ~m);
    int sign = merge_sign(m, comp) * orientation_sign;
    ScalarFn num = ScalarFn::constant(double(sign));
    ScalarFn den = ScalarFn::constant(1.0);
    for (int i = 1; i < 7; ++i) {  // index 0 scales by 1
      if (m & (Mask(1) << i))
        den = den * scale[i];
      else
        num = num * scale[i];
    }
    out.add_term(comp, (c * num) / den);
  }
  return out;
}

// Pointwise inner product <f,f> = sum of squared orthonormal coefficients.
inline double norm_squared(const InvariantForm& f, const CoframeScaling& s,
                           double t) {
  double acc = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double factor = 1.0;
    for (int i = 0; i < 7; ++i)
      if (m & (Mask(1) << i)) factor *= s.factor(i);
    double orth = c(t) / factor;
    acc += orth * orth;
  }
  return acc;
}

}  // namespace g2cc
