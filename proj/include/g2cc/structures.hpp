#pragma once

// Invariant half-flat SU(3)-structures on the principal orbits and the
// G2-structure they induce on I x (S^3 x S^3):
//
//   omega  = 4 sum_i A_i B_i eta_i^- ^ eta_i^+
//   Omega1 = 8 B1B2B3 eta_123^- - 4 sum eps_{ijk} A_iA_jB_k eta_i^+ eta_j^+ eta_k^-
//   Omega2 = -8 A1A2A3 eta_123^+ + 4 sum eps_{ijk} B_iB_jA_k eta_i^- eta_j^- eta_k^+
//
//   phi = dt ^ omega + Omega1,   psi = omega^2/2 - dt ^ Omega2
//
// with the diagonal compatible metric g = dt^2 + sum (2A_i)^2 eta_i^+ (x)
// eta_i^+ + (2B_i)^2 eta_i^- (x) eta_i^-. The epsilon sums run over all
// permutations (each unordered pair counted twice), the same convention the
// structure equations use; the normalization identity Omega1 ^ Omega2 =
// (2/3) omega^3 is asserted by the test suite as the arbiter.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "g2cc/exterior.hpp"
#include "g2cc/scalar_fn.hpp"

namespace g2cc {

// The six metric profile functions plus the singular-orbit parameter b0.
struct ProfileSet {
  std::array<ScalarFn, 3> A;
  std::array<ScalarFn, 3> B;
  double b0 = 1.0;
  double t_end = 0.0;  // right end of the domain [0, t_end); 0 = unspecified

  CoframeScaling scaling_at(double t) const {
    CoframeScaling s;
    for (int i = 0; i < 3; ++i) {
      s.a[i] = 2.0 * A[i](t);
      s.b[i] = 2.0 * B[i](t);
    }
    return s;
  }

  std::array<ScalarFn, 7> scaling_fns() const {
    return {ScalarFn::constant(1.0), 2.0 * A[0], 2.0 * A[1], 2.0 * A[2],
            2.0 * B[0], 2.0 * B[1], 2.0 * B[2]};
  }
};

struct SU3Structure {
  InvariantForm omega;   // degree 2
  InvariantForm omega1;  // degree 3
  InvariantForm omega2;  // degree 3
};

struct G2Structure {
  InvariantForm phi;  // degree 3
  InvariantForm psi;  // degree 4
  ProfileSet profiles;

  CoframeScaling metric(double t) const { return profiles.scaling_at(t); }
};

inline InvariantForm eta_plus(int i) { return InvariantForm::basis(1 + i); }
inline InvariantForm eta_minus(int i) { return InvariantForm::basis(4 + i); }

inline SU3Structure build_su3(const ProfileSet& p) {
  SU3Structure s{InvariantForm(2), InvariantForm(3), InvariantForm(3)};

  for (int i = 0; i < 3; ++i) {
    Mask m = Mask((Mask(1) << (1 + i)) | (Mask(1) << (4 + i)));
    int sign = merge_sign(Mask(1) << (4 + i), Mask(1) << (1 + i));
    s.omega.add_term(m, (4.0 * double(sign)) * (p.A[i] * p.B[i]));
  }

  ScalarFn b123 = p.B[0] * p.B[1] * p.B[2];
  ScalarFn a123 = p.A[0] * p.A[1] * p.A[2];
  Mask minus123 = Mask((Mask(1) << 4) | (Mask(1) << 5) | (Mask(1) << 6));
  Mask plus123 = Mask((Mask(1) << 1) | (Mask(1) << 2) | (Mask(1) << 3));
  s.omega1.add_term(minus123, 8.0 * b123);
  s.omega2.add_term(plus123, -8.0 * a123);

  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        int eps = epsilon3(i, j, k);
        if (eps == 0) continue;
        // -4 eps A_i A_j B_k eta_i^+ ^ eta_j^+ ^ eta_k^-
        {
          Mask mi = Mask(1) << (1 + i), mj = Mask(1) << (1 + j),
               mk = Mask(1) << (4 + k);
          int sign = merge_sign(mi, mj) * merge_sign(Mask(mi | mj), mk);
          s.omega1.add_term(Mask(mi | mj | mk),
                            (-4.0 * eps * sign) * (p.A[i] * p.A[j] * p.B[k]));
        }
        // +4 eps B_i B_j A_k eta_i^- ^ eta_j^- ^ eta_k^+
        {
          Mask mi = Mask(1) << (4 + i), mj = Mask(1) << (4 + j),
               mk = Mask(1) << (1 + k);
          int sign = merge_sign(mi, mj) * merge_sign(Mask(mi | mj), mk);
          s.omega2.add_term(Mask(mi | mj | mk),
                            (4.0 * eps * sign) * (p.B[i] * p.B[j] * p.A[k]));
        }
      }
    }
  }
  return s;
}

inline InvariantForm dt_form() { return InvariantForm::basis(kDt); }

inline G2Structure build_g2(const ProfileSet& p) {
  SU3Structure s = build_su3(p);
  InvariantForm phi = wedge(dt_form(), s.omega) + s.omega1;
  InvariantForm psi =
      0.5 * wedge(s.omega, s.omega) - wedge(dt_form(), s.omega2);
  return G2Structure{phi, psi, p};
}

// Max-norm residuals of the half-flat conditions d_N Omega1 = 0 and
// d_N omega^2 = 0 over a t-grid; zero (to rounding) for the whole ansatz.
inline std::pair<double, double> check_halfflat(const SU3Structure& s,
                                                const std::vector<double>& grid) {
  InvariantForm r1 = d_N(s.omega1);
  InvariantForm r2 = d_N(wedge(s.omega, s.omega));
  double m1 = 0.0, m2 = 0.0;
  for (double t : grid) {
    m1 = std::max(m1, r1.max_abs_coefficient(t));
    m2 = std::max(m2, r2.max_abs_coefficient(t));
  }
  return {m1, m2};
}

// Cone profiles A_i = t/2, B_i = sign(b0) sqrt(t^2/4 + b0^2): the explicit
// one-parameter family used to calibrate the orientation.
inline ProfileSet cone_profiles(double b0) {
  if (b0 == 0.0) throw std::invalid_argument("cone profiles: b0 must be nonzero");
  ProfileSet p;
  double c = b0 * b0;
  double sgn = b0 > 0 ? 1.0 : -1.0;
  for (int i = 0; i < 3; ++i) {
    p.A[i] = ScalarFn::polynomial({0.0, 0.5}, "t/2");
    ScalarFn inner = ScalarFn::polynomial({c, 0.0, 0.25});
    p.B[i] = sgn * sqrt(inner);
  }
  p.b0 = b0;
  p.t_end = 0.0;
  return p;
}

// Orientation sign fixed once by requiring phi ^ psi = +7 vol on the cone
// solution at t = 1.
inline int orientation_sign() {
  static const int sign = [] {
    ProfileSet p = cone_profiles(1.0);
    G2Structure g = build_g2(p);
    double w = wedge(g.phi, g.psi).coefficient_at(kFullMask, 1.0);
    return w > 0 ? 1 : -1;
  }();
  return sign;
}

// Volume form for a profile set: star(1) with the calibrated orientation.
inline InvariantForm volume_form(const ProfileSet& p) {
  ScalarFn v = ScalarFn::constant(64.0 * double(orientation_sign())) * p.A[0] *
               p.A[1] * p.A[2] * p.B[0] * p.B[1] * p.B[2];
  return InvariantForm::monomial(kFullMask, v);
}

}  // namespace g2cc
