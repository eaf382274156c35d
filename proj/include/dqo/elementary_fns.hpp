// elementary_fns.hpp: s-functions, f-functions and endpoint mode weights
#pragma once

#include <array>
#include <cmath>

#include "core_model.hpp"
#include "errors.hpp"

namespace dqo {

// s[1..14]; s[0] unused.
struct SFuncs {
  std::array<double, 15> s{};
  double operator[](int k) const { return s[k]; }
};

// f[1..16]; f[0] unused.
struct FFuncs {
  std::array<double, 17> f{};
  double operator[](int k) const { return f[k]; }
};

struct ModeWeights {
  double n1 = 0, n2 = 0, nbar1 = 0, nbar2 = 0;
  double m1 = 0, m2 = 0, ell = 0;
};

namespace detail {

// sin(x t) / x, continuous at x = 0
inline double sin_over(double x, double t) {
  const double y = x * t;
  if (std::abs(y) < 1e-4) return t * (1.0 - y * y / 6.0 + y * y * y * y / 120.0);
  return std::sin(y) / x;
}

// (1 - cos(x t)) / x, continuous at x = 0
inline double vers_over(double x, double t) {
  const double y = x * t;
  if (std::abs(y) < 1e-4) return t * y * (0.5 - y * y / 24.0);
  const double h = std::sin(0.5 * y);
  return 2.0 * h * h / x;
}

// t - sin(x t) / x without cancellation at small x t
inline double sin_deficit(double x, double t) {
  const double y = x * t;
  if (std::abs(y) < 0.5) {
    // y^3/6 - y^5/120 + ... divided by x
    double term = t * y * y / 6.0, sum = 0.0;
    for (int k = 1; k <= 8; ++k) {
      sum += term;
      term *= -y * y / ((2.0 * k + 2) * (2.0 * k + 3));
    }
    return sum;
  }
  return t - std::sin(y) / x;
}

}  // namespace detail

inline double degeneracy_threshold(const NormalModes& m) {
  return 1e-6 * 0.5 * (m.Omega1 + m.Omega2);
}

// Mixed-mode integrals of products over [0, t]; `stable` selects sum/difference forms.
inline void mixed_s(double t, double O1, double O2, bool stable, double& s7, double& s8,
                    double& s9, double& s10) {
  if (stable) {
    using detail::sin_over;
    using detail::vers_over;
    const double dm = O1 - O2, sm = O1 + O2;
    s7 = 0.5 * (sin_over(dm, t) + sin_over(sm, t));   // C1 C2
    s10 = 0.5 * (sin_over(dm, t) - sin_over(sm, t));  // S1 S2
    s8 = 0.5 * (vers_over(sm, t) - vers_over(dm, t));  // C1 S2
    s9 = 0.5 * (vers_over(sm, t) + vers_over(dm, t));  // S1 C2
    return;
  }
  const double c1 = std::cos(O1 * t), c2 = std::cos(O2 * t);
  const double n1 = std::sin(O1 * t), n2 = std::sin(O2 * t);
  const double den = O1 * O1 - O2 * O2;
  s7 = (O1 * c2 * n1 - O2 * c1 * n2) / den;
  s8 = (-O2 + O2 * c2 * c1 + O1 * n1 * n2) / den;
  s9 = (O1 - O1 * c2 * c1 - O2 * n1 * n2) / den;
  s10 = (O2 * c2 * n1 - O1 * c1 * n2) / den;
}

inline SFuncs s_funcs(double t, const NormalModes& m) {
  SFuncs r;
  auto& s = r.s;
  const double O1 = m.Omega1, O2 = m.Omega2;
  const double h1 = 0.5 * detail::sin_over(2.0 * O1, t);  // sin(2 O1 t) / 4 O1
  const double h2 = 0.5 * detail::sin_over(2.0 * O2, t);
  s[1] = 0.5 * t + h1;
  s[2] = 0.5 * detail::sin_deficit(2.0 * O1, t);
  s[3] = 0.5 * t + h2;
  s[4] = 0.5 * detail::sin_deficit(2.0 * O2, t);
  const double q1 = std::sin(O1 * t), q2 = std::sin(O2 * t);
  s[5] = O1 > 0 ? q1 * q1 / (2.0 * O1) : 0.0;
  s[6] = O2 > 0 ? q2 * q2 / (2.0 * O2) : 0.0;
  const bool degenerate = std::abs(O1 - O2) < degeneracy_threshold(m);
  mixed_s(t, O1, O2, degenerate, s[7], s[8], s[9], s[10]);
  s[11] = s[7];
  s[13] = s[8];
  s[12] = s[9];
  s[14] = s[10];
  return r;
}

// Basis functions of a mode: S1, C1, S2, C2 at time x.
inline std::array<double, 4> mode_basis(double x, const NormalModes& m) {
  return {std::sin(m.Omega1 * x), std::cos(m.Omega1 * x), std::sin(m.Omega2 * x),
          std::cos(m.Omega2 * x)};
}

// Index of f_k as (basis at tau, basis at s), basis order S1, C1, S2, C2.
inline constexpr std::array<std::array<int, 2>, 17> f_basis = {{
    {0, 0},
    {0, 0}, {2, 2}, {0, 2}, {2, 0},  // f1..f4
    {1, 1}, {3, 3}, {1, 3}, {3, 1},  // f5..f8
    {0, 1}, {1, 0}, {0, 3}, {1, 2},  // f9..f12
    {2, 3}, {3, 2}, {2, 1}, {3, 0},  // f13..f16
}};

// Basis pair of f14 as printed (a copy of f16).
inline constexpr std::array<int, 2> f14_printed = {3, 0};

inline FFuncs f_funcs(double tau, double s, const NormalModes& m, bool pattern_f14 = true) {
  const auto a = mode_basis(tau, m), b = mode_basis(s, m);
  FFuncs r;
  for (int k = 1; k <= 16; ++k) r.f[k] = a[f_basis[k][0]] * b[f_basis[k][1]];
  if (!pattern_f14) r.f[14] = a[f14_printed[0]] * b[f14_printed[1]];
  return r;
}

inline void check_weights_admissible(double t, const NormalModes& m, double tol_caustic) {
  if (std::abs(1.0 - m.r1 * m.r2) < 1e-12) throw DegenerateRatios("1 - r1 r2 vanishes");
  if (std::abs(std::sin(m.Omega1 * t)) < tol_caustic ||
      std::abs(std::sin(m.Omega2 * t)) < tol_caustic)
    throw CausticTime("sin(Omega t) vanishes at a normal mode");
}

inline ModeWeights mode_weights(double t, const NormalModes& m, double gamma,
                                double tol_caustic = default_tol_caustic) {
  check_weights_admissible(t, m, tol_caustic);
  const double l = m.ell();
  const double sn1 = std::sin(m.Omega1 * t), sn2 = std::sin(m.Omega2 * t);
  const double ep = std::exp(gamma * t), em = std::exp(-gamma * t);
  ModeWeights w;
  w.n1 = ep * l / sn1;
  w.n2 = ep * l / sn2;
  w.nbar1 = em * l / sn1;
  w.nbar2 = em * l / sn2;
  w.m1 = l * std::cos(m.Omega1 * t) / sn1;
  w.m2 = l * std::cos(m.Omega2 * t) / sn2;
  w.ell = l;
  return w;
}

// Weights with the exp(+-gamma t) factors stripped; the pipeline absorbs them into
// a rescaling of the initial-point variables.
inline ModeWeights scaled_mode_weights(double t, const NormalModes& m,
                                       double tol_caustic = default_tol_caustic) {
  return mode_weights(t, m, 0.0, tol_caustic);
}

}  // namespace dqo
