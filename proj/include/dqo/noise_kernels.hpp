// noise_kernels.hpp: thermal kernel and the bath-induced coefficients A, B, C, E
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "core_model.hpp"
#include "elementary_fns.hpp"
#include "errata.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "trigamma.hpp"
#include "units.hpp"

namespace dqo {

// Order of the ten coefficients in every table below.
enum NoiseIndex { iA1, iA2, iB1, iB2, iC1, iC2, iE1, iE2, iE3, iE4, kNoiseCount };

inline constexpr std::array<const char*, kNoiseCount> noise_names = {
    "A1", "A2", "B1", "B2", "C1", "C2", "E1", "E2", "E3", "E4"};

// Coefficients of the xi-quadratic form. Values are stored rescaled: each factor of an
// initial-point xi carries exp(-gamma t), so `value` stays finite for large gamma t.
struct NoiseCoeffs {
  std::array<double, kNoiseCount> value{};
  double error = 0;    // quadrature error estimate on the same scale
  double gamma_t = 0;  // rescaling exponent

  double operator[](int k) const { return value[k]; }
  double A1() const { return value[iA1]; }
  double A2() const { return value[iA2]; }
  double B1() const { return value[iB1]; }
  double B2() const { return value[iB2]; }
  double C1() const { return value[iC1]; }
  double C2() const { return value[iC2]; }
  double E1() const { return value[iE1]; }
  double E2() const { return value[iE2]; }
  double E3() const { return value[iE3]; }
  double E4() const { return value[iE4]; }

  // Number of initial-point xi factors of each coefficient.
  static constexpr std::array<int, kNoiseCount> initial_order = {0, 0, 1, 1, 2, 2, 2, 1, 1, 0};

  std::array<double, kNoiseCount> unscaled() const {
    std::array<double, kNoiseCount> v{};
    for (int k = 0; k < kNoiseCount; ++k) v[k] = value[k] * std::exp(initial_order[k] * gamma_t);
    return v;
  }
};

// Vacuum part of the regularized kernel, wc^2 (1 - wc^2 D^2) / (1 + wc^2 D^2)^2.
inline double vacuum_kernel(double delta, double wc) {
  const double x = wc * delta, d = 1.0 + x * x;
  return wc * wc * (1.0 - x * x) / (d * d);
}

// Integral of vacuum_kernel over [0, L].
inline double vacuum_kernel_integral(double L, double wc) {
  const double x = wc * L;
  return wc * x / (1.0 + x * x);
}

// Integral over w of w coth(w / 2 theta) cos(w delta) exp(-w / wc), with theta = k_B T / hbar
// in the frequency unit of delta^-1 and wc. The thermal part is the trigamma series of the
// Bose factor.
inline double thermal_kernel_freq(double delta, double theta, double wc) {
  double v = vacuum_kernel(delta, wc);
  if (theta > 0) {
    const std::complex<double> z(1.0 + theta / wc, -theta * delta);
    v += 2.0 * theta * theta * trigamma(z).real();
  }
  return v;
}

// CGS entry point: delta in s, T in K, omega_cutoff in rad/s; returns s^-2.
inline double thermal_kernel(double delta, double T, double omega_cutoff) {
  return thermal_kernel_freq(delta, cgs::k_B * T / cgs::hbar, omega_cutoff);
}

// R^(1)_k and R^(2)_k of every coefficient, k in NoiseIndex order.
struct NoiseIntegrands {
  std::array<double, kNoiseCount> bath1{}, bath2{};
};

// Linear in f; the noise integral reuses it with f replaced by integrated f-tables.
inline NoiseIntegrands kernel_integrands(const ModeWeights& w, const NormalModes& md,
                                         const FFuncs& ff, const Errata& er = {}) {
  const auto& f = ff.f;
  const double r1 = md.r1, r2 = md.r2, rr = r1 * r2, r1s = r1 * r1, r2s = r2 * r2;
  const double nb1 = w.nbar1, nb2 = w.nbar2, m1 = w.m1, m2 = w.m2, l = w.ell, l2 = l * l;
  const double R4 = er.noise_r1r2 ? r1s * r2s : r1s * r1s;
  const double f34 = f[3] + f[4];

  const double qt1 = -2 * nb1 * m1 * f[1] + nb1 * l * (f[9] + f[10]);
  const double qt2 = -2 * nb2 * m2 * f[2] + nb2 * l * (f[13] + f[14]);
  const double dt = (nb2 * m1 + nb1 * m2) * f34 - nb1 * l * (f[11] + f[16]) - nb2 * l * (f[12] + f[15]);
  const double q1 = m1 * m1 * f[1] + l2 * f[5] - m1 * l * (f[9] + f[10]);
  const double q2 = m2 * m2 * f[2] + l2 * f[6] - m2 * l * (f[13] + f[14]);
  const double d = -m1 * m2 * f34 - l2 * (f[7] + f[8]) + m1 * l * (f[11] + f[16]) + m2 * l * (f[12] + f[15]);
  const double qp = 2 * nb1 * m1 * f[1] - nb1 * l * (f[9] + f[10]);
  const double dp = nb2 * l * (f[12] + f[15]) - nb2 * m1 * f34;
  const double qpp = 2 * nb2 * m2 * f[2] - nb2 * l * (f[13] + f[14]);
  const double dpp = nb1 * l * (f[11] + f[16]) - nb1 * m2 * f34;
  const double a11 = nb1 * nb1 * f[1], a22 = nb2 * nb2 * f[2], a12 = nb1 * nb2 * f34;
  const double k4 = er.e4_factor2 ? 2.0 : 1.0;

  NoiseIntegrands r;
  auto& u = r.bath1;
  auto& v = r.bath2;
  u[iA1] = a11 - rr * a12 + R4 * a22;
  v[iA1] = r1s * (a11 - a12 + a22);
  u[iA2] = r2s * (a11 - a12 + a22);
  v[iA2] = a22 - rr * a12 + R4 * a11;
  u[iB1] = qt1 + rr * dt + R4 * qt2;
  v[iB1] = r1s * (qt1 + dt + qt2);
  u[iB2] = r2s * (qt1 + dt + qt2);
  v[iB2] = qt2 + rr * dt + R4 * qt1;
  u[iC1] = q1 + rr * d + R4 * q2;
  v[iC1] = r1s * (q1 + d + q2);
  u[iC2] = r2s * (q1 + d + q2);
  v[iC2] = q2 + rr * d + R4 * q1;
  u[iE1] = -r2 * (2 * q1 + 2 * rr * q2 + (1 + rr) * d);
  v[iE1] = -r1 * (2 * q2 + 2 * rr * q1 + (1 + rr) * d);
  u[iE2] = r2 * (qp + dp + rr * (qpp + dpp));
  v[iE2] = r1 * (qpp + dp + rr * (qp + dpp));
  u[iE3] = r2 * (qp + dpp + rr * (qpp + dp));
  v[iE3] = r1 * (qpp + dpp + rr * (qp + dp));
  u[iE4] = r2 * (a12 - 2 * a11 + rr * (a12 - k4 * a22));
  v[iE4] = r1 * (a12 - 2 * a22 + rr * (a12 - k4 * a11));
  return r;
}

struct NoiseOptions {
  double rel_tol = 1e-10;
  int max_panels = 200000;
  double tail_decay = 40.0;  // truncation in units of the kernel or damping decay length
  Errata errata{};
};

namespace detail {

// (1 - exp(-z L)) / z for Re z >= 0, without cancellation for small |z L|.
inline std::complex<double> one_minus_exp_over(std::complex<double> z, double L) {
  const std::complex<double> w = z * L;
  if (std::abs(w) < 1e-8) return L * (1.0 - 0.5 * w);
  const double x = w.real(), y = w.imag();
  const double hs = std::sin(0.5 * y);
  const double re = -std::expm1(-x) * std::cos(y) + 2.0 * hs * hs;
  const double im = std::exp(-x) * std::sin(y);
  return std::complex<double>(re, im) / z;
}

// Tables of the weighted tau integrals
//   T_k(D) = int_D^t exp(2 gamma (tau - t)) g_p(tau) g_q(tau - D) dtau
// for every basis pair (p, q) of f_k, laid out as f[1..16].
struct InnerTable {
  double t, gamma, O1, O2;

  std::complex<double> K(double kappa, double L) const {
    const std::complex<double> z(2.0 * gamma, kappa);
    return std::polar(1.0, kappa * t) * one_minus_exp_over(z, L);
  }

  std::array<double, 17> operator()(double D) const {
    const double L = t - D;
    const std::complex<double> K0 = K(0.0, L), K11 = K(2 * O1, L), K22 = K(2 * O2, L);
    const std::complex<double> Ks = K(O1 + O2, L), Kd = K(O1 - O2, L);
    const std::complex<double> e1 = std::polar(1.0, O1 * D), e2 = std::polar(1.0, O2 * D);
    // (mode at tau, mode at s) -> U-, U+ with U- = e^{i b D} K(a - b), U+ = e^{-i b D} K(a + b)
    std::array<std::array<std::pair<std::complex<double>, std::complex<double>>, 2>, 2> U;
    U[0][0] = {e1 * K0, std::conj(e1) * K11};
    U[1][1] = {e2 * K0, std::conj(e2) * K22};
    U[0][1] = {e2 * Kd, std::conj(e2) * Ks};
    U[1][0] = {e1 * std::conj(Kd), std::conj(e1) * Ks};
    std::array<double, 17> out{};
    for (int k = 1; k <= 16; ++k) {
      const int p = f_basis[k][0], q = f_basis[k][1];
      const auto& [um, up] = U[p / 2][q / 2];
      const bool ps = p % 2 == 0, qs = q % 2 == 0;  // true for sine
      double v;
      if (ps && qs) v = um.real() - up.real();
      else if (!ps && !qs) v = um.real() + up.real();
      else if (ps) v = up.imag() + um.imag();
      else v = up.imag() - um.imag();
      out[k] = 0.5 * v;
    }
    return out;
  }
};

inline FFuncs as_ffuncs(const double* v, bool pattern_f14) {
  FFuncs f;
  for (int k = 1; k <= 16; ++k) f.f[k] = v[k - 1];
  if (!pattern_f14) f.f[14] = v[15];
  return f;
}

}  // namespace detail

struct KernelIntegrals {
  std::array<double, 16> bath1{}, bath2{};  // integrated f tables per bath, f1..f16
  double error = 0;
  int panels = 0;
};

// Integrated f-tables
//   I_k = int_0^t dtau int_0^tau ds nu(tau - s) exp(gamma (tau + s - 2 t)) f_k(tau, s)
// for the two bath kernels. Works in internal units (theta = k_B T / hbar w01).
inline KernelIntegrals kernel_integrals(double t, const NormalModes& md, double gamma,
                                        double theta1, double theta2, double wc,
                                        const NoiseOptions& opt = {}) {
  KernelIntegrals res;
  if (t <= 0) return res;
  const detail::InnerTable inner{t, gamma, md.Omega1, md.Omega2};
  const auto h0 = inner(0.0);

  auto reach = [&](double theta) {
    double L = gamma > 0 ? opt.tail_decay / gamma : t;
    if (theta > 0) L = std::min(L, opt.tail_decay / theta);
    return L;
  };
  const double L = std::min(t, std::max(reach(theta1), reach(theta2)));

  auto integrand = [&](double D) {
    const auto h = inner(D);
    const double damp = std::exp(-gamma * D);
    const double vac = vacuum_kernel(D, wc);
    const double n1 = thermal_kernel_freq(D, theta1, wc);
    const double n2 = theta2 == theta1 ? n1 : thermal_kernel_freq(D, theta2, wc);
    std::array<double, 32> out;
    for (int k = 1; k <= 16; ++k) {
      const double hk = damp * h[k];
      // The vacuum spike near D = 0 is integrated against h - h(0); the rest is exact.
      out[k - 1] = n1 * hk - vac * h0[k];
      out[k + 15] = n2 * hk - vac * h0[k];
    }
    return out;
  };

  const double Omax = std::max(md.Omega1, md.Omega2);
  double width = 0.5 * std::numbers::pi / Omax;
  if (theta1 > 0) width = std::min(width, 0.5 / theta1);
  if (theta2 > 0) width = std::min(width, 0.5 / theta2);
  std::vector<double> br{0.0};
  for (double x = 0.25 / wc; x < std::min(width, L); x *= 2.0) br.push_back(x);
  double x = br.back();
  while (x < L) {
    x = std::min(L, x + width);
    br.push_back(x);
  }
  auto q = integrate_panels<32>(integrand, br, opt.rel_tol, 0.0, opt.max_panels);
  if (!q.converged)
    throw QuadratureNonConvergence("noise integral did not reach the requested tolerance");
  const double V = vacuum_kernel_integral(L, wc);
  for (int k = 0; k < 16; ++k) {
    res.bath1[k] = q.value[k] + V * h0[k + 1];
    res.bath2[k] = q.value[k + 16] + V * h0[k + 1];
  }
  res.error = q.error;
  res.panels = q.panels;
  return res;
}

// Bath-induced coefficients at time t, internal units, rescaled as in NoiseCoeffs.
// `w` must be the rescaled weights (scaled_mode_weights).
inline NoiseCoeffs noise_coeffs(double t, const SystemParams& p, const NormalModes& md,
                                const ModeWeights& w, double theta1, double theta2, double wc,
                                const NoiseOptions& opt = {}) {
  NoiseCoeffs nc;
  nc.gamma_t = p.gamma * t;
  if (t <= 0 || p.gamma == 0) return nc;
  const auto I = kernel_integrals(t, md, p.gamma, theta1, theta2, wc, opt);
  const bool pattern = opt.errata.f14;
  const auto R1 = kernel_integrands(w, md, detail::as_ffuncs(I.bath1.data(), pattern), opt.errata);
  const auto R2 = kernel_integrands(w, md, detail::as_ffuncs(I.bath2.data(), pattern), opt.errata);
  const double c1 = 2.0 * p.M1 * p.gamma / std::numbers::pi;
  const double c2 = 2.0 * p.M2 * p.gamma / std::numbers::pi;
  for (int k = 0; k < kNoiseCount; ++k) nc.value[k] = c1 * R1.bath1[k] + c2 * R2.bath2[k];
  double wmax = std::max({std::abs(w.nbar1), std::abs(w.nbar2), std::abs(w.m1), std::abs(w.m2), w.ell});
  nc.error = (c1 + c2) * 16.0 * wmax * wmax * I.error;
  return nc;
}

}  // namespace dqo
