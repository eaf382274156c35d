// fdt_oracle.hpp: single-oscillator FDT variance and the coupled stationary spectral covariance
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "core_model.hpp"
#include "errors.hpp"
#include "gaussian_state.hpp"
#include "quadrature.hpp"
#include "units.hpp"

namespace dqo {

struct FdtResult {
  double sigma_sq = 0;  // cm^2
  double error = 0;
};

// x coth(x / 2 theta), with the T = 0 limit |x| and the x -> 0 limit 2 theta.
inline double xcoth(double x, double theta) {
  if (theta <= 0) return std::abs(x);
  const double y = x / (2.0 * theta);
  if (std::abs(y) < 1e-6) return 2.0 * theta * (1.0 + y * y / 3.0);
  if (std::abs(y) > 40.0) return std::abs(x);
  return x / std::tanh(y);
}

namespace detail {

inline std::vector<double> resonance_breaks(const std::vector<double>& centers, double width) {
  std::vector<double> br{0.0};
  for (double c : centers)
    for (double k : {-50.0, -5.0, -1.0, 0.0, 1.0, 5.0, 50.0}) {
      const double x = c + k * width;
      if (x > 0) br.push_back(x);
    }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end(), [](double a, double b) { return std::abs(a - b) < 1e-14 * (1 + b); }),
           br.end());
  return br;
}

// Integral over [0, inf) split at breaks; beyond the last break x = b / u maps the tail onto (0, 1].
template <std::size_t N, class F>
VecQuadResult<N> integrate_half_line(F f, const std::vector<double>& breaks, double tol) {
  const double xb = std::max(2.0 * breaks.back(), breaks.back() + 1.0);
  std::vector<double> head = breaks;
  head.push_back(xb);
  auto r = integrate_panels<N>(f, head, tol, 0.0, 100000);
  auto tail_f = [&](double u) {
    std::array<double, N> v{};
    if (u <= 0) return v;
    v = f(xb / u);
    for (auto& x : v) x *= xb / (u * u);
    return v;
  };
  const auto t = integrate_panels<N>(tail_f, {0.0, 0.25, 0.5, 1.0}, tol, 0.0, 100000);
  for (std::size_t j = 0; j < N; ++j) r.value[j] += t.value[j];
  r.error += t.error;
  r.converged = r.converged && t.converged;
  for (double v : r.value)
    if (!std::isfinite(v)) r.converged = false;
  if (!r.converged) throw QuadratureNonConvergence("spectral quadrature did not converge");
  return r;
}

}  // namespace detail

// Variance in units of hbar / M w0; g = gamma / w0, theta = k_B T / hbar w0.
inline double fdt_variance_reduced(double g, double theta, double tol = 1e-11, double* err = nullptr) {
  if (!(g > 0)) throw InvalidParams("FDT variance needs gamma > 0");
  if (!(theta >= 0)) throw InvalidParams("temperature must be non-negative");
  auto f = [&](double x) {
    const double d = x * x - 1.0;
    return std::array<double, 1>{xcoth(x, theta) * 2.0 * g / (d * d + 4.0 * g * g * x * x)};
  };
  const auto r = detail::integrate_half_line<1>(f, detail::resonance_breaks({1.0}, g), tol);
  if (err) *err = r.error / std::numbers::pi;
  return r.value[0] / std::numbers::pi;
}

inline FdtResult fdt_variance(double M, double w0, double gamma, double T) {
  if (!(M > 0 && w0 > 0)) throw InvalidParams("mass and frequency must be positive");
  const double unit = cgs::hbar / (M * w0);
  double e = 0;
  const double v = fdt_variance_reduced(gamma / w0, cgs::k_B * T / (cgs::hbar * w0), 1e-12, &e);
  return {v * unit, e * unit};
}

// Closed form at T = 0 (underdamped), in units of hbar / M w0.
inline double fdt_variance_zero_T(double g) {
  const double wb = std::sqrt(1.0 - g * g);
  return (1.0 - (2.0 / std::numbers::pi) * std::atan(g / wb)) / (2.0 * wb);
}

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct SteadyCovariance {
  Matrix2 x{};                      // <x_i x_j>, cm^2
  std::array<Matrix2, 2> bath{};    // contribution of each bath
  double error = 0;

  double sigma1_sq() const { return x[0][0]; }
  double sigma2_sq() const { return x[1][1]; }
  double cov() const { return x[0][1]; }
};

// Stationary solution of the coupled quantum Langevin equations with Ohmic baths,
// chi(w) = [K - i w Gamma - w^2 M]^-1, summed over independent thermal noises.
inline SteadyCovariance coupled_spectral_steady(const SystemParams& cgs_p, const BathSpec& baths,
                                                double tol = 1e-10) {
  validate(cgs_p);
  validate(baths);
  if (!(std::abs(cgs_p.lambda_tilde()) < 1.0)) throw Unstable("spectral oracle needs |lambda_tilde| < 1");
  if (!(cgs_p.gamma > 0)) throw InvalidParams("spectral oracle needs gamma > 0");
  const Scales sc = Scales::from(cgs_p.M1, cgs_p.w01);
  const double M2 = cgs_p.M2 / cgs_p.M1, w2 = cgs_p.w02 / cgs_p.w01, g = cgs_p.gamma / cgs_p.w01;
  const double lam = cgs_p.lambda_tilde() * w2 * std::sqrt(M2);
  const std::array<double, 2> M{1.0, M2}, th{baths.T1 / sc.temp, baths.T2 / sc.temp};
  const double K11 = 1.0, K22 = M2 * w2 * w2;

  // undamped normal frequencies locate the resonances
  const double a = K11, d = K22 / M2, c2 = lam * lam / M2;
  const double mean = 0.5 * (a + d), rad = std::hypot(0.5 * (a - d), std::sqrt(c2));
  const double hi = mean + rad, lo = (a * d - c2) / hi;
  const auto br = detail::resonance_breaks({std::sqrt(lo), std::sqrt(hi), 1.0, w2}, g);

  using cd = std::complex<double>;
  auto chi = [&](double w) {
    const cd m11 = K11 - cd(0, w * 2.0 * g) - w * w;
    const cd m22 = K22 - cd(0, w * 2.0 * M2 * g) - w * w * M2;
    const cd m12 = -lam;
    const cd det = m11 * m22 - m12 * m12;
    return std::array<cd, 4>{m22 / det, -m12 / det, -m12 / det, m11 / det};  // 11, 12, 21, 22
  };

  // components: bath k, entries 11, 12, 22
  auto f = [&](double w) {
    const auto x = chi(w);
    std::array<double, 6> v{};
    for (int k = 0; k < 2; ++k) {
      const double wt = xcoth(w, th[k]) * 2.0 * M[k] * g;
      const cd c1 = x[k], c2 = x[2 + k];
      v[3 * k] = wt * std::norm(c1);
      v[3 * k + 1] = wt * (c1 * std::conj(c2)).real();
      v[3 * k + 2] = wt * std::norm(c2);
    }
    return v;
  };
  const auto r = detail::integrate_half_line<6>(f, br, tol);
  const double u = sc.area() / std::numbers::pi;
  SteadyCovariance out;
  for (int k = 0; k < 2; ++k) {
    out.bath[k][0][0] = u * r.value[3 * k];
    out.bath[k][0][1] = out.bath[k][1][0] = u * r.value[3 * k + 1];
    out.bath[k][1][1] = u * r.value[3 * k + 2];
  }
  out.error = u * r.error;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.x[i][j] = out.bath[0][i][j] + out.bath[1][i][j];
  return out;
}

struct NormalizedMoments {
  double sigma1_norm = 0, sigma2_norm = 0, cov_norm = 0;
};

// sigma_k^2 / sigma_k^2(FDT) and cov / sqrt(sigma_1^2(FDT) sigma_2^2(FDT)).
inline NormalizedMoments normalize_moments(const GaussianMoments& m, const SystemParams& p, const BathSpec& b) {
  const double f1 = fdt_variance(p.M1, p.w01, p.gamma, b.T1).sigma_sq;
  const double f2 = fdt_variance(p.M2, p.w02, p.gamma, b.T2).sigma_sq;
  return {m.sigma1_sq / f1, m.sigma2_sq / f2, m.cov / std::sqrt(f1 * f2)};
}

}  // namespace dqo
