// core_model.hpp: parameters, normal modes and classical paths of two coupled damped oscillators
#pragma once

#include <array>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "units.hpp"

namespace dqo {

// Works in any consistent unit system; the library boundary uses CGS.
struct SystemParams {
  double M1 = 1.0, M2 = 1.0;    // masses
  double w01 = 1.0, w02 = 1.0;  // bare frequencies
  double gamma = 0.0;           // common damping rate
  double lambda = 0.0;          // bilinear coupling

  // Coupling normalized to the stability bound.
  double lambda_tilde() const { return lambda / (w01 * w02 * std::sqrt(M1 * M2)); }
  double lambda_max() const { return w01 * w02 * std::sqrt(M1 * M2); }

  static SystemParams with_lambda_tilde(double M1, double M2, double w01, double w02,
                                        double gamma, double lt) {
    SystemParams p{M1, M2, w01, w02, gamma, 0.0};
    p.lambda = lt * p.lambda_max();
    return p;
  }

  SystemParams swapped() const { return {M2, M1, w02, w01, gamma, lambda}; }
};

struct BathSpec {
  double T1 = 0.0, T2 = 0.0;   // K
  double omega_cutoff = 0.0;   // rad/s; 0 selects cutoff_mult * max frequency
};

struct InitialState {
  double sigma01_sq = 1.0, sigma02_sq = 1.0;
};

struct NormalModes {
  double Omega1 = 0, Omega2 = 0;
  double r1 = 0, r2 = 0;
  double delta = 0;
  double Omega1_sq = 0, Omega2_sq = 0;

  double ell() const { return 1.0 / (1.0 - r1 * r2); }
};

struct CriticalMap {
  double M_eff = 0, omega_eff = 0;
  double J1 = 0, J2 = 0;
};

inline constexpr double lambda_zero_tol = 1e-12;

inline void validate(const SystemParams& p) {
  if (!(p.M1 > 0 && p.M2 > 0)) throw InvalidParams("masses must be positive");
  if (!(p.w01 > 0 && p.w02 > 0)) throw InvalidParams("frequencies must be positive");
  if (!(p.gamma >= 0)) throw InvalidParams("gamma must be non-negative");
  if (!std::isfinite(p.lambda)) throw InvalidParams("lambda must be finite");
  if (std::abs(p.lambda_tilde()) > 1.0) throw Unstable("|lambda_tilde| exceeds 1");
}

inline void validate(const BathSpec& b) {
  if (!(b.T1 >= 0 && b.T2 >= 0)) throw InvalidParams("temperatures must be non-negative");
  if (!(b.omega_cutoff >= 0)) throw InvalidParams("omega_cutoff must be non-negative");
}

inline void validate(const InitialState& s) {
  if (!(s.sigma01_sq > 0 && s.sigma02_sq > 0))
    throw InvalidParams("initial dispersions must be positive");
}

inline double normalized_coupling(const SystemParams& p) { return p.lambda_tilde(); }

// Mode 1 is the branch that reduces to oscillator 1 as lambda -> 0.
inline NormalModes normal_modes(const SystemParams& p, bool allow_boundary = false) {
  validate(p);
  const double g2 = p.gamma * p.gamma;
  const double a2 = p.w01 * p.w01, b2 = p.w02 * p.w02;
  double lt = p.lambda_tilde();
  if (std::abs(lt) < lambda_zero_tol) lt = 0.0;
  const double c = lt * (p.w01 * p.w02);  // lambda / sqrt(M1 M2)
  const double A = 0.5 * (a2 + b2) - g2;
  const double B = 0.5 * (b2 - a2);
  const double R = std::hypot(B, c);
  const double s = B >= 0 ? 1.0 : -1.0;
  const double hi = A + R;
  const double prod = a2 * b2 * (1.0 - lt * lt) - g2 * (a2 + b2) + g2 * g2;
  const double lo = prod / hi;

  NormalModes m;
  m.Omega1_sq = s > 0 ? lo : hi;
  m.Omega2_sq = s > 0 ? hi : lo;
  const double least = std::min(m.Omega1_sq, m.Omega2_sq);
  if (least < 0 || (least == 0 && !allow_boundary))
    throw OverdampedMode("normal mode is not oscillatory (Omega^2=" + std::to_string(least) + ")");
  m.Omega1 = std::sqrt(m.Omega1_sq);
  m.Omega2 = std::sqrt(m.Omega2_sq);
  if (c != 0.0) {
    const double den = R + std::abs(B);
    m.r1 = s * c * std::sqrt(p.M1 / p.M2) / den;
    m.r2 = -s * c * std::sqrt(p.M2 / p.M1) / den;
  }
  m.delta = p.gamma;
  return m;
}

inline CriticalMap critical_coupling_map(const SystemParams& p) {
  CriticalMap c;
  c.M_eff = std::sqrt(p.M1 * p.M2);
  c.omega_eff = std::sqrt(p.w01 * p.w02);
  c.J1 = (p.w01 / p.w02) * std::sqrt(p.M1 / p.M2);
  c.J2 = 1.0 / c.J1;
  return c;
}

struct Endpoints {
  double Xi1 = 0, Xi2 = 0, Xf1 = 0, Xf2 = 0;
};

// Classical path of the coupled equations with damping sign `gamma`;
// the backward path is the same object built with -gamma.
struct ClassicalPath {
  double gamma = 0, O1 = 0, O2 = 0, r1 = 0, r2 = 0;
  double P1 = 0, Q1 = 0, P2 = 0, Q2 = 0;

  std::array<double, 2> operator()(double tau) const {
    const double e = std::exp(-gamma * tau);
    const double u1 = P1 * std::sin(O1 * tau) + Q1 * std::cos(O1 * tau);
    const double u2 = P2 * std::sin(O2 * tau) + Q2 * std::cos(O2 * tau);
    return {e * (u1 + r2 * u2), e * (r1 * u1 + u2)};
  }

  std::array<double, 2> derivative(double tau) const {
    const double e = std::exp(-gamma * tau);
    const double s1 = std::sin(O1 * tau), c1 = std::cos(O1 * tau);
    const double s2 = std::sin(O2 * tau), c2 = std::cos(O2 * tau);
    const double u1 = P1 * s1 + Q1 * c1, du1 = O1 * (P1 * c1 - Q1 * s1);
    const double u2 = P2 * s2 + Q2 * c2, du2 = O2 * (P2 * c2 - Q2 * s2);
    return {e * (du1 + r2 * du2 - gamma * (u1 + r2 * u2)),
            e * (r1 * du1 + du2 - gamma * (r1 * u1 + u2))};
  }
};

inline constexpr double default_tol_caustic = 1e-9;

inline ClassicalPath classical_path(double t_end, const Endpoints& x, const NormalModes& m,
                                    double gamma, double tol_caustic = default_tol_caustic) {
  const double sn1 = std::sin(m.Omega1 * t_end), sn2 = std::sin(m.Omega2 * t_end);
  if (std::abs(sn1) < tol_caustic || std::abs(sn2) < tol_caustic)
    throw CausticTime("endpoint time is a caustic of a normal mode");
  const double l = m.ell();
  const double g = std::exp(gamma * t_end);
  const double n1 = g * l / sn1, n2 = g * l / sn2;
  const double m1 = l * std::cos(m.Omega1 * t_end) / sn1;
  const double m2 = l * std::cos(m.Omega2 * t_end) / sn2;
  ClassicalPath c;
  c.gamma = gamma;
  c.O1 = m.Omega1;
  c.O2 = m.Omega2;
  c.r1 = m.r1;
  c.r2 = m.r2;
  c.P1 = n1 * (x.Xf1 - m.r2 * x.Xf2) - m1 * (x.Xi1 - m.r2 * x.Xi2);
  c.Q1 = l * (x.Xi1 - m.r2 * x.Xi2);
  c.P2 = n2 * (x.Xf2 - m.r1 * x.Xf1) - m2 * (x.Xi2 - m.r1 * x.Xi1);
  c.Q2 = l * (x.Xi2 - m.r1 * x.Xi1);
  return c;
}

}  // namespace dqo
