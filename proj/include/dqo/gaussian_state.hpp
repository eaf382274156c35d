// gaussian_state.hpp: reduced Gaussian state, second moments, time evolution and steady state
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "action_coeffs.hpp"
#include "core_model.hpp"
#include "elementary_fns.hpp"
#include "errata.hpp"
#include "errors.hpp"
#include "noise_kernels.hpp"
#include "units.hpp"

namespace dqo {

struct Options {
  double rel_tol = 1e-10;       // noise quadrature
  double steady_tol = 1e-3;     // relative change between t and 1.5 t
  double tol_caustic = default_tol_caustic;
  double cutoff_mult = 1000.0;  // omega_cutoff = cutoff_mult * max(w01, w02, Omega2)
  double min_sin = 0.2;         // steady-state sampling keeps |sin(Omega_k t)| above this
  int max_panels = 200000;
  Errata errata{};

  NoiseOptions noise() const {
    NoiseOptions n;
    n.rel_tol = rel_tol;
    n.max_panels = max_panels;
    n.errata = errata;
    return n;
  }
};

// A parameter set converted to internal units.
struct Problem {
  SystemParams p;       // M1 = w01 = 1
  NormalModes modes;
  double theta1 = 0, theta2 = 0;  // k_B T / hbar w01
  double wc = 0;
  InitialState init;    // in units of hbar / M1 w01
  Scales scales;
};

inline Problem make_problem(const SystemParams& cgs_p, const BathSpec& baths,
                            const InitialState& init, const Options& opt = {}) {
  validate(cgs_p);
  validate(baths);
  validate(init);
  Problem pr;
  pr.scales = Scales::from(cgs_p.M1, cgs_p.w01);
  const auto& sc = pr.scales;
  pr.p = SystemParams::with_lambda_tilde(1.0, cgs_p.M2 / cgs_p.M1, 1.0, cgs_p.w02 / cgs_p.w01,
                                         cgs_p.gamma / cgs_p.w01, cgs_p.lambda_tilde());
  pr.modes = normal_modes(pr.p);
  pr.theta1 = baths.T1 / sc.temp;
  pr.theta2 = baths.T2 / sc.temp;
  const double fmax = std::max({pr.p.w01, pr.p.w02, pr.modes.Omega1, pr.modes.Omega2});
  pr.wc = baths.omega_cutoff > 0 ? baths.omega_cutoff / sc.freq : opt.cutoff_mult * fmax;
  if (!(pr.wc > std::max(pr.p.w01, pr.p.w02)))
    throw InvalidParams("omega_cutoff must exceed both bare frequencies");
  pr.init = {init.sigma01_sq / sc.area(), init.sigma02_sq / sc.area()};
  return pr;
}

// Initial Gaussian weights 1/8 sigma0^2 after the rescaling of initial-point variables:
// X_i carries exp(+gamma t) and xi_i exp(-gamma t).
struct GaussWeights {
  double a1X = 0, a1Y = 0, a2X = 0, a2Y = 0;
};

inline GaussWeights gauss_weights(const InitialState& s, double gamma_t) {
  const double up = std::exp(std::min(2.0 * gamma_t, 600.0)), dn = std::exp(-2.0 * gamma_t);
  const double a1 = 1.0 / (8.0 * s.sigma01_sq), a2 = 1.0 / (8.0 * s.sigma02_sq);
  return {a1 * up, a1 * dn, a2 * up, a2 * dn};
}

using cplx = std::complex<double>;

struct ExponentCoeffs {
  cplx g1, g2, g12;
  cplx gp1, gp2, gp12;
  cplx gpp11, gpp12, gpp21, gpp22;
  std::array<cplx, 7> e{}, Z{};  // 1-based
  std::array<cplx, 6> Y{};
  double imag_residue = 0;  // |Im| / |Re| over g1, g2, g12
};

// Successive elimination of xi_i2, X_i2, xi_i1, X_i1 from the propagator exponent
//   (i/hbar) sum S_ac X_a xi_c - N/hbar - a (X_i^2 + xi_i^2).
inline ExponentCoeffs exponent_coeffs(const ActionMatrix& S, const NoiseCoeffs& N,
                                      const GaussWeights& a, const Errata& er = {},
                                      double hbar = 1.0) {
  const cplx I(0.0, 1.0);
  const double h = hbar, h2 = h * h;
  const double A1 = N.A1(), A2 = N.A2(), B1 = N.B1(), B2 = N.B2(), C1 = N.C1(), C2 = N.C2();
  const double E1 = N.E1(), E2 = N.E2(), E3 = N.E3(), E4 = N.E4();
  const double u1 = S[0][3], u2 = S[1][3], u3 = S[2][3], u4 = S[3][3];

  const double c = C2 + h * a.a2Y;
  if (std::abs(c) < 1e-300) throw SingularAssembly("C2 + hbar a2 vanishes");
  const double P = 4.0 * h * a.a2X * c + u4 * u4;
  const double co = c / h;

  ExponentCoeffs g;
  auto& e = g.e;
  auto& Z = g.Z;
  auto& Y = g.Y;
  e[1] = S[3][1] - B2 * u4 / (2 * c);
  e[2] = S[3][0] - E3 * u4 / (2 * c);
  e[3] = S[3][2] - E1 * u4 / (2 * c);
  e[4] = u3 * u4 / (2 * c);
  e[5] = u2 * u4 / (2 * c);
  e[6] = u1 * u4 / (2 * c);

  Z[1] = C1 / h + a.a1Y - E1 * E1 / (4 * h * c) + e[3] * e[3] * co / P;
  Z[2] = S[0][2] - E1 * u1 / (2 * c) - 2.0 * e[3] * e[6] * c / P;
  Z[3] = S[1][2] - E1 * u2 / (2 * c) - 2.0 * e[3] * e[5] * c / P;
  if (er.xi_chain) {
    Z[4] = I * B1 - I * E1 * E3 / (2 * c) + 2.0 * I * e[2] * e[3] * c / P;
    Z[5] = I * E2 - I * E1 * B2 / (2 * c) + 2.0 * I * e[1] * e[3] * c / P;
  } else {
    Z[4] = I * B1 + 2.0 * I * e[2] * e[3] * c / P;
    Z[5] = I * E2 - I * E1 * (B2 + E3) / (2 * c) + 2.0 * I * e[1] * e[3] * c / P;
  }
  Z[6] = S[2][2] - E1 * u3 / (2 * c) - 2.0 * e[3] * e[4] * c / P;
  if (std::abs(Z[1]) < 1e-300) throw SingularAssembly("Z1 vanishes");

  Y[1] = a.a1X + u3 * u3 / (4 * h * c) - e[4] * e[4] * co / P + Z[6] * Z[6] / (4 * h2 * Z[1]);
  Y[2] = S[2][0] - E3 * u3 / (2 * c) - 2.0 * e[2] * e[4] * c / P + I * Z[4] * Z[6] / (2 * h * Z[1]);
  Y[3] = S[2][1] - B2 * u3 / (2 * c) - 2.0 * e[1] * e[4] * c / P + I * Z[5] * Z[6] / (2 * h * Z[1]);
  Y[4] = I * u2 * u3 / (2 * c) - 2.0 * I * e[4] * e[5] * c / P + I * Z[3] * Z[6] / (2 * h * Z[1]);
  Y[5] = I * u1 * u3 / (2 * c) - 2.0 * I * e[4] * e[6] * c / P + I * Z[2] * Z[6] / (2 * h * Z[1]);
  if (std::abs(Y[1]) < 1e-300) throw SingularAssembly("Y1 vanishes");

  const cplx hZ = h2 * Z[1], hY = h2 * Y[1];
  g.g1 = u1 * u1 / (4 * h * c) - e[6] * e[6] * co / P + Z[2] * Z[2] / (4.0 * hZ) + Y[5] * Y[5] / (4.0 * hY);
  g.g12 = 2 * u2 * u1 / (4 * h * c) - 2.0 * e[5] * e[6] * co / P + Z[2] * Z[3] / (2.0 * hZ) +
          Y[4] * Y[5] / (2.0 * hY);
  g.g2 = u2 * u2 / (4 * h * c) - e[5] * e[5] * co / P + Z[3] * Z[3] / (4.0 * hZ) + Y[4] * Y[4] / (4.0 * hY);

  const auto Sff = [&](int a_, int c_) { return S[a_][c_]; };
  if (er.xi_chain) {
    g.gp1 = A1 / h - E3 * E3 / (4 * h * c) + e[2] * e[2] * co / P + Z[4] * Z[4] / (4.0 * hZ) +
            Y[2] * Y[2] / (4.0 * hY);
    g.gp12 = E4 / h - B2 * E3 / (2 * h * c) + 2.0 * e[1] * e[2] * co / P + Z[4] * Z[5] / (2.0 * hZ) +
             Y[2] * Y[3] / (2.0 * hY);
    g.gp2 = A2 / h - B2 * B2 / (4 * h * c) + e[1] * e[1] * co / P + Z[5] * Z[5] / (4.0 * hZ) +
            Y[3] * Y[3] / (4.0 * hY);
    g.gpp11 = -I * Sff(0, 0) / h + I * E3 * u1 / (2 * h * c) + 2.0 * I * e[2] * e[6] * co / P +
              Z[2] * Z[4] / (2.0 * hZ) + Y[2] * Y[5] / (2.0 * hY);
    g.gpp21 = -I * Sff(1, 0) / h + I * E3 * u2 / (2 * h * c) + 2.0 * I * e[2] * e[5] * co / P +
              Z[3] * Z[4] / (2.0 * hZ) + Y[2] * Y[4] / (2.0 * hY);
    g.gpp12 = -I * Sff(0, 1) / h + I * B2 * u1 / (2 * h * c) + 2.0 * I * e[1] * e[6] * co / P +
              Z[2] * Z[5] / (2.0 * hZ) + Y[3] * Y[5] / (2.0 * hY);
    g.gpp22 = -I * Sff(1, 1) / h + I * B2 * u2 / (2 * h * c) + 2.0 * I * e[1] * e[5] * co / P +
              Z[3] * Z[5] / (2.0 * hZ) + Y[3] * Y[4] / (2.0 * hY);
  } else {
    g.gp1 = A1 / h - E3 * E3 / (4 * h * c) - e[2] * e[2] * co / P + Z[4] * Z[4] / (4.0 * hZ) +
            Y[2] * Y[2] / (4.0 * hY);
    g.gp12 = E4 / h - B2 * E3 / (2 * h * c) - 2.0 * e[1] * e[1] * co / P + Z[4] * Z[5] / (2.0 * hZ) +
             Y[2] * Y[3] / (2.0 * hY);
    g.gp2 = A2 / h - B2 * B2 / (4 * h * c) - e[1] * e[1] * co / P + Z[5] * Z[5] / (4.0 * hZ) +
            Y[3] * Y[3] / (4.0 * hY);
    g.gpp11 = -I * Sff(0, 0) / h + I * E3 * u1 / (2 * h * c) + 2.0 * e[2] * e[6] * co / P +
              Z[4] * Z[6] / (4.0 * hZ) + Y[2] * Y[5] / (4.0 * hY);
    g.gpp21 = -I * Sff(1, 0) / h + I * E3 * u2 / (2 * h * c) - 2.0 * e[3] * e[5] * co / P +
              Z[3] * Z[4] / (2.0 * hZ) + Y[2] * Y[4] / (2.0 * hY);
    g.gpp12 = -I * Sff(0, 1) / h + I * B2 * u1 / (2 * h * c) - 2.0 * e[1] * e[6] * co / P +
              Z[2] * Z[5] / (2.0 * hZ) + Y[3] * Y[5] / (2.0 * hY);
    g.gpp22 = -I * Sff(1, 1) / h + I * B2 * u2 / (2 * h * c) + 2.0 * e[1] * e[5] * co / P +
              Z[3] * Z[5] / (4.0 * hZ) + Y[3] * Y[4] / (4.0 * hY);
  }

  const double re = std::max({std::abs(g.g1.real()), std::abs(g.g2.real()), std::abs(g.g12.real())});
  const double im = std::max({std::abs(g.g1.imag()), std::abs(g.g2.imag()), std::abs(g.g12.imag())});
  g.imag_residue = re > 0 ? im / re : 0.0;
  return g;
}

// Exponent of the reduced density matrix without the normalization factor.
inline cplx eval_log_density(const ExponentCoeffs& g, double Xf1, double Xf2, double yf1, double yf2) {
  return -(g.g1 * Xf1 * Xf1 + g.g12 * Xf1 * Xf2 + g.g2 * Xf2 * Xf2 + g.gp1 * yf1 * yf1 +
           g.gp12 * yf1 * yf2 + g.gp2 * yf2 * yf2 + g.gpp11 * Xf1 * yf1 + g.gpp21 * Xf2 * yf1 +
           g.gpp12 * Xf1 * yf2 + g.gpp22 * Xf2 * yf2);
}

struct GaussianMoments {
  double sigma1_sq = 0, sigma2_sq = 0, cov = 0, t = 0;
};

struct Betas {
  double b11 = 0, b22 = 0, b12 = 0;
};

inline Betas betas(const ExponentCoeffs& g, const Errata& er = {}) {
  return {8.0 * g.g1.real(), 8.0 * g.g2.real(), (er.beta12 ? 4.0 : 8.0) * g.g12.real()};
}

inline GaussianMoments moments(const Betas& b) {
  const double det = b.b11 * b.b22 - b.b12 * b.b12;
  if (!(det > 0) || !(b.b11 > 0)) throw NonNormalizable("positional Gaussian is not normalizable");
  GaussianMoments m;
  m.sigma1_sq = b.b22 / det;
  m.sigma2_sq = b.b11 / det;
  m.cov = b.b12 / (b.b12 * b.b12 - b.b11 * b.b22);
  return m;
}

inline GaussianMoments moments(const ExponentCoeffs& g, const Errata& er = {}) {
  return moments(betas(g, er));
}

// Everything needed at a single time, internal units.
struct StatePoint {
  ActionMatrix S{};
  NoiseCoeffs noise;
  ExponentCoeffs g;
  GaussianMoments m;
};

inline StatePoint state_at(const Problem& pr, double t, const Options& opt = {}) {
  StatePoint sp;
  if (t <= 0) {
    sp.m = {pr.init.sigma01_sq, pr.init.sigma02_sq, 0.0, 0.0};
    return sp;
  }
  const auto& md = pr.modes;
  const auto sf = s_funcs(t, md);
  const auto w = scaled_mode_weights(t, md, opt.tol_caustic);
  const auto b = b_coeffs(sf, pr.p, md);
  const auto d = d_coeffs(pr.p, md, w, b, opt.errata);
  const auto pc = pi_coeffs(pr.p, md, w, sf, opt.errata);
  sp.S = action_matrix(d, pc);
  sp.noise = noise_coeffs(t, pr.p, md, w, pr.theta1, pr.theta2, pr.wc, opt.noise());
  const auto a = gauss_weights(pr.init, pr.p.gamma * t);
  sp.g = exponent_coeffs(sp.S, sp.noise, a, opt.errata);
  sp.m = moments(sp.g, opt.errata);
  sp.m.t = t;
  return sp;
}

inline GaussianMoments to_cgs(GaussianMoments m, const Scales& sc) {
  m.sigma1_sq *= sc.area();
  m.sigma2_sq *= sc.area();
  m.cov *= sc.area();
  m.t *= sc.time;
  return m;
}

// Shifts t forward past any caustic closer than tol; returns the shift applied.
inline double nudge_caustic(double& t, const NormalModes& md, double tol) {
  double shift = 0;
  for (int pass = 0; pass < 4; ++pass) {
    bool moved = false;
    for (double O : {md.Omega1, md.Omega2}) {
      if (t > 0 && std::abs(std::sin(O * t)) < tol) {
        const double d = 10.0 * tol / O;
        t += d;
        shift += d;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return shift;
}

struct Trajectory {
  std::vector<GaussianMoments> points;  // CGS
  std::vector<double> shifts;           // caustic nudges applied, s
  bool steady = false;
  double residual = 0;                  // relative change over the last 10% of the grid
};

// Runs fn(i) for i in [0, n) on up to `threads` workers; first exception is rethrown.
template <class Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) {
    pool.emplace_back([&] {
      for (int i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// grid in seconds; output in CGS and grid order.
inline Trajectory evolve(const SystemParams& params, const BathSpec& baths, const InitialState& init,
                         const std::vector<double>& grid, const Options& opt = {}, int threads = 1) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw InvalidParams("time grid must be strictly increasing");
  const Problem pr = make_problem(params, baths, init, opt);
  Trajectory tr;
  tr.points.resize(grid.size());
  tr.shifts.assign(grid.size(), 0.0);
  parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
    double t = grid[i] / pr.scales.time;
    tr.shifts[i] = nudge_caustic(t, pr.modes, opt.tol_caustic) * pr.scales.time;
    try {
      tr.points[i] = to_cgs(state_at(pr, t, opt).m, pr.scales);
    } catch (const Error& e) {
      e.rethrow(std::string(e.what()) + " at t=" + std::to_string(grid[i]) + " s");
    }
  });
  if (tr.points.size() >= 10) {
    const auto& last = tr.points.back();
    const auto& ref = tr.points[tr.points.size() * 9 / 10];
    tr.residual = std::max(std::abs(last.sigma1_sq / ref.sigma1_sq - 1.0),
                           std::abs(last.sigma2_sq / ref.sigma2_sq - 1.0));
    tr.steady = tr.residual < opt.steady_tol;
  }
  return tr;
}

inline double slowest_rate(const Problem& pr) {
  return std::min({pr.p.gamma, pr.modes.Omega1, pr.modes.Omega2, pr.p.w01, pr.p.w02});
}

// Smallest t' >= t at which both |sin(Omega_k t')| >= min_sin.
inline double clear_of_caustics(double t, const NormalModes& md, double min_sin) {
  const double step = 0.01 / std::max(md.Omega1, md.Omega2);
  for (int j = 0; j < 1000000; ++j) {
    const double x = t + j * step;
    if (std::abs(std::sin(md.Omega1 * x)) >= min_sin && std::abs(std::sin(md.Omega2 * x)) >= min_sin)
      return x;
  }
  return t;
}

struct SteadyResult {
  GaussianMoments m;  // CGS
  double residual = 0;
  double t = 0;       // s
};

inline double moment_change(const GaussianMoments& a, const GaussianMoments& b) {
  const double s = std::sqrt(std::abs(b.sigma1_sq * b.sigma2_sq));
  return std::max({std::abs(a.sigma1_sq / b.sigma1_sq - 1.0), std::abs(a.sigma2_sq / b.sigma2_sq - 1.0),
                   std::abs(a.cov - b.cov) / s});
}

inline SteadyResult steady_state(const Problem& pr, const Options& opt = {}) {
  const double nu = slowest_rate(pr);
  if (!(nu > 0)) throw NoConvergence("no relaxation without damping");
  const double t_stop = 2000.0 / nu;
  double t = clear_of_caustics(20.0 / nu, pr.modes, opt.min_sin);
  GaussianMoments prev = state_at(pr, t, opt).m;
  double residual = 0;
  while (true) {
    const double t_next = clear_of_caustics(1.5 * t, pr.modes, opt.min_sin);
    const GaussianMoments cur = state_at(pr, t_next, opt).m;
    residual = moment_change(prev, cur);
    if (residual < opt.steady_tol) return {to_cgs(cur, pr.scales), residual, t_next * pr.scales.time};
    if (t_next > t_stop)
      throw NoConvergence("steady state not reached, residual " + std::to_string(residual));
    prev = cur;
    t = t_next;
  }
}

inline SteadyResult steady_state(const SystemParams& params, const BathSpec& baths,
                                 const InitialState& init, const Options& opt = {}) {
  return steady_state(make_problem(params, baths, init, opt), opt);
}

}  // namespace dqo
