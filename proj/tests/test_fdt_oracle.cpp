#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dqo/dqo.hpp"

using namespace dqo;

namespace {

// Narrow-resonance value (hbar / 2 M w0) coth(hbar w0 / 2 k_B T).
double narrow(double M, double w0, double T) {
  const double u = cgs::hbar / (2 * M * w0);
  if (T == 0) return u;
  return u / std::tanh(cgs::hbar * w0 / (2 * cgs::k_B * T));
}

}  // namespace

TEST(Fdt, ZeroTemperatureClosedForm) {
  for (double g : {1e-4, 0.01, 0.1, 0.5, 0.9})
    EXPECT_NEAR(fdt_variance_reduced(g, 0.0) / fdt_variance_zero_T(g), 1.0, 1e-10) << g;
}

TEST(Fdt, WeakDampingGroundState) {
  EXPECT_NEAR(fdt_variance_reduced(1e-4, 0.0) / 0.5, 1.0, 1e-4);
  const double v = fdt_variance(1e-23, 1e13, 1e9, 0.0).sigma_sq;
  EXPECT_NEAR(v / narrow(1e-23, 1e13, 0.0), 1.0, 1e-4);
}

TEST(Fdt, RoomTemperatureExample) {
  const auto r = fdt_variance(1e-23, 1e13, 1e10, 300.0);
  EXPECT_NEAR(r.sigma_sq / narrow(1e-23, 1e13, 300.0), 1.0, 1e-3);
  EXPECT_NEAR(r.sigma_sq / 4.16e-17, 1.0, 0.01);
  EXPECT_LT(r.error, 1e-6 * r.sigma_sq);
}

TEST(Fdt, ClassicalLimitIsEquipartition) {
  const double theta = 500.0;
  EXPECT_NEAR(fdt_variance_reduced(1e-3, theta) / theta, 1.0, 1e-5);
}

TEST(Fdt, MonotoneInTemperature) {
  double prev = 0;
  for (double T : {0.0, 1.0, 10.0, 50.0, 100.0, 300.0, 1000.0}) {
    const double v = fdt_variance(1e-23, 1e13, 1e11, T).sigma_sq;
    EXPECT_GT(v, prev) << T;
    prev = v;
  }
}

TEST(Fdt, Errors) {
  EXPECT_THROW(fdt_variance(1e-23, 1e13, 0.0, 300), InvalidParams);
  EXPECT_THROW(fdt_variance(-1e-23, 1e13, 1e11, 300), InvalidParams);
  EXPECT_THROW(fdt_variance(1e-23, 1e13, 1e11, -1), InvalidParams);
}

TEST(Xcoth, Limits) {
  EXPECT_DOUBLE_EQ(xcoth(-2.0, 0.0), 2.0);
  EXPECT_NEAR(xcoth(1e-9, 0.3), 0.6, 1e-15);
  EXPECT_NEAR(xcoth(1.0, 0.3), 1.0 / std::tanh(1.0 / 0.6), 1e-15);
  EXPECT_DOUBLE_EQ(xcoth(300.0, 1.0), 300.0);
}

TEST(Spectral, UncoupledIsDiagonalFdt) {
  const auto p = SystemParams::with_lambda_tilde(1e-23, 3e-23, 1e13, 2e13, 1e11, 0.0);
  const BathSpec b{300, 700, 0};
  const auto c = coupled_spectral_steady(p, b);
  EXPECT_NEAR(c.sigma1_sq() / fdt_variance(1e-23, 1e13, 1e11, 300).sigma_sq, 1.0, 1e-8);
  EXPECT_NEAR(c.sigma2_sq() / fdt_variance(3e-23, 2e13, 1e11, 700).sigma_sq, 1.0, 1e-8);
  EXPECT_NEAR(c.cov(), 0.0, 1e-12 * c.sigma1_sq());
}

TEST(Spectral, LabelAndBathSwap) {
  const auto p = SystemParams::with_lambda_tilde(1e-23, 1.4e-23, 1e13, 1.3e13, 2e11, 0.4);
  const auto a = coupled_spectral_steady(p, {300, 700, 0});
  const auto b = coupled_spectral_steady(p.swapped(), {700, 300, 0});
  EXPECT_NEAR(a.sigma1_sq() / b.sigma2_sq(), 1.0, 1e-8);
  EXPECT_NEAR(a.sigma2_sq() / b.sigma1_sq(), 1.0, 1e-8);
  EXPECT_NEAR(a.cov() / b.cov(), 1.0, 1e-8);
}

TEST(Spectral, PositiveDefiniteAndBathSplit) {
  const auto p = SystemParams::with_lambda_tilde(1e-23, 1e-23, 1e13, 1e13, 1e11, 0.7);
  const auto c = coupled_spectral_steady(p, {300, 700, 0});
  EXPECT_GT(c.sigma1_sq(), 0);
  EXPECT_GT(c.sigma1_sq() * c.sigma2_sq() - c.cov() * c.cov(), 0);
  EXPECT_NEAR(c.bath[0][0][0] + c.bath[1][0][0], c.sigma1_sq(), 1e-15 * c.sigma1_sq());
  EXPECT_GT(c.bath[1][0][0], c.bath[0][0][0]);  // the hotter bath dominates
}

// Hot-cold splitting of the normalized variances widens with the coupling.
TEST(Spectral, SplittingGrowsWithCoupling) {
  const BathSpec b{300, 700, 0};
  double prev = -1;
  for (double lt : {0.05, 0.2, 0.5, 0.8}) {
    const auto p = SystemParams::with_lambda_tilde(1e-23, 1e-23, 1e13, 1e13, 1e11, lt);
    const auto c = coupled_spectral_steady(p, b);
    GaussianMoments m{c.sigma1_sq(), c.sigma2_sq(), c.cov(), 0};
    const auto n = normalize_moments(m, p, b);
    const double split = std::abs(n.sigma1_norm - n.sigma2_norm);
    EXPECT_GT(split, prev) << lt;
    prev = split;
  }
}

TEST(Spectral, EqualTemperaturesMatchPipeline) {
  for (double lt : {0.1, 0.5}) {
    const auto p = SystemParams::with_lambda_tilde(1e-23, 1.1e-23, 1e13, 1.1e13, 1e11, lt);
    const BathSpec b{300, 300, 0};
    const auto c = coupled_spectral_steady(p, b);
    const InitialState init{cgs::hbar / 2e-10, cgs::hbar / 2.42e-10};
    const auto s = steady_state(p, b, init).m;
    EXPECT_NEAR(s.sigma1_sq / c.sigma1_sq(), 1.0, 0.01) << lt;
    EXPECT_NEAR(s.sigma2_sq / c.sigma2_sq(), 1.0, 0.01) << lt;
    EXPECT_NEAR(s.cov, c.cov(), 0.01 * std::sqrt(c.sigma1_sq() * c.sigma2_sq())) << lt;
  }
}

TEST(Spectral, Errors) {
  EXPECT_THROW(coupled_spectral_steady(SystemParams::with_lambda_tilde(1, 1, 1, 1, 0.1, 1.0), {1, 1, 0}), Unstable);
  EXPECT_THROW(coupled_spectral_steady(SystemParams::with_lambda_tilde(1, 1, 1, 1, 0.0, 0.5), {1, 1, 0}),
               InvalidParams);
}

TEST(Normalize, ExactFdtGivesOne) {
  const auto p = SystemParams::with_lambda_tilde(1e-23, 2e-23, 1e13, 3e13, 1e11, 0.3);
  const BathSpec b{100, 400, 0};
  const double f1 = fdt_variance(1e-23, 1e13, 1e11, 100).sigma_sq, f2 = fdt_variance(2e-23, 3e13, 1e11, 400).sigma_sq;
  const auto n = normalize_moments({f1, f2, 0.5 * std::sqrt(f1 * f2), 0}, p, b);
  EXPECT_DOUBLE_EQ(n.sigma1_norm, 1.0);
  EXPECT_DOUBLE_EQ(n.sigma2_norm, 1.0);
  EXPECT_NEAR(n.cov_norm, 0.5, 1e-15);
}
