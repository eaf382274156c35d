#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "dqo/elementary_fns.hpp"

using namespace dqo;
using boost::math::quadrature::gauss_kronrod;

namespace {

NormalModes modes_of(double O1, double O2) {
  NormalModes m;
  m.Omega1 = O1;
  m.Omega2 = O2;
  m.Omega1_sq = O1 * O1;
  m.Omega2_sq = O2 * O2;
  return m;
}

double integral(const std::function<double(double)>& f, double t) {
  return gauss_kronrod<double, 61>::integrate(f, 0.0, t, 15, 1e-14);
}

}  // namespace

TEST(SFuncs, MatchQuadratureOfProducts) {
  const double O1 = 0.83, O2 = 1.37, t = 3.1;
  const auto s = s_funcs(t, modes_of(O1, O2));
  auto S1 = [&](double x) { return std::sin(O1 * x); };
  auto C1 = [&](double x) { return std::cos(O1 * x); };
  auto S2 = [&](double x) { return std::sin(O2 * x); };
  auto C2 = [&](double x) { return std::cos(O2 * x); };
  const std::function<double(double)> prod[15] = {
      nullptr,
      [&](double x) { return C1(x) * C1(x); }, [&](double x) { return S1(x) * S1(x); },
      [&](double x) { return C2(x) * C2(x); }, [&](double x) { return S2(x) * S2(x); },
      [&](double x) { return S1(x) * C1(x); }, [&](double x) { return S2(x) * C2(x); },
      [&](double x) { return C1(x) * C2(x); }, [&](double x) { return C1(x) * S2(x); },
      [&](double x) { return S1(x) * C2(x); }, [&](double x) { return S1(x) * S2(x); },
      [&](double x) { return C1(x) * C2(x); }, [&](double x) { return S1(x) * C2(x); },
      [&](double x) { return C1(x) * S2(x); }, [&](double x) { return S1(x) * S2(x); }};
  for (int k = 1; k <= 14; ++k) EXPECT_NEAR(s[k], integral(prod[k], t), 1e-13) << "s" << k;
}

TEST(SFuncs, DegenerateBranchIsContinuous) {
  // Just above the switch the direct form is still accurate; both must agree.
  const double O = 1.2, t = 7.3;
  const auto m = modes_of(O, O * (1 + 1.5e-6));
  const auto a = s_funcs(t, m);
  double b7, b8, b9, b10;
  mixed_s(t, m.Omega1, m.Omega2, true, b7, b8, b9, b10);
  EXPECT_NEAR(a[7], b7, 1e-8);
  EXPECT_NEAR(a[8], b8, 1e-8);
  EXPECT_NEAR(a[9], b9, 1e-8);
  EXPECT_NEAR(a[10], b10, 1e-8);
  const auto e = s_funcs(t, modes_of(O, O));
  EXPECT_NEAR(e[7], integral([&](double x) { return std::cos(O * x) * std::cos(O * x); }, t), 1e-13);
  EXPECT_NEAR(e[10], integral([&](double x) { return std::sin(O * x) * std::sin(O * x); }, t), 1e-13);
  EXPECT_NEAR(e[8], integral([&](double x) { return std::cos(O * x) * std::sin(O * x); }, t), 1e-13);
}

TEST(SFuncs, SmallTime) {
  const auto s = s_funcs(1e-7, modes_of(0.9, 1.1));
  EXPECT_NEAR(s[1] / 1e-7, 1.0, 1e-12);
  EXPECT_NEAR(s[2] / (1e-21 * 0.81 / 3), 1.0, 1e-6);
}

TEST(FFuncs, ProductPattern) {
  const auto m = modes_of(0.7, 1.9);
  const double tau = 0.4, s = 1.3;
  const auto f = f_funcs(tau, s, m);
  const double S1t = std::sin(0.7 * tau), C1t = std::cos(0.7 * tau), S2t = std::sin(1.9 * tau), C2t = std::cos(1.9 * tau);
  const double S1s = std::sin(0.7 * s), S2s = std::sin(1.9 * s), C2s = std::cos(1.9 * s);
  EXPECT_DOUBLE_EQ(f[1], S1t * S1s);
  EXPECT_DOUBLE_EQ(f[4], S2t * S1s);
  EXPECT_DOUBLE_EQ(f[7], C1t * C2s);
  EXPECT_DOUBLE_EQ(f[12], C1t * S2s);
  EXPECT_DOUBLE_EQ(f[14], C2t * S2s);
  EXPECT_DOUBLE_EQ(f[16], C2t * S1s);
  const auto printed = f_funcs(tau, s, m, false);
  EXPECT_DOUBLE_EQ(printed[14], printed[16]);
}

TEST(ModeWeights, ValuesAndErrors) {
  auto m = modes_of(0.9, 1.4);
  m.r1 = 0.3;
  m.r2 = -0.2;
  const double t = 1.7, g = 0.05;
  const auto w = mode_weights(t, m, g);
  const double l = 1.0 / (1.0 + 0.06);
  EXPECT_NEAR(w.ell, l, 1e-15);
  EXPECT_NEAR(w.n1, std::exp(g * t) * l / std::sin(0.9 * t), 1e-14);
  EXPECT_NEAR(w.nbar2, std::exp(-g * t) * l / std::sin(1.4 * t), 1e-14);
  EXPECT_NEAR(w.m2, l / std::tan(1.4 * t), 1e-14);
  const auto sc = scaled_mode_weights(t, m);
  EXPECT_DOUBLE_EQ(sc.n1, sc.nbar1);
  EXPECT_THROW(mode_weights(M_PI / 0.9, m, g), CausticTime);
  m.r1 = 1.0;
  m.r2 = 1.0;
  EXPECT_THROW(mode_weights(t, m, g), DegenerateRatios);
}
