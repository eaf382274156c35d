// action_coeffs.hpp: b, D and Pi coefficient tables of the classical action
#pragma once

#include <array>

#include "core_model.hpp"
#include "elementary_fns.hpp"
#include "errata.hpp"

namespace dqo {

// b[1..16], bp[1..16]
struct BCoeffs {
  std::array<double, 17> b{}, bp{};
};

// D[1..4], Dp[1..4]; Ds[k] = D_k + D'_k for k = 5..12
struct DCoeffs {
  std::array<double, 5> D{}, Dp{};
  std::array<double, 13> Ds{};
};

// Pi[1..16]
struct PiCoeffs {
  std::array<double, 17> Pi{};
};

inline BCoeffs b_coeffs(const SFuncs& sf, const SystemParams& p, const NormalModes& md) {
  const auto& s = sf.s;
  const double O1 = md.Omega1, O2 = md.Omega2, g = p.gamma;
  const double r1 = md.r1, r2 = md.r2;
  const double w1 = p.w01 * p.w01 - g * g, w2 = p.w02 * p.w02 - g * g;
  const double O12 = O1 * O2, O1s = O1 * O1, O2s = O2 * O2;
  BCoeffs c;
  auto& b = c.b;
  auto& bp = c.bp;

  b[1] = O1s * s[1] - w1 * s[2] - 2 * O1 * g * s[5];
  b[2] = -O1s * s[5] - w1 * s[5] - O1 * g * (s[1] - s[2]);
  b[3] = -O1s * s[5] - w1 * s[5] - O1 * g * (s[1] - s[2]);
  b[4] = O1s * s[2] - w1 * s[1] + 2 * O1 * g * s[5];
  b[5] = r2 * (O12 * s[7] - w1 * s[10] - O1 * g * s[8] - O2 * g * s[9]);
  b[6] = r2 * (-O12 * s[8] - w1 * s[9] - O1 * g * s[7] + O2 * g * s[10]);
  b[7] = r2 * (-O12 * s[9] - w1 * s[8] + O1 * g * s[10] - O2 * g * s[7]);
  b[8] = r2 * (O12 * s[10] - w1 * s[7] + O1 * g * s[9] + O2 * g * s[8]);
  b[9] = r2 * (O12 * s[11] - w1 * s[14] - O2 * g * s[12] - O1 * g * s[13]);
  b[10] = r2 * (-O12 * s[12] - w1 * s[13] - O2 * g * s[11] + O1 * g * s[14]);
  b[11] = r2 * (-O12 * s[13] - w1 * s[12] + O2 * g * s[14] - O1 * g * s[11]);
  b[12] = r2 * (O12 * s[14] - w1 * s[11] + O2 * g * s[13] + O1 * g * s[12]);
  b[13] = r2 * r2 * (O2s * s[3] - w1 * s[4] - 2 * O2 * g * s[6]);
  b[14] = r2 * r2 * (-O2s * s[6] - w1 * s[6] + O2 * g * (s[4] - s[3]));
  b[15] = r2 * r2 * (-O2s * s[6] - w1 * s[6] + O2 * g * (s[4] - s[3]));
  b[16] = r2 * r2 * (O2s * s[4] - w1 * s[3] + 2 * O2 * g * s[6]);

  bp[1] = O2s * s[3] - w2 * s[4] - 2 * O2 * g * s[6];
  bp[2] = -O2s * s[6] - w2 * s[6] - O2 * g * (s[3] - s[4]);
  bp[3] = -O2s * s[6] - w2 * s[6] - O2 * g * (s[3] - s[4]);
  bp[4] = O2s * s[4] - w2 * s[3] + 2 * O2 * g * s[6];
  bp[5] = r1 * (O12 * s[7] - w2 * s[10] - O1 * g * s[8] - O2 * g * s[9]);
  bp[6] = r1 * (-O12 * s[8] - w2 * s[9] - O1 * g * s[7] + O2 * g * s[10]);
  bp[7] = r1 * (O12 * s[10] - w2 * s[7] + O1 * g * s[9] + O2 * g * s[8]);
  bp[8] = r1 * (-O12 * s[9] - w2 * s[8] + O1 * g * s[10] - O2 * g * s[7]);
  bp[9] = r1 * (O12 * s[11] - w2 * s[14] - O2 * g * s[12] - O1 * g * s[13]);
  bp[10] = r1 * (-O12 * s[12] - w2 * s[13] - O2 * g * s[11] + O1 * g * s[14]);
  bp[11] = r1 * (-O12 * s[13] - w2 * s[12] + O2 * g * s[14] - O1 * g * s[11]);
  bp[12] = r1 * (O12 * s[14] - w2 * s[11] + O2 * g * s[13] + O1 * g * s[12]);
  bp[13] = r1 * r1 * (O1s * s[1] - w2 * s[2] - 2 * O1 * g * s[5]);
  bp[14] = r1 * r1 * (-O1s * s[5] - w2 * s[5] + O1 * g * (s[2] - s[1]));
  bp[15] = r1 * r1 * (-O1s * s[5] - w2 * s[5] + O1 * g * (s[2] - s[1]));
  bp[16] = r1 * r1 * (O1s * s[2] - w2 * s[1] + 2 * O1 * g * s[5]);
  return c;
}

inline BCoeffs b_coeffs(double t, const SystemParams& p, const NormalModes& md) {
  return b_coeffs(s_funcs(t, md), p, md);
}

inline DCoeffs d_coeffs(const SystemParams& p, const NormalModes& md, const ModeWeights& w,
                        const BCoeffs& bc, const Errata& er = {}) {
  const auto& b = bc.b;
  const auto& bp = bc.bp;
  const double H1 = 0.5 * p.M1, H2 = 0.5 * p.M2;
  const double r1 = md.r1, r2 = md.r2, r1s = r1 * r1, r2s = r2 * r2;
  const double n1 = w.n1, n2 = w.n2, nb1 = w.nbar1, nb2 = w.nbar2;
  const double m1 = w.m1, m2 = w.m2, l = w.ell, l2 = l * l;
  DCoeffs d;
  auto& D = d.D;
  auto& Dp = d.Dp;
  auto& Ds = d.Ds;

  // Xf1 xi_f1, Xf2 xi_f2
  D[1] = H1 * (n1 * nb1 * b[1] - r1 * n1 * nb2 * b[9] - r1 * n2 * nb1 * b[5] + r1s * n2 * nb2 * b[13]) +
         H2 * (n1 * nb1 * bp[13] - r1 * n1 * nb2 * bp[9] - r1 * n2 * nb1 * bp[5] + r1s * n2 * nb2 * bp[1]);
  Dp[1] = H1 * (r2s * n1 * nb1 * b[1] - r2 * n1 * nb2 * b[9] - r2 * n2 * nb1 * b[5] + n2 * nb2 * b[13]) +
          H2 * (r2s * n1 * nb1 * bp[13] - r2 * n1 * nb2 * bp[9] - r2 * n2 * nb1 * bp[5] + n2 * nb2 * bp[1]);

  // Xi1 xi_f1, Xi2 xi_f2
  const double bq = er.d2_b13 ? bp[1] : bp[13];
  D[2] = H1 * (-m1 * nb1 * b[1] + r1 * m1 * nb2 * b[9] + nb1 * l * b[2] - r1 * nb2 * l * b[10] +
               r1 * m2 * nb1 * b[5] - r1s * m2 * nb2 * b[13] - r1 * nb1 * l * b[6] + r1s * nb2 * l * b[14]) +
         H2 * (-m1 * nb1 * bp[13] + r1 * m1 * nb2 * bp[9] + nb1 * l * bp[14] - r1 * nb2 * l * bp[10] +
               r1 * m2 * nb1 * bp[5] - r1s * m2 * nb2 * bq - r1 * nb1 * l * bp[6] + r1s * nb2 * l * bp[2]);
  Dp[2] = H1 * (-r2s * m1 * nb1 * b[1] + r2 * m1 * nb2 * b[9] + r2s * nb1 * l * b[2] - r2 * nb2 * l * b[10] +
                r2 * m2 * nb1 * b[5] - m2 * nb2 * b[13] - r2 * nb1 * l * b[6] + nb2 * l * b[14]) +
          H2 * (-r2s * m1 * nb1 * bp[13] + r2 * m1 * nb2 * bp[9] + r2s * nb1 * l * bp[14] - r2 * nb2 * l * bp[10] +
                r2 * m2 * nb1 * bp[5] - m2 * nb2 * bq - r2 * nb1 * l * bp[6] + nb2 * l * bp[2]);

  // Xf1 xi_i1, Xf2 xi_i2
  const double c13 = er.d3_mline ? bp[1] : bp[13];
  const double c15 = er.d3_mline ? bp[3] : bp[15];
  const double c7 = er.d3_mline ? bp[8] : bp[7];
  D[3] = H1 * (-m1 * n1 * b[1] + n1 * l * b[3] + r1 * m2 * n1 * b[9] - r1 * n1 * l * b[11] +
               r1 * m1 * n2 * b[5] - r1 * n2 * l * b[7] - r1s * m2 * n2 * b[13] + r1s * n2 * l * b[15]) +
         H2 * (-m1 * n1 * bp[13] + n1 * l * bp[15] + r1 * m2 * n1 * bp[9] - r1 * n1 * l * bp[11] +
               r1 * m1 * n2 * bp[5] - r1 * n2 * l * c7 - r1s * m2 * n2 * c13 + r1s * n2 * l * c15);
  Dp[3] = H1 * (-r2s * m1 * n1 * b[1] + r2s * n1 * l * b[3] + r2 * m2 * n1 * b[9] - r2 * n1 * l * b[11] +
                r2 * m1 * n2 * b[5] - r2 * n2 * l * b[7] - m2 * n2 * b[13] + n2 * l * b[15]) +
          H2 * (-r2s * m1 * n1 * bp[13] + r2s * n1 * l * bp[15] + r2 * m2 * n1 * bp[9] - r2 * n1 * l * bp[11] +
                r2 * m1 * n2 * bp[5] - r2 * n2 * l * c7 - m2 * n2 * c13 + n2 * l * c15);

  // Xi1 xi_i1, Xi2 xi_i2
  const double q12 = er.d4_r1 ? r1 : r1s;
  D[4] = H1 * (m1 * m1 * b[1] - m1 * l * b[3] - r1 * m1 * m2 * b[9] + r1 * m1 * l * b[11] - m1 * l * b[2] +
               l2 * b[4] + r1 * m2 * l * b[10] - q12 * l2 * b[12] - r1 * m1 * m2 * b[5] + r1 * m2 * l * b[7] +
               r1s * m2 * m2 * b[13] - r1s * m2 * l * b[15] + r1 * m1 * l * b[6] - r1 * l2 * b[8] -
               r1s * m2 * l * b[14] + r1s * l2 * b[16]) +
         H2 * (m1 * m1 * bp[13] - m1 * l * bp[15] - r1 * m1 * m2 * bp[9] + r1 * m1 * l * bp[11] -
               m1 * l * bp[14] + l2 * bp[16] + r1 * m2 * l * bp[10] - q12 * l2 * bp[12] -
               r1 * m1 * m2 * bp[5] + r1 * m2 * l * bp[8] + r1s * m2 * m2 * bp[1] - r1s * m2 * l * bp[3] +
               r1 * m1 * l * bp[6] - r1 * l2 * bp[7] - r1s * m2 * l * bp[2] + r1s * l2 * bp[4]);
  Dp[4] = H1 * (r2s * m1 * m1 * b[1] - r2s * m1 * l * b[3] - r2 * m1 * m2 * b[9] + r2 * m1 * l * b[11] -
                r2s * m1 * l * b[2] + r2s * l2 * b[4] + r2 * m2 * l * b[10] - r2 * l2 * b[12] -
                r2 * m1 * m2 * b[5] + r2 * m2 * l * b[7] + m2 * m2 * b[13] - m2 * l * b[15] +
                r2 * m1 * l * b[6] - r2 * l2 * b[8] - m2 * l * b[14] + l2 * b[16]) +
          H2 * (r2s * m1 * m1 * bp[13] - r2s * m1 * l * bp[15] - r2 * m1 * m2 * bp[9] + r2 * m1 * l * bp[11] -
                r2s * m1 * l * bp[14] + r2s * l2 * bp[16] + r2 * m2 * l * bp[10] - r2 * l2 * bp[12] -
                r2 * m1 * m2 * bp[5] + r2 * m2 * l * bp[8] + m2 * m2 * bp[1] - m2 * l * bp[3] +
                r2 * m1 * l * bp[6] - r2 * l2 * bp[7] - m2 * l * bp[2] + l2 * bp[4]);

  // Xf2 xi_f1
  Ds[5] = H1 * (-r2 * n1 * nb1 * b[1] + r1 * r2 * n1 * nb2 * b[9] + n2 * nb1 * b[5] - r1 * n2 * nb2 * b[13]) +
          H2 * (-r2 * n1 * nb1 * bp[13] + r1 * r2 * n1 * nb2 * bp[9] + n2 * nb1 * bp[5] - r1 * n2 * nb2 * bp[1]);
  // Xf1 xi_f2
  Ds[6] = H1 * (-r2 * n1 * nb1 * b[1] + n1 * nb2 * b[9] + r1 * r2 * n2 * nb1 * b[5] - r1 * n2 * nb2 * b[13]) +
          H2 * (-r2 * n1 * nb1 * bp[13] + n1 * nb2 * bp[9] + r1 * r2 * n2 * nb1 * bp[5] - r1 * n2 * nb2 * bp[1]);
  // Xi1 xi_f2
  Ds[7] = H1 * (r2 * m1 * nb1 * b[1] - m1 * nb2 * b[9] - r2 * nb1 * l * b[2] + nb2 * l * b[10] -
                r1 * r2 * m2 * nb1 * b[5] + r1 * m2 * nb2 * b[13] + r1 * r2 * nb1 * l * b[6] - r1 * nb2 * l * b[14]) +
          H2 * (r2 * m1 * nb1 * bp[13] - m1 * nb2 * bp[9] - r2 * nb1 * l * bp[14] + nb2 * l * bp[10] -
                r1 * r2 * m2 * nb1 * bp[5] + r1 * m2 * nb2 * bp[1] + r1 * r2 * nb1 * l * bp[6] - r1 * nb2 * l * bp[2]);
  // Xi2 xi_f1
  Ds[8] = H1 * (r2 * m1 * nb1 * b[1] - r1 * r2 * m1 * nb2 * b[9] - r2 * nb1 * l * b[2] + r1 * r2 * nb2 * l * b[10] -
                m2 * nb1 * b[5] + r1 * m2 * nb2 * b[13] + nb1 * l * b[6] - r1 * nb2 * l * b[14]) +
          H2 * (r2 * m1 * nb1 * bp[13] - r1 * r2 * m1 * nb2 * bp[9] - r2 * nb1 * l * bp[14] +
                r1 * r2 * nb2 * l * bp[10] - m2 * nb1 * bp[5] + r1 * m2 * nb2 * bp[1] + nb1 * l * bp[6] -
                r1 * nb2 * l * bp[2]);
  // Xf1 xi_i2
  Ds[9] = H1 * (r2 * m1 * n1 * b[1] - r2 * n1 * l * b[3] - m2 * n1 * b[9] + n1 * l * b[11] -
                r1 * r2 * m1 * n2 * b[5] + r1 * r2 * n2 * l * b[7] + r1 * m2 * n2 * b[13] - r1 * n2 * l * b[15]) +
          H2 * (r2 * m1 * n1 * bp[13] - r2 * n1 * l * bp[15] - m2 * n1 * bp[9] + n1 * l * bp[11] -
                r1 * r2 * m1 * n2 * bp[5] + r1 * r2 * n2 * l * bp[8] + r1 * m2 * n2 * bp[1] - r1 * n2 * l * bp[3]);
  // Xf2 xi_i1
  Ds[10] = H1 * (r2 * m1 * n1 * b[1] - r2 * n1 * l * b[3] - r1 * r2 * m2 * n1 * b[9] + r1 * r2 * n1 * l * b[11] -
                 m1 * n2 * b[5] + n2 * l * b[7] + r1 * m2 * n2 * b[13] - r1 * n2 * l * b[15]) +
           H2 * (r2 * m1 * n1 * bp[13] - r2 * n1 * l * bp[15] - r1 * r2 * m2 * n1 * bp[9] +
                 r1 * r2 * n1 * l * bp[11] - m1 * n2 * bp[5] + n2 * l * bp[8] + r1 * m2 * n2 * bp[1] -
                 r1 * n2 * l * bp[3]);
  // Xi1 xi_i2
  Ds[11] = H1 * (-r2 * m1 * m1 * b[1] + r2 * m1 * l * b[3] + m2 * m1 * b[9] - m1 * l * b[11] +
                 r2 * m1 * l * b[2] - r2 * l2 * b[4] - m2 * l * b[10] + l2 * b[12] + r1 * r2 * m1 * m2 * b[5] -
                 r1 * r2 * m2 * l * b[7] - r1 * m2 * m2 * b[13] + r1 * m2 * l * b[15] - r1 * r2 * m1 * l * b[6] +
                 r1 * r2 * l2 * b[8] + r1 * m2 * l * b[14] - r1 * l2 * b[16]) +
           H2 * (-r2 * m1 * m1 * bp[13] + r2 * m1 * l * bp[15] + m2 * m1 * bp[9] - m1 * l * bp[11] +
                 r2 * m1 * l * bp[14] - r2 * l2 * bp[16] - m2 * l * bp[10] + l2 * bp[12] +
                 r1 * r2 * m1 * m2 * bp[5] - r1 * r2 * m2 * l * bp[8] - r1 * m2 * m2 * bp[1] +
                 r1 * m2 * l * bp[3] - r1 * r2 * m1 * l * bp[6] + r1 * r2 * l2 * bp[7] + r1 * m2 * l * bp[2] -
                 r1 * l2 * bp[4]);
  // Xi2 xi_i1
  const double K2 = er.d12_bracket ? H2 : H1;
  const double e15 = er.d12_bracket ? l * b[15] : b[15];
  const double f15 = er.d12_bracket ? l * bp[3] : bp[15];
  Ds[12] = H1 * (-r2 * m1 * m1 * b[1] + r2 * m1 * l * b[3] + r1 * r2 * m2 * m1 * b[9] - r1 * r2 * m1 * l * b[11] +
                 r2 * m1 * l * b[2] - r2 * l2 * b[4] - r1 * r2 * m2 * l * b[10] + r1 * r2 * l2 * b[12] +
                 m1 * m2 * b[5] - m2 * l * b[7] - r1 * m2 * m2 * b[13] + r1 * m2 * e15 - m1 * l * b[6] +
                 l2 * b[8] + r1 * m2 * l * b[14] - r1 * l2 * b[16]) +
           K2 * (-r2 * m1 * m1 * bp[13] + r2 * m1 * l * bp[15] + r1 * r2 * m2 * m1 * bp[9] -
                 r1 * r2 * m1 * l * bp[11] + r2 * m1 * l * bp[14] - r2 * l2 * bp[16] - r1 * r2 * m2 * l * bp[10] +
                 r1 * r2 * l2 * bp[12] + m1 * m2 * bp[5] - m2 * l * bp[8] - r1 * m2 * m2 * bp[1] +
                 r1 * m2 * f15 - m1 * l * bp[6] + l2 * bp[7] + r1 * m2 * l * bp[2] - r1 * l2 * bp[4]);
  return d;
}

inline PiCoeffs pi_coeffs(const SystemParams& p, const NormalModes& md, const ModeWeights& w,
                          const SFuncs& sf, const Errata& er = {}) {
  const auto& s = sf.s;
  const double lam = p.lambda;
  const double r1 = md.r1, r2 = md.r2, r1s = r1 * r1, r2s = r2 * r2;
  const double n1 = w.n1, n2 = w.n2, nb1 = w.nbar1, nb2 = w.nbar2;
  const double m1 = w.m1, m2 = w.m2, l = w.ell, l2 = l * l;
  const double q = 1.0 + r1 * r2, h = 0.5 * q, rr = r1 * r2;
  PiCoeffs c;
  auto& P = c.Pi;

  P[1] = lam * (r1 * n1 * nb1 * s[2] - r1 * h * n1 * nb2 * s[14] - r1 * h * n2 * nb1 * s[10] + r2 * r1s * n2 * nb2 * s[4]);
  P[2] = lam * (-rr * n1 * nb1 * s[2] + h * n1 * nb2 * s[14] + rr * h * n2 * nb1 * s[10] - rr * n2 * nb2 * s[4]);
  P[3] = lam * (-rr * n1 * nb1 * s[2] + rr * h * n1 * nb2 * s[14] + h * n2 * nb1 * s[10] - rr * n2 * nb2 * s[4]);
  P[4] = lam * (r1 * r2s * n1 * nb1 * s[2] - r2 * h * n1 * nb2 * s[14] - r2 * h * n2 * nb1 * s[10] + r2 * n2 * nb2 * s[4]);

  P[5] = lam * (-r1 * n1 * m1 * s[2] + r1 * n1 * l * s[5] + r1 * h * n1 * m2 * s[14] - r1 * h * n1 * l * s[12] +
                r1 * h * n2 * m1 * s[10] - r1 * h * n2 * l * s[8] - r2 * r1s * n2 * m2 * s[4] + r2 * r1s * n2 * l * s[6]);
  P[6] = lam * (rr * n1 * m1 * s[2] - rr * n1 * l * s[5] - h * n1 * m2 * s[14] + h * n1 * l * s[12] -
                rr * h * n2 * m1 * s[10] + rr * h * n2 * l * s[8] + rr * n2 * m2 * s[4] - rr * n2 * l * s[6]);
  P[7] = lam * (rr * n1 * m1 * s[2] - rr * n1 * l * s[5] - rr * h * n1 * m2 * s[14] + rr * h * n1 * l * s[12] -
                h * n2 * m1 * s[10] + h * n2 * l * s[8] + rr * n2 * m2 * s[4] - rr * n2 * l * s[6]);
  P[8] = lam * (-r1 * r2s * n1 * m1 * s[2] + r1 * r2s * n1 * l * s[5] + r2 * h * n1 * m2 * s[14] -
                r2 * h * n1 * l * s[12] + r2 * h * n2 * m1 * s[10] - r2 * h * n2 * l * s[8] - r2 * n2 * m2 * s[4] +
                r2 * n2 * l * s[6]);

  const double k9 = er.pi9_r1 ? r1 : r2;
  P[9] = lam * (-r1 * m1 * nb1 * s[2] + r1 * h * m1 * nb2 * s[14] + r1 * nb1 * l * s[5] - r1 * h * nb2 * l * s[13] +
                r1 * h * m2 * nb1 * s[10] - r2 * r1s * m2 * nb2 * s[4] - k9 * h * nb1 * l * s[9] +
                r2 * r1s * nb2 * l * s[6]);
  const double k10 = er.pi10_r2 ? r1 * r2 : r1 * r1s;
  P[10] = lam * (rr * m1 * nb1 * s[2] - h * m1 * nb2 * s[14] - rr * nb1 * l * s[5] + h * nb2 * l * s[13] -
                 rr * h * m2 * nb1 * s[10] + k10 * m2 * nb2 * s[4] + rr * h * nb1 * l * s[9] - rr * nb2 * l * s[6]);
  P[11] = lam * (rr * m1 * nb1 * s[2] - rr * h * m1 * nb2 * s[14] - rr * nb1 * l * s[5] + rr * h * nb2 * l * s[13] -
                 h * m2 * nb1 * s[10] + rr * m2 * nb2 * s[4] + h * nb1 * l * s[9] - rr * nb2 * l * s[6]);
  P[12] = lam * (-r1 * r2s * m1 * nb1 * s[2] + r2 * h * m1 * nb2 * s[14] + r1 * r2s * nb1 * l * s[5] -
                 r2 * h * nb2 * l * s[13] + r2 * h * m2 * nb1 * s[10] - r2 * m2 * nb2 * s[4] - r2 * h * nb1 * l * s[9] +
                 r2 * nb2 * l * s[6]);

  P[13] = lam * (r1 * m1 * m1 * s[2] - 2 * r1 * m1 * l * s[5] - r1 * h * m1 * m2 * s[14] + r1 * h * m1 * l * s[12] +
                 r1 * l2 * s[1] + r1 * h * m2 * l * s[13] - r1 * h * l2 * s[11] - r1 * h * m1 * m2 * s[10] +
                 r1 * h * m2 * l * s[8] + r2 * r1s * m2 * m2 * s[4] - 2 * r2 * r1s * m2 * l * s[6] +
                 r1 * h * m1 * l * s[9] - r1 * h * l2 * s[7] + r2 * r1s * l2 * s[3]);
  P[14] = lam * (-rr * m1 * m1 * s[2] + 2 * rr * m1 * l * s[5] + h * m1 * m2 * s[14] - h * m1 * l * s[12] -
                 rr * l2 * s[1] - h * m2 * l * s[13] + h * l2 * s[11] + rr * h * m1 * m2 * s[10] -
                 rr * h * m2 * l * s[8] - rr * m2 * m2 * s[4] + 2 * rr * m2 * l * s[6] - rr * h * m1 * l * s[9] +
                 rr * h * l2 * s[7] - rr * l2 * s[3]);
  P[15] = lam * (-rr * m1 * m1 * s[2] + 2 * rr * m1 * l * s[5] + rr * h * m1 * m2 * s[14] - rr * h * m1 * l * s[12] -
                 rr * l2 * s[1] - rr * h * m2 * l * s[13] + rr * h * l2 * s[11] + h * m1 * m2 * s[10] -
                 h * m2 * l * s[8] - rr * m2 * m2 * s[4] + 2 * rr * m2 * l * s[6] - h * m1 * l * s[9] +
                 h * l2 * s[7] - rr * l2 * s[3]);
  P[16] = lam * (r1 * r2s * m1 * m1 * s[2] - 2 * r1 * r2s * m1 * l * s[5] - r2 * h * m1 * m2 * s[14] +
                 r2 * h * m1 * l * s[12] + r1 * r2s * l2 * s[1] + r2 * h * m2 * l * s[13] - r2 * h * l2 * s[11] -
                 r2 * h * m1 * m2 * s[10] + r2 * h * m2 * l * s[8] + r2 * m2 * m2 * s[4] -
                 2 * r2 * m2 * l * s[6] + r2 * h * m1 * l * s[9] - r2 * h * l2 * s[7] + r2 * l2 * s[3]);
  return c;
}

// Coefficient of X_a xi_c in the classical action.
// Row order Xf1, Xf2, Xi1, Xi2; column order xi_f1, xi_f2, xi_i1, xi_i2.
using ActionMatrix = std::array<std::array<double, 4>, 4>;

inline ActionMatrix action_matrix(const DCoeffs& d, const PiCoeffs& pc) {
  const auto& P = pc.Pi;
  ActionMatrix S{};
  S[0] = {d.D[1] + P[1], d.Ds[6] + P[2], d.D[3] + P[5], d.Ds[9] + P[6]};
  S[1] = {d.Ds[5] + P[3], d.Dp[1] + P[4], d.Ds[10] + P[7], d.Dp[3] + P[8]};
  S[2] = {d.D[2] + P[9], d.Ds[7] + P[10], d.D[4] + P[13], d.Ds[11] + P[14]};
  S[3] = {d.Ds[8] + P[11], d.Dp[2] + P[12], d.Ds[12] + P[15], d.Dp[4] + P[16]};
  return S;
}

}  // namespace dqo
