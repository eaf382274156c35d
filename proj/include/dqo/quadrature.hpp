// quadrature.hpp: vector-valued adaptive Gauss-Kronrod integration on a panel partition
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dqo {

template <std::size_t N>
struct VecQuadResult {
  std::array<double, N> value{};
  double error = 0;
  int panels = 0;
  bool converged = true;
};

namespace detail {

template <std::size_t N>
struct Panel {
  double a, b;
  std::array<double, N> value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One G7/K15 panel; error is the largest component of |K15 - G7|.
template <std::size_t N, class F>
Panel<N> gk15_panel(F& f, double a, double b) {
  using K = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  static const auto& x = K::abscissa();
  static const auto& wk = K::weights();
  static const auto& wg = G::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::array<double, N> k{}, g{};
  {
    const auto f0 = f(c);
    for (std::size_t j = 0; j < N; ++j) {
      k[j] = f0[j] * wk[0];
      g[j] = f0[j] * wg[0];
    }
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    const auto fp = f(c + h * x[i]);
    const auto fm = f(c - h * x[i]);
    for (std::size_t j = 0; j < N; ++j) {
      const double s = fp[j] + fm[j];
      k[j] += s * wk[i];
      if (i % 2 == 0) g[j] += s * wg[i / 2];
    }
  }
  Panel<N> p{a, b, {}, 0.0};
  for (std::size_t j = 0; j < N; ++j) {
    p.value[j] = h * k[j];
    p.error = std::max(p.error, std::abs(h * (k[j] - g[j])));
  }
  return p;
}

}  // namespace detail

// Integrates f over the partition `breaks`, bisecting the worst panel until the summed
// error estimate is below max(abs_tol, rel_tol * max_j |I_j|).
template <std::size_t N, class F>
VecQuadResult<N> integrate_panels(F&& f, const std::vector<double>& breaks, double rel_tol,
                                  double abs_tol = 0.0, int max_panels = 20000) {
  std::priority_queue<detail::Panel<N>> heap;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i]) heap.push(detail::gk15_panel<N>(f, breaks[i], breaks[i + 1]));
  VecQuadResult<N> r;
  auto totals = [&] {
    std::array<double, N> v{};
    double e = 0;
    auto copy = heap;
    while (!copy.empty()) {
      const auto& p = copy.top();
      for (std::size_t j = 0; j < N; ++j) v[j] += p.value[j];
      e += p.error;
      copy.pop();
    }
    return std::make_pair(v, e);
  };
  auto [value, error] = totals();
  auto target = [&](const std::array<double, N>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return std::max(abs_tol, rel_tol * m);
  };
  int iterations = 0;
  while (!heap.empty() && error > target(value)) {
    if (static_cast<int>(heap.size()) >= max_panels) {
      r.converged = false;
      break;
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      r.converged = false;
      heap.push(worst);
      break;
    }
    auto left = detail::gk15_panel<N>(f, worst.a, mid);
    auto right = detail::gk15_panel<N>(f, mid, worst.b);
    for (std::size_t j = 0; j < N; ++j) value[j] += left.value[j] + right.value[j] - worst.value[j];
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    // Resum periodically to shed accumulated rounding in the running totals.
    if (++iterations % 256 == 0) std::tie(value, error) = totals();
  }
  std::tie(value, error) = totals();
  r.value = value;
  r.error = error;
  r.panels = static_cast<int>(heap.size());
  if (error > target(value)) r.converged = false;
  return r;
}

}  // namespace dqo
