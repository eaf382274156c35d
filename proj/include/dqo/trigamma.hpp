// trigamma.hpp: trigamma function for complex arguments with positive real part
#pragma once

#include <complex>

namespace dqo {

inline std::complex<double> trigamma(std::complex<double> z) {
  std::complex<double> acc = 0.0;
  while (std::abs(z) < 12.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  const std::complex<double> w = 1.0 / z, w2 = w * w;
  // 1/z + 1/2z^2 + sum B_2k / z^(2k+1)
  const std::complex<double> series =
      1.0 + w2 * (1.0 / 6.0 + w2 * (-1.0 / 30.0 + w2 * (1.0 / 42.0 + w2 * (-1.0 / 30.0 +
      w2 * (5.0 / 66.0 + w2 * (-691.0 / 2730.0 + w2 * (7.0 / 6.0)))))));
  return acc + w * series + 0.5 * w2;
}

}  // namespace dqo
