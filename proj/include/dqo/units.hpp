// units.hpp: physical constants and the CGS <-> internal unit map
#pragma once

#include <cmath>

namespace dqo {

namespace cgs {
inline constexpr double hbar = 1.054571817e-27;  // erg s
inline constexpr double k_B = 1.380649e-16;      // erg / K
}  // namespace cgs

// Internal units: hbar = 1, M1 = 1, w01 = 1.
struct Scales {
  double time = 1.0;    // s per internal time unit (1/w01)
  double mass = 1.0;    // g
  double length = 1.0;  // cm, sqrt(hbar / M1 w01)
  double freq = 1.0;    // rad/s (w01)
  double temp = 1.0;    // K per unit of theta (hbar w01 / k_B)

  static Scales from(double M1, double w01) {
    Scales s;
    s.freq = w01;
    s.time = 1.0 / w01;
    s.mass = M1;
    s.length = std::sqrt(cgs::hbar / (M1 * w01));
    s.temp = cgs::hbar * w01 / cgs::k_B;
    return s;
  }

  double area() const { return length * length; }
  double stiffness() const { return mass * freq * freq; }
};

}  // namespace dqo
