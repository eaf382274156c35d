// errata.hpp: switches selecting printed or corrected forms of individual formulas
#pragma once

#include <array>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace dqo {

// Each flag true selects the corrected form. Errata{} is the frozen default.
struct Errata {
  bool f14 = true;          // f14 = cos(O2 tau) sin(O2 s) instead of a copy of f16
  bool d2_b13 = true;       // D2, D'2: M2 line m2 nbar2 term uses b'1
  bool d3_mline = true;     // D3, D'3: M2 line uses b'1, b'3 and b'8
  bool d4_r1 = true;        // D4: l^2 b12 and l^2 b'12 carry r1, not r1^2
  bool d12_bracket = true;  // D12+D'12: (M2/2) prefix and missing l factors
  bool pi9_r1 = true;       // Pi9: s9 term carries r1
  bool pi10_r2 = true;      // Pi10: s4 term carries r1 r2
  bool noise_r1r2 = true;   // noise: r1^2 r2^2 in place of r1^2 r1^2
  bool e4_factor2 = true;   // noise E4: factor 2 on the second diagonal term
  bool xi_chain = true;     // corrected xi-sector chain (g', g'', Z4, Z5)
  bool beta12 = true;       // beta12 = 4 g12

  static Errata printed() {
    Errata e;
    for (auto& f : e.flags()) *f.second = false;
    return e;
  }

  using Entry = std::pair<std::string_view, bool*>;
  std::array<Entry, 11> flags() {
    return {{{"f14", &f14},
             {"d2_b13", &d2_b13},
             {"d3_mline", &d3_mline},
             {"d4_r1", &d4_r1},
             {"d12_bracket", &d12_bracket},
             {"pi9_r1", &pi9_r1},
             {"pi10_r2", &pi10_r2},
             {"noise_r1r2", &noise_r1r2},
             {"e4_factor2", &e4_factor2},
             {"xi_chain", &xi_chain},
             {"beta12", &beta12}}};
  }

  // Comma separated tokens applied left to right on top of the default:
  // "printed" clears all, "corrected" sets all, "name" sets one, "-name" clears one.
  static Errata parse(const std::string& list) {
    Errata e;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (tok == "printed") {
        e = printed();
        continue;
      }
      if (tok == "corrected" || tok == "default") {
        e = Errata{};
        continue;
      }
      bool value = true;
      if (tok[0] == '-') {
        value = false;
        tok.erase(0, 1);
      }
      bool found = false;
      for (auto& f : e.flags()) {
        if (f.first == tok) {
          *f.second = value;
          found = true;
        }
      }
      if (!found) throw InvalidParams("unknown errata switch: " + tok);
    }
    return e;
  }

  std::string str() const {
    std::string out;
    for (auto& f : const_cast<Errata*>(this)->flags()) {
      if (!out.empty()) out += ',';
      if (!*f.second) out += '-';
      out += f.first;
    }
    return out;
  }
};

}  // namespace dqo
