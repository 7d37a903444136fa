#pragma once

#include "symfact/angular_function.hpp"
#include "symfact/radial_function.hpp"

namespace symfact {

// phi_m(phi) = e^{i m phi}
struct AzimuthalMode {
  int m{0};
};

// Separated eigenfunction R_n^l(r) P_l^m(theta) e^{i m phi} with its labels.
// The zero state (annihilation result) carries a zero radial part; every
// operator maps it to itself.
struct SeparatedState {
  RadialFunction radial;
  AngularFunction angular;
  AzimuthalMode mode;
  int n{0};
  int l{0};
  int m{0};

  bool isZero() const { return radial.isZero(); }
  static SeparatedState zeroState() { return {}; }
};

inline void checkLabels(int n, int l, int m) {
  if (l < 0 || std::abs(m) > l || n < l)
    throw std::invalid_argument("SeparatedState: labels must satisfy n >= l >= |m| >= 0");
}

}  // namespace symfact
