#include "symfact/qm_radial_ho.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "symfact/qm_angular.hpp"

namespace symfact {

namespace {

// (sgn d/dr + cm/r + c1 r) f
RadialFunction firstOrder(const RadialFunction& f, double sgn, double cm, double c1) {
  RadialFunction out = Complex(sgn) * radialDerivative(f);
  if (cm != 0.0) out = out + Complex(cm) * radialMulPow(f, Rational(-1));
  if (c1 != 0.0) out = out + Complex(c1) * radialMulPow(f, Rational(1));
  return out;
}

}  // namespace

RadialFunction applyHl(const RadialFunction& f, int ell, const HoParams& p) {
  if (f.isZero()) return f;
  const RadialFunction d1 = radialDerivative(f);
  RadialFunction out = Complex(-1.0) * radialDerivative(d1);
  out = out + Complex(-2.0) * radialMulPow(d1, Rational(-1));
  out = out + Complex(static_cast<double>(ell) * (ell + 1)) * radialMulPow(f, Rational(-2));
  out = out + Complex(p.omega * p.omega / 4.0) * radialMulPow(f, Rational(2));
  return out;
}

RadialFunction applyA(const RadialFunction& f, int ell, const HoParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (f.isZero()) return f;
  return sign == 1 ? firstOrder(f, -1.0, ell - 1.0, p.omega / 2.0)
                   : firstOrder(f, +1.0, ell + 1.0, p.omega / 2.0);
}

RadialFunction applyB(const RadialFunction& f, int ell, const HoParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (f.isZero()) return f;
  return sign == 1 ? firstOrder(f, -1.0, ell - 1.0, -p.omega / 2.0)
                   : firstOrder(f, +1.0, ell + 1.0, -p.omega / 2.0);
}

RadialFunction shiftR(const RadialFunction& f, int ell, const HoParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (f.isZero()) return f;
  if (sign == 1)  // Delta^+_{r,ell+2} = b^+_{ell+2} a^+_{ell+1}
    return applyB(applyA(f, ell + 1, p, +1), ell + 2, p, +1);
  // Delta^-_{r,ell} = b^-_{ell-1} a^-_{ell}; below l = 2 the target sector
  // l - 2 < 0 does not exist and the composition leaves the regular class
  // (a 1/r-singular remainder), so the shift annihilates by convention.
  if (ell < 2) return RadialFunction::zero();
  return applyB(applyA(f, ell, p, -1), ell - 1, p, -1);
}

RadialFunction ladderR(const RadialFunction& f, int ell, const HoParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (f.isZero()) return f;
  if (sign == 1)  // Lambda^+ = b^-_{ell+1} a^+_{ell+1}
    return applyB(applyA(f, ell + 1, p, +1), ell + 1, p, -1);
  // Lambda^- = b^+_{ell} a^-_{ell}
  return applyB(applyA(f, ell, p, -1), ell, p, +1);
}

double energy(int n, const HoParams& p) {
  if (n < 0) throw std::invalid_argument("energy: n >= 0");
  return 0.5 * p.omega * (2.0 * n + 3.0);
}

SeparatedState buildState(int n, int ell, int m, const HoParams& p) {
  checkLabels(n, ell, m);
  if (((n - ell) & 1) != 0)
    throw std::invalid_argument("buildState(HO): n - l must be even");
  const int parity = ell & 1;
  // seed R_p^p = r^parity e^{-w r^2/4}
  RadialFunction radial(Rational(parity), {1.0}, 0.0, -p.omega / 4.0);
  int curN = parity, curL = parity;
  while (curN < n) {  // Lambda^+ chain at fixed l
    radial = ladderR(radial, curL, p, +1);
    curN += 2;
  }
  while (curL < ell) {  // Delta^+ chain at fixed n
    radial = shiftR(radial, curL, p, +1);
    curL += 2;
  }
  radial = Complex(1.0 / std::sqrt(radialNormSq(radial))) * radial;
  AngularPair pair = buildSphericalHarmonic(ell, m, true);
  return {std::move(radial), std::move(pair.theta), pair.mode, n, ell, m};
}

SeparatedState symmetryS(const SeparatedState& state, const HoParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (state.isZero()) return state;
  const int lTarget = state.l + 2 * sign;
  if (lTarget < std::abs(state.m) || lTarget > state.n) return SeparatedState::zeroState();
  RadialFunction radial = shiftR(state.radial, state.l, p, sign);
  AngularFunction theta = state.angular;
  if (sign == 1) {
    theta = ladderThetaL(theta, state.l + 1, +1);
    theta = ladderThetaL(theta, state.l + 2, +1);
  } else {
    theta = ladderThetaL(theta, state.l, -1);
    theta = ladderThetaL(theta, state.l - 1, -1);
  }
  if (radial.isZero() || theta.isZero()) return SeparatedState::zeroState();
  return {std::move(radial), std::move(theta), state.mode, state.n, lTarget, state.m};
}

}  // namespace symfact
