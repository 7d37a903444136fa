#include "symfact/qm_radial_kc.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "symfact/qm_angular.hpp"

namespace symfact {

namespace {

RadialFunction firstOrder(const RadialFunction& f, double sgn, double cm, double c0) {
  RadialFunction out = Complex(sgn) * radialDerivative(f);
  if (cm != 0.0) out = out + Complex(cm) * radialMulPow(f, Rational(-1));
  if (c0 != 0.0) out = out + Complex(c0) * f;
  return out;
}

}  // namespace

RadialFunction applyHl(const RadialFunction& f, int ell, const KcParams& p) {
  if (f.isZero()) return f;
  const RadialFunction d1 = radialDerivative(f);
  RadialFunction out = Complex(-1.0) * radialDerivative(d1);
  out = out + Complex(-2.0) * radialMulPow(d1, Rational(-1));
  out = out + Complex(static_cast<double>(ell) * (ell + 1)) * radialMulPow(f, Rational(-2));
  out = out + Complex(-p.k) * radialMulPow(f, Rational(-1));
  return out;
}

RadialFunction shiftR(const RadialFunction& f, int ell, const KcParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (f.isZero()) return f;
  if (sign == 1)
    return firstOrder(f, -1.0, static_cast<double>(ell), -p.k / (2.0 * (ell + 1)));
  if (ell < 1) throw std::invalid_argument("shiftR(KC): d^- needs ell >= 1");
  return firstOrder(f, +1.0, static_cast<double>(ell) + 1.0, -p.k / (2.0 * ell));
}

RadialFunction applyHhat(const RadialFunction& f, int n, const KcParams& p) {
  if (f.isZero()) return f;
  const double en = energy(n, p);
  const RadialFunction d1 = radialDerivative(f);
  RadialFunction out = Complex(-1.0) * radialMulPow(radialDerivative(d1), Rational(2));
  out = out + Complex(-2.0) * radialMulPow(d1, Rational(1));
  out = out + Complex(-en) * radialMulPow(f, Rational(2));
  out = out + Complex(-p.k) * radialMulPow(f, Rational(1));
  return out;
}

RadialFunction applyDilation(const RadialFunction& f, int n, bool inverse) {
  if (n < 1) throw std::invalid_argument("applyDilation: n >= 1");
  const double lambda = inverse ? static_cast<double>(n) / (n + 1)
                                : static_cast<double>(n + 1) / n;
  return radialScaleArg(f, lambda);
}

RadialFunction ladderR(const RadialFunction& f, int n, const KcParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (f.isZero()) return f;
  if (n < 1)
    throw std::invalid_argument("ladderR(KC): ladder index n >= 1 (Lambda^-_0 is below ground)");
  const double c = p.k / (2.0 * (n + 1));
  if (sign == 1) {
    // (-r d/dr + c r - (n+1)) D_n^{-1}
    const RadialFunction g = applyDilation(f, n, true);
    RadialFunction out = Complex(-1.0) * radialMulPow(radialDerivative(g), Rational(1));
    out = out + Complex(c) * radialMulPow(g, Rational(1));
    out = out + Complex(-(static_cast<double>(n) + 1.0)) * g;
    return out;
  }
  // D_n (r d/dr + c r - n)
  RadialFunction out = radialMulPow(radialDerivative(f), Rational(1));
  out = out + Complex(c) * radialMulPow(f, Rational(1));
  out = out + Complex(-static_cast<double>(n)) * f;
  return applyDilation(out, n, false);
}

double energy(int n, const KcParams& p) {
  if (n < 0) throw std::invalid_argument("energy: n >= 0");
  const double np1 = n + 1.0;
  return -p.k * p.k / (4.0 * np1 * np1);
}

SeparatedState buildState(int n, int ell, int m, const KcParams& p) {
  checkLabels(n, ell, m);
  // ground psi_0^0 = e^{-k r / 2}
  RadialFunction radial(Rational(0), {1.0}, -p.k / 2.0, 0.0);
  for (int i = 1; i <= n; ++i) radial = ladderR(radial, i, p, +1);
  for (int l = 0; l < ell; ++l) radial = shiftR(radial, l, p, +1);
  radial = Complex(1.0 / std::sqrt(radialNormSq(radial))) * radial;
  AngularPair pair = buildSphericalHarmonic(ell, m, true);
  return {std::move(radial), std::move(pair.theta), pair.mode, n, ell, m};
}

SeparatedState symmetryS(const SeparatedState& state, const KcParams& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (state.isZero()) return state;
  const int lTarget = state.l + sign;
  if (lTarget < std::abs(state.m) || lTarget > state.n) return SeparatedState::zeroState();
  RadialFunction radial = shiftR(state.radial, state.l, p, sign);
  AngularFunction theta = sign == 1 ? ladderThetaL(state.angular, state.l + 1, +1)
                                    : ladderThetaL(state.angular, state.l, -1);
  if (radial.isZero() || theta.isZero()) return SeparatedState::zeroState();
  return {std::move(radial), std::move(theta), state.mode, state.n, lTarget, state.m};
}

}  // namespace symfact
