#include "symfact/qm_angular.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symfact {

int applyLz(const AzimuthalMode& mode) { return mode.m; }

AzimuthalMode ladderPhi(const AzimuthalMode& mode, int sign) {
  assert(sign == 1 || sign == -1);
  return {mode.m + sign};
}

namespace {

// d/dtheta g as (effective sin power, bracket polynomial), before division repair
std::pair<int, std::vector<Complex>> thetaDeriv(const AngularFunction& g) {
  const auto& p = g.poly();
  const int a = g.sinPower();
  std::vector<Complex> q(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    q[k + 1] += static_cast<double>(a) * p[k];
    if (k >= 1) q[k - 1] -= static_cast<double>(k) * p[k];
    q[k + 1] += static_cast<double>(k) * p[k];
  }
  return {a - 1, std::move(q)};
}

std::vector<Complex> shiftUp(const std::vector<Complex>& p) {  // multiply by u
  std::vector<Complex> q(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k];
  return q;
}

std::vector<Complex> axpy(Complex c, const std::vector<Complex>& x, std::vector<Complex> y) {
  if (y.size() < x.size()) y.resize(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += c * x[k];
  return y;
}

}  // namespace

AngularFunction shiftTheta(const AngularFunction& g, int m, int sign) {
  assert(sign == 1 || sign == -1);
  if (g.isZero()) return g;
  auto [a1, q1] = thetaDeriv(g);
  const auto& p = g.poly();
  // d^-: sin^{a-1} [-Q1 - m u P];  d^+: sin^{a-1} [Q1 - (m-1) u P]
  const double ds = sign == -1 ? -1.0 : 1.0;
  const double cot = sign == -1 ? -static_cast<double>(m) : -static_cast<double>(m - 1);
  std::vector<Complex> bracket = axpy(ds, q1, axpy(cot, shiftUp(p), {}));
  return angularFromSinPower(a1, std::move(bracket));
}

AngularFunction ladderThetaL(const AngularFunction& g, int ell, int sign) {
  assert(sign == 1 || sign == -1);
  if (g.isZero()) return g;
  auto [a1, q1] = thetaDeriv(g);
  (void)a1;
  // ± sin * sin^{a-1} Q1 + l u sin^a P  ->  sin^a [± Q1 + l u P]
  std::vector<Complex> bracket =
      axpy(sign, q1, axpy(static_cast<double>(ell), shiftUp(g.poly()), {}));
  return angularFromSinPower(g.sinPower(), std::move(bracket));
}

AngularFunction applyCl(const AngularFunction& g, int ell) {
  if (g.isZero()) return g;
  auto [a1, q1] = thetaDeriv(g);
  AngularFunction d1 = angularFromSinPower(a1, q1);
  auto [a2, q2raw] = thetaDeriv(d1);
  // hoist the second derivative back to sin power a: sin^2 d^2 g = sin^{a} [...]
  // with a2 = d1.a - 1; sin^2 * sin^{a2} Q2 = sin^{a2+2} Q2
  AngularFunction d2 = angularFromSinPower(a2, q2raw);  // = g''
  // -sin^2 g'' - sin cos g' - l(l+1) sin^2 g, assembled term by term
  // sin^2 g'': power d2.a + 2;  sin cos g': power d1.a + 1, poly * u
  AngularFunction t1(d2.sinPower() + 2, d2.poly());
  AngularFunction t2 = d1.isZero() ? AngularFunction::zero()
                                   : AngularFunction(d1.sinPower() + 1, shiftUp(d1.poly()));
  // sin^2 g as power a+2
  AngularFunction t3(g.sinPower() + 2, g.poly());
  return (Complex(-1.0) * t1) - t2 - (Complex(static_cast<double>(ell) * (ell + 1)) * t3);
}

AngularFunction applyL2m(const AngularFunction& g, int m) {
  if (g.isZero()) return g;
  const auto& p = g.poly();
  const int a = g.sinPower();
  auto [a1, q1] = thetaDeriv(g);
  (void)a1;
  // Q2 = (a-1) u Q1 - (1-u^2) Q1'
  std::vector<Complex> q2(q1.size() + 1, 0.0);
  for (std::size_t k = 0; k < q1.size(); ++k) {
    q2[k + 1] += static_cast<double>(a - 1) * q1[k];
    if (k >= 1) q2[k - 1] -= static_cast<double>(k) * q1[k];
    q2[k + 1] += static_cast<double>(k) * q1[k];
  }
  // L^2_m g = sin^{a-2} [ -Q2 - u Q1 + m^2 P ]
  std::vector<Complex> bracket = axpy(-1.0, q2, axpy(-1.0, shiftUp(q1), {}));
  bracket = axpy(static_cast<double>(m) * static_cast<double>(m), p, std::move(bracket));
  return angularFromSinPower(a - 2, std::move(bracket));
}

AngularPair angularSymmetry(const AngularPair& p, int sign) {
  assert(sign == 1 || sign == -1);
  if (p.isZero()) return p;
  const int mTarget = p.m + sign;
  if (std::abs(mTarget) > p.l) return AngularPair::zeroPair();
  // L̂+ = d^+_{theta,m+1} l^+;  L̂- = d^-_{theta,m} l^-
  AngularFunction g = sign == 1 ? shiftTheta(p.theta, p.m + 1, +1) : shiftTheta(p.theta, p.m, -1);
  if (g.isZero()) return AngularPair::zeroPair();
  return {std::move(g), ladderPhi(p.mode, sign), p.l, mTarget};
}

AngularPair buildSphericalHarmonic(int ell, int m, bool normalize) {
  if (ell < 0 || std::abs(m) > ell)
    throw std::invalid_argument("buildSphericalHarmonic: |m| <= l required");
  const int mAbs = std::abs(m);
  AngularPair pair{AngularFunction::one(), AzimuthalMode{0}, 0, 0};
  for (int i = 1; i <= ell; ++i) {
    pair.theta = ladderThetaL(pair.theta, i, +1);
    pair.l = i;
  }
  for (int step = 0; step < mAbs; ++step) pair = angularSymmetry(pair, +1);
  if (m < 0) {  // Y_l^{-m} := conj(Y_l^m) with mode -m
    pair.theta = angularConj(pair.theta);
    pair.mode = AzimuthalMode{m};
    pair.m = m;
  }
  if (normalize && !pair.isZero()) {
    const double nrm = 2.0 * std::numbers::pi * angularNormSq(pair.theta);
    pair.theta = Complex(1.0 / std::sqrt(nrm)) * pair.theta;
  }
  return pair;
}

}  // namespace symfact
