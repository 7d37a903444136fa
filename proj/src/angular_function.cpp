#include "symfact/angular_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symfact {

namespace {

constexpr double kStripAbs = 1e-300;
constexpr double kStripRel = 1e-13;

double maxMag(const std::vector<Complex>& c) {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

// B(u) = (1 - u^2) C(u) + remainder; throws if the remainder is significant.
std::vector<Complex> divideByOneMinusU2(const std::vector<Complex>& b) {
  if (b.empty()) return {};
  const double scale = maxMag(b);
  // Divide by (-u^2 + 1): synthetic division from the top.
  std::vector<Complex> rem = b;
  std::vector<Complex> quot(b.size() >= 2 ? b.size() - 2 : 0, 0.0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= 2; --k) {
    const Complex q = -rem[static_cast<std::size_t>(k)];  // coefficient of u^{k-2} in C
    quot[static_cast<std::size_t>(k - 2)] = q;
    rem[static_cast<std::size_t>(k)] = 0.0;
    rem[static_cast<std::size_t>(k - 2)] -= q;
  }
  const double rtol = 1e-9 * std::max(scale, 1e-30);
  if ((rem.size() > 0 && std::abs(rem[0]) > rtol) ||
      (rem.size() > 1 && std::abs(rem[1]) > rtol))
    throw std::domain_error("angular: function leaves the sin^a * poly(cos) class");
  return quot;
}

}  // namespace

AngularFunction::AngularFunction(int a, std::vector<Complex> poly) : a_(a), poly_(std::move(poly)) {
  if (a_ < 0) throw std::domain_error("AngularFunction: negative sin power");
  const double cut = std::max(kStripAbs, kStripRel * maxMag(poly_));
  for (auto& v : poly_)
    if (std::abs(v) < cut) v = 0.0;
  while (!poly_.empty() && poly_.back() == 0.0) poly_.pop_back();
  if (poly_.empty()) a_ = 0;
}

double AngularFunction::evalAt(double theta) const {
  const double u = std::cos(theta);
  Complex p = 0.0;
  for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) p = p * u + *it;
  return std::real(p) * std::pow(std::sin(theta), a_);
}

double AngularFunction::maxCoeffMagnitude() const { return maxMag(poly_); }

AngularFunction angularFromSinPower(int aEff, std::vector<Complex> poly) {
  AngularFunction probe(0, poly);  // canonicalize first so noise cannot block division
  if (probe.isZero()) return AngularFunction::zero();
  poly = probe.poly();
  while (aEff < 0) {
    poly = divideByOneMinusU2(poly);
    aEff += 2;
  }
  return {aEff, std::move(poly)};
}

namespace {

// Q1 with d/dtheta g = sin^{a-1} Q1,  Q1 = a u P - (1 - u^2) P'
std::vector<Complex> derivBracket(int a, const std::vector<Complex>& p) {
  std::vector<Complex> q(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    q[k + 1] += static_cast<double>(a) * p[k];                       // a u P
    if (k >= 1) q[k - 1] -= static_cast<double>(k) * p[k];           // -P'
    q[k + 1] += static_cast<double>(k) * p[k];                       // +u^2 P'
  }
  return q;
}

}  // namespace

AngularFunction angularDerivative(const AngularFunction& g) {
  if (g.isZero()) return g;
  return angularFromSinPower(g.sinPower() - 1, derivBracket(g.sinPower(), g.poly()));
}

AngularFunction angularMulCos(const AngularFunction& g) {
  if (g.isZero()) return g;
  std::vector<Complex> p(g.poly().size() + 1, 0.0);
  for (std::size_t k = 0; k < g.poly().size(); ++k) p[k + 1] = g.poly()[k];
  return {g.sinPower(), std::move(p)};
}

AngularFunction angularMulCotan(const AngularFunction& g, Complex c) {
  if (g.isZero()) return g;
  if (g.sinPower() < 1)
    throw std::domain_error("angularMulCotan: cotangent division needs sin power >= 1");
  std::vector<Complex> p(g.poly().size() + 1, 0.0);
  for (std::size_t k = 0; k < g.poly().size(); ++k) p[k + 1] = c * g.poly()[k];
  return {g.sinPower() - 1, std::move(p)};
}

AngularFunction angularConj(const AngularFunction& g) {
  std::vector<Complex> p = g.poly();
  for (auto& v : p) v = std::conj(v);
  return {g.sinPower(), std::move(p)};
}

AngularFunction parityReduced(const AngularFunction& g) {
  if (g.isZero() || g.sinPower() < 2) return g;
  // sin^{2k} -> (1 - u^2)^k folded into the polynomial
  std::vector<Complex> p = g.poly();
  int a = g.sinPower();
  while (a >= 2) {
    std::vector<Complex> q(p.size() + 2, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k] += p[k];
      q[k + 2] -= p[k];
    }
    p = std::move(q);
    a -= 2;
  }
  return {a, std::move(p)};
}

AngularFunction operator*(Complex c, const AngularFunction& g) {
  if (g.isZero() || c == 0.0) return AngularFunction::zero();
  std::vector<Complex> p = g.poly();
  for (auto& v : p) v *= c;
  return {g.sinPower(), std::move(p)};
}

AngularFunction operator+(const AngularFunction& a, const AngularFunction& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (((a.sinPower() - b.sinPower()) & 1) != 0)
    throw std::invalid_argument("AngularFunction +: sin-power parity mismatch");
  const AngularFunction& lo = a.sinPower() <= b.sinPower() ? a : b;
  const AngularFunction& hi = a.sinPower() <= b.sinPower() ? b : a;
  // fold hi's excess sin^2 factors into its polynomial
  std::vector<Complex> hp = hi.poly();
  for (int k = hi.sinPower(); k > lo.sinPower(); k -= 2) {
    std::vector<Complex> q(hp.size() + 2, 0.0);
    for (std::size_t j = 0; j < hp.size(); ++j) {
      q[j] += hp[j];
      q[j + 2] -= hp[j];
    }
    hp = std::move(q);
  }
  std::vector<Complex> out(std::max(lo.poly().size(), hp.size()), 0.0);
  for (std::size_t k = 0; k < lo.poly().size(); ++k) out[k] += lo.poly()[k];
  for (std::size_t k = 0; k < hp.size(); ++k) out[k] += hp[k];
  return {lo.sinPower(), std::move(out)};
}

AngularFunction operator-(const AngularFunction& a, const AngularFunction& b) {
  return a + (Complex(-1.0) * b);
}

std::optional<Complex> angularProportional(const AngularFunction& g1, const AngularFunction& g2,
                                           double tol) {
  const AngularFunction f = parityReduced(g1);
  const AngularFunction g = parityReduced(g2);
  if (f.isZero()) return Complex(0.0);
  if (g.isZero()) return std::nullopt;
  if (f.sinPower() != g.sinPower() || f.poly().size() != g.poly().size()) return std::nullopt;
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < g.poly().size(); ++k) {
    num += std::conj(g.poly()[k]) * f.poly()[k];
    den += std::norm(g.poly()[k]);
  }
  const Complex ratio = num / den;
  const double scale = std::max(f.maxCoeffMagnitude(), std::abs(ratio) * g.maxCoeffMagnitude());
  for (std::size_t k = 0; k < g.poly().size(); ++k)
    if (std::abs(f.poly()[k] - ratio * g.poly()[k]) > tol * scale) return std::nullopt;
  return ratio;
}

double angularNormSq(const AngularFunction& g) {
  if (g.isZero()) return 0.0;
  // |g|^2 sin(theta) dtheta = (1-u^2)^a P(u) conj(P)(u) du on [-1, 1]
  const auto& p = g.poly();
  std::vector<double> q(2 * p.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      q[i + j] += std::real(p[i] * std::conj(p[j]));
  // multiply by (1 - u^2)^a
  for (int k = 0; k < g.sinPower(); ++k) {
    std::vector<double> t(q.size() + 2, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      t[j] += q[j];
      t[j + 2] -= q[j];
    }
    q = std::move(t);
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < q.size(); j += 2)
    sum += q[j] * 2.0 / static_cast<double>(j + 1);
  return sum;
}

double maxRelDiff(const AngularFunction& a, const AngularFunction& b) {
  const AngularFunction f = parityReduced(a);
  const AngularFunction g = parityReduced(b);
  if (f.isZero() && g.isZero()) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  if (f.isZero() || g.isZero()) return inf;
  if (f.sinPower() != g.sinPower()) return inf;
  const std::size_t n = std::max(f.poly().size(), g.poly().size());
  const double scale = std::max(f.maxCoeffMagnitude(), g.maxCoeffMagnitude());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex va = k < f.poly().size() ? f.poly()[k] : Complex(0.0);
    const Complex vb = k < g.poly().size() ? g.poly()[k] : Complex(0.0);
    worst = std::max(worst, std::abs(va - vb) / scale);
  }
  return worst;
}

}  // namespace symfact
