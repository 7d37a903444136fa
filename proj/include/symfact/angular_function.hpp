#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace symfact {

using Complex = std::complex<double>;

// Polar-angle function in the closed class
//
//   g(theta) = sin^a(theta) * (q_0 + q_1 u + ... + q_d u^d),  u = cos(theta)
//
// with a >= 0. The stored sin-power is kept as produced by the operators
// (applications like m/tan(theta) need the natural power); parity reduction
// via sin^2 = 1 - u^2 is applied only when comparing.
class AngularFunction {
 public:
  AngularFunction() = default;  // zero
  AngularFunction(int a, std::vector<Complex> poly);

  static AngularFunction zero() { return {}; }
  static AngularFunction one() { return {0, {1.0}}; }

  bool isZero() const { return poly_.empty(); }
  int sinPower() const { return a_; }
  const std::vector<Complex>& poly() const { return poly_; }
  int polyDegree() const { return static_cast<int>(poly_.size()) - 1; }

  double evalAt(double theta) const;
  double maxCoeffMagnitude() const;

 private:
  int a_{0};
  std::vector<Complex> poly_;
};

// Builds sin^aEff * B(u); negative aEff is repaired by exact division of B by
// (1 - u^2). Throws std::domain_error when the division leaves the class.
AngularFunction angularFromSinPower(int aEff, std::vector<Complex> poly);

AngularFunction angularDerivative(const AngularFunction& g);
AngularFunction angularMulCos(const AngularFunction& g);
// c * (cos/sin) * g; requires g.sinPower() >= 1.
AngularFunction angularMulCotan(const AngularFunction& g, Complex c);
AngularFunction angularConj(const AngularFunction& g);
// a reduced mod 2 via sin^2 = 1 - u^2.
AngularFunction parityReduced(const AngularFunction& g);

AngularFunction operator*(Complex c, const AngularFunction& g);
AngularFunction operator+(const AngularFunction& a, const AngularFunction& b);
AngularFunction operator-(const AngularFunction& a, const AngularFunction& b);

// Compared in canonical parity form.
std::optional<Complex> angularProportional(const AngularFunction& g1, const AngularFunction& g2,
                                           double tol);

// integral_0^pi |g|^2 sin(theta) dtheta, exact in the representation.
double angularNormSq(const AngularFunction& g);

double maxRelDiff(const AngularFunction& a, const AngularFunction& b);

}  // namespace symfact
