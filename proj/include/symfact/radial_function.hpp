#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "symfact/rational.hpp"

namespace symfact {

using Complex = std::complex<double>;

// Exact quasi-polynomial radial function
//
//   f(r) = r^s (c_0 + c_1 r + ... + c_d r^d) exp(alpha r + beta r^2),  r > 0
//
// closed under d/dr, multiplication by r^p and dilation r -> lambda r.
// The zero function is the empty coefficient list. Canonical form: c_0 and
// c_d nonzero (leading zeros are folded into s, trailing ones stripped).
class RadialFunction {
 public:
  RadialFunction() = default;  // zero
  RadialFunction(Rational s, std::vector<Complex> coeffs, double alpha, double beta);

  static RadialFunction zero() { return {}; }

  bool isZero() const { return coeffs_.empty(); }
  const Rational& s() const { return s_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  double evalAt(double r) const;  // numeric spot-check helper
  double maxCoeffMagnitude() const;

 private:
  Rational s_{0};
  std::vector<Complex> coeffs_;
  double alpha_{0.0};
  double beta_{0.0};
};

RadialFunction radialDerivative(const RadialFunction& f);
RadialFunction radialMulPow(const RadialFunction& f, const Rational& p);
RadialFunction radialScaleArg(const RadialFunction& f, double lambda);

// Multiply by a polynomial in r (low-to-high coefficients).
RadialFunction radialMulPoly(const RadialFunction& f, const std::vector<Complex>& poly);

RadialFunction operator*(Complex c, const RadialFunction& f);
// Requires matching exponents alpha, beta and s differing by an integer.
RadialFunction operator+(const RadialFunction& a, const RadialFunction& b);
RadialFunction operator-(const RadialFunction& a, const RadialFunction& b);

// f = ratio * g within relative tolerance, or empty. Zero f gives ratio 0.
std::optional<Complex> radialProportional(const RadialFunction& f, const RadialFunction& g,
                                          double tol);

// integral_0^inf |f(r)|^2 r^2 dr. Gamma-integral closed forms for alpha=0 or
// beta=0, adaptive quadrature otherwise. Throws std::domain_error when the
// integral diverges.
double radialNormSq(const RadialFunction& f);

// max |coefficient difference| / scale over the common grid; +inf when the
// exponents or grids are incompatible. The residual metric of the identity tests.
double maxRelDiff(const RadialFunction& a, const RadialFunction& b);

}  // namespace symfact
