#include "symfact/radial_function.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace symfact {

namespace {

constexpr double kStripAbs = 1e-300;
constexpr double kStripRel = 1e-13;
constexpr double kExpTol = 1e-12;

double maxMag(const std::vector<Complex>& c) {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

RadialFunction::RadialFunction(Rational s, std::vector<Complex> coeffs, double alpha, double beta)
    : s_(s), coeffs_(std::move(coeffs)), alpha_(alpha), beta_(beta) {
  const double cut = std::max(kStripAbs, kStripRel * maxMag(coeffs_));
  for (auto& v : coeffs_)
    if (std::abs(v) < cut) v = 0.0;
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0.0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
  } else if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    s_ = s_ + Rational(static_cast<std::int64_t>(lead));
  }
  if (coeffs_.empty()) {
    s_ = Rational(0);
    alpha_ = beta_ = 0.0;
  }
}

double RadialFunction::evalAt(double r) const {
  Complex p = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = p * r + *it;
  return std::real(p * std::pow(r, s_.value()) * std::exp(alpha_ * r + beta_ * r * r));
}

double RadialFunction::maxCoeffMagnitude() const { return maxMag(coeffs_); }

RadialFunction radialDerivative(const RadialFunction& f) {
  if (f.isZero()) return f;
  // f' = r^{s-1} [ s P + r P' + (alpha r + 2 beta r^2) P ] e^{...}
  const auto& c = f.coeffs();
  const double sv = f.s().value();
  std::vector<Complex> out(c.size() + 2, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k] += (sv + static_cast<double>(k)) * c[k];  // s P + r P'
    out[k + 1] += f.alpha() * c[k];
    out[k + 2] += 2.0 * f.beta() * c[k];
  }
  return {f.s() - Rational(1), std::move(out), f.alpha(), f.beta()};
}

RadialFunction radialMulPow(const RadialFunction& f, const Rational& p) {
  if (f.isZero()) return f;
  return {f.s() + p, f.coeffs(), f.alpha(), f.beta()};
}

RadialFunction radialScaleArg(const RadialFunction& f, double lambda) {
  if (lambda <= 0.0) throw std::invalid_argument("radialScaleArg: lambda must be positive");
  if (f.isZero()) return f;
  std::vector<Complex> c = f.coeffs();
  const double sv = f.s().value();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::pow(lambda, sv + static_cast<double>(k));
  return {f.s(), std::move(c), lambda * f.alpha(), lambda * lambda * f.beta()};
}

RadialFunction radialMulPoly(const RadialFunction& f, const std::vector<Complex>& poly) {
  if (f.isZero()) return f;
  const auto& c = f.coeffs();
  std::vector<Complex> out(c.size() + poly.size() - 1, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < poly.size(); ++j) out[i + j] += c[i] * poly[j];
  return {f.s(), std::move(out), f.alpha(), f.beta()};
}

RadialFunction operator*(Complex c, const RadialFunction& f) {
  if (f.isZero() || c == 0.0) return RadialFunction::zero();
  std::vector<Complex> out = f.coeffs();
  for (auto& v : out) v *= c;
  return {f.s(), std::move(out), f.alpha(), f.beta()};
}

RadialFunction operator+(const RadialFunction& a, const RadialFunction& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (std::abs(a.alpha() - b.alpha()) > kExpTol * (1.0 + std::abs(a.alpha())) ||
      std::abs(a.beta() - b.beta()) > kExpTol * (1.0 + std::abs(a.beta())))
    throw std::invalid_argument("RadialFunction +: exponent mismatch");
  std::int64_t diff = 0;
  if (!Rational::integerDifference(a.s(), b.s(), diff))
    throw std::invalid_argument("RadialFunction +: non-integer power offset");
  const RadialFunction& lo = diff >= 0 ? b : a;
  const RadialFunction& hi = diff >= 0 ? a : b;
  const std::size_t off = static_cast<std::size_t>(diff >= 0 ? diff : -diff);
  std::vector<Complex> out(std::max(lo.coeffs().size(), hi.coeffs().size() + off), 0.0);
  for (std::size_t k = 0; k < lo.coeffs().size(); ++k) out[k] += lo.coeffs()[k];
  for (std::size_t k = 0; k < hi.coeffs().size(); ++k) out[k + off] += hi.coeffs()[k];
  return {lo.s(), std::move(out), lo.alpha(), lo.beta()};
}

RadialFunction operator-(const RadialFunction& a, const RadialFunction& b) {
  return a + (Complex(-1.0) * b);
}

std::optional<Complex> radialProportional(const RadialFunction& f, const RadialFunction& g,
                                          double tol) {
  if (f.isZero()) return Complex(0.0);
  if (g.isZero()) return std::nullopt;
  if (std::abs(f.alpha() - g.alpha()) > tol * (1.0 + std::abs(g.alpha()))) return std::nullopt;
  if (std::abs(f.beta() - g.beta()) > tol * (1.0 + std::abs(g.beta()))) return std::nullopt;
  if (f.s() != g.s() || f.coeffs().size() != g.coeffs().size()) return std::nullopt;
  // Least-squares ratio, then residual check.
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    num += std::conj(g.coeffs()[k]) * f.coeffs()[k];
    den += std::norm(g.coeffs()[k]);
  }
  const Complex ratio = num / den;
  const double scale = std::max(f.maxCoeffMagnitude(), std::abs(ratio) * g.maxCoeffMagnitude());
  for (std::size_t k = 0; k < g.coeffs().size(); ++k)
    if (std::abs(f.coeffs()[k] - ratio * g.coeffs()[k]) > tol * scale) return std::nullopt;
  return ratio;
}

namespace {

// integral_0^inf r^nu e^{-c r} dr = Gamma(nu+1)/c^{nu+1}
double gammaIntegralLinear(double nu, double c) {
  return std::tgamma(nu + 1.0) / std::pow(c, nu + 1.0);
}

// integral_0^inf r^nu e^{-c r^2} dr = Gamma((nu+1)/2) / (2 c^{(nu+1)/2})
double gammaIntegralGauss(double nu, double c) {
  return std::tgamma(0.5 * (nu + 1.0)) / (2.0 * std::pow(c, 0.5 * (nu + 1.0)));
}

double adaptiveSimpson(const std::function<double(double)>& fn, double a, double b, double fa,
                       double fm, double fb, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = fn(lm), frm = fn(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps) return left + right;
  return adaptiveSimpson(fn, a, m, fa, flm, fm, 0.5 * eps, depth - 1) +
         adaptiveSimpson(fn, m, b, fm, frm, fb, 0.5 * eps, depth - 1);
}

}  // namespace

double radialNormSq(const RadialFunction& f) {
  if (f.isZero()) return 0.0;
  const bool decays = f.beta() < 0.0 || (f.beta() == 0.0 && f.alpha() < 0.0);
  if (!decays) throw std::domain_error("radialNormSq: integral diverges at infinity");
  const double nu0 = 2.0 * f.s().value() + 2.0;
  if (nu0 <= -1.0) throw std::domain_error("radialNormSq: integral diverges at the origin");

  // |P|^2 as a real polynomial
  const auto& c = f.coeffs();
  std::vector<double> q(2 * c.size() - 1, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      q[i + j] += std::real(c[i] * std::conj(c[j]));

  if (f.beta() == 0.0) {
    double sum = 0.0;
    for (std::size_t t = 0; t < q.size(); ++t)
      sum += q[t] * gammaIntegralLinear(nu0 + static_cast<double>(t), -2.0 * f.alpha());
    return sum;
  }
  if (f.alpha() == 0.0) {
    double sum = 0.0;
    for (std::size_t t = 0; t < q.size(); ++t)
      sum += q[t] * gammaIntegralGauss(nu0 + static_cast<double>(t), -2.0 * f.beta());
    return sum;
  }
  // Mixed exponents: quadrature on [0, R] with R from the Gaussian decay.
  const double R = std::sqrt(60.0 / -f.beta()) + std::abs(f.alpha()) / -f.beta();
  auto integrand = [&](double r) {
    double v = f.evalAt(r);
    // evalAt drops the imaginary part; recompute |f|^2 properly
    Complex p = 0.0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) p = p * r + *it;
    const double mag = std::abs(p) * std::pow(r, f.s().value()) *
                       std::exp(f.alpha() * r + f.beta() * r * r);
    (void)v;
    return mag * mag * r * r;
  };
  const double m = 0.5 * R;
  return adaptiveSimpson(integrand, 0.0, R, integrand(1e-12), integrand(m), integrand(R), 1e-13,
                         48);
}

double maxRelDiff(const RadialFunction& a, const RadialFunction& b) {
  if (a.isZero() && b.isZero()) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  if (a.isZero() || b.isZero()) {
    const RadialFunction& n = a.isZero() ? b : a;
    return n.maxCoeffMagnitude() > 0.0 ? inf : 0.0;
  }
  if (std::abs(a.alpha() - b.alpha()) > kExpTol * (1.0 + std::abs(a.alpha()))) return inf;
  if (std::abs(a.beta() - b.beta()) > kExpTol * (1.0 + std::abs(a.beta()))) return inf;
  std::int64_t diff = 0;
  if (!Rational::integerDifference(a.s(), b.s(), diff)) return inf;
  const RadialFunction& lo = diff >= 0 ? b : a;
  const RadialFunction& hi = diff >= 0 ? a : b;
  const std::size_t off = static_cast<std::size_t>(diff >= 0 ? diff : -diff);
  const std::size_t n = std::max(lo.coeffs().size(), hi.coeffs().size() + off);
  const double scale = std::max(a.maxCoeffMagnitude(), b.maxCoeffMagnitude());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex cl = k < lo.coeffs().size() ? lo.coeffs()[k] : Complex(0.0);
    const Complex ch = (k >= off && k - off < hi.coeffs().size()) ? hi.coeffs()[k - off]
                                                                  : Complex(0.0);
    const Complex va = (&lo == &b) ? ch : cl;
    const Complex vb = (&lo == &b) ? cl : ch;
    worst = std::max(worst, std::abs(va - vb) / scale);
  }
  return worst;
}

}  // namespace symfact
