#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace symfact {

// Exact rational exponent for the leading power r^s. Operators only ever
// change s by integers, but half-integer seeds must survive 1/r chains
// without rounding.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  // s1 - s2 as an exact integer, if it is one.
  static bool integerDifference(const Rational& a, const Rational& b, std::int64_t& out) {
    const Rational d = a - b;
    if (d.den != 1) return false;
    out = d.num;
    return true;
  }
};

}  // namespace symfact
