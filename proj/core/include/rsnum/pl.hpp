#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rsnum {

/// Exact rational arithmetic for the Phragmen-Lindelof exponent calculus.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);

  double to_double() const { return double(num) / double(den); }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
};

struct ExponentPoint {
  Rational sigma;
  Rational exponent;
};

enum class PlSymmetry { none, functional_equation };

/// Phragmen-Lindelof interpolation to the critical line.  Points are
/// (sigma, t-exponent) pairs of a degree-4 L-function bound.  With
/// functional_equation, each point sigma > 1/2 also yields the reflected
/// point (1 - sigma, e + 2(2 sigma - 1)); a single input point then
/// determines the slope -2 chord through sigma = 1/2.  All arithmetic is
/// exact; non-collinear inputs throw.
ExponentPoint pl_interpolate(const std::vector<ExponentPoint>& points,
                             PlSymmetry symmetry);

}  // namespace rsnum
