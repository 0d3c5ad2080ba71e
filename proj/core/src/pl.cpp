#include "rsnum/pl.hpp"

#include <numeric>

namespace rsnum {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(Rational a, Rational b) {
  return Rational(a.num * b.num, a.den * b.den);
}
Rational operator/(Rational a, Rational b) {
  if (b.num == 0) throw std::domain_error("Rational: division by zero");
  return Rational(a.num * b.den, a.den * b.num);
}

ExponentPoint pl_interpolate(const std::vector<ExponentPoint>& points,
                             PlSymmetry symmetry) {
  std::vector<ExponentPoint> pts;
  if (points.empty()) throw std::domain_error("pl_interpolate: no input points");
  const Rational half(1, 2);
  if (symmetry == PlSymmetry::functional_equation) {
    // The reflected line e(1 - sigma) = e(sigma) + 2(2 sigma - 1) meets the
    // input line at sigma = 1/2, so the limit there is read off the
    // sigma > 1/2 branch alone; the reflection is only needed to pin the
    // slope when a single point is supplied.
    for (const auto& p : points)
      if (p.sigma.to_double() > 0.5) pts.push_back(p);
    if (pts.empty())
      throw std::domain_error(
          "pl_interpolate: functional_equation needs a point with sigma > 1/2");
    if (pts.size() == 1) {
      Rational shift = Rational(2) * (Rational(2) * pts[0].sigma - Rational(1));
      pts.push_back({Rational(1) - pts[0].sigma, pts[0].exponent + shift});
    }
  } else {
    pts = points;
  }
  if (pts.size() < 2)
    throw std::domain_error("pl_interpolate: need at least two points");
  // Line through the first two distinct-sigma points, then exact
  // collinearity check on the rest.
  size_t j = 1;
  while (j < pts.size() && pts[j].sigma == pts[0].sigma) {
    if (pts[j].exponent != pts[0].exponent)
      throw std::domain_error("pl_interpolate: inconsistent duplicate sigma");
    ++j;
  }
  if (j == pts.size())
    throw std::domain_error("pl_interpolate: all points share one sigma");
  Rational slope = (pts[j].exponent - pts[0].exponent) /
                   (pts[j].sigma - pts[0].sigma);
  for (const auto& p : pts) {
    Rational e = pts[0].exponent + slope * (p.sigma - pts[0].sigma);
    if (e != p.exponent)
      throw std::domain_error("pl_interpolate: points are not collinear");
  }
  return {half, pts[0].exponent + slope * (half - pts[0].sigma)};
}

}  // namespace rsnum
