#include "rsnum/principal_series.hpp"

#include <cmath>
#include <stdexcept>

#include "rsnum/quadrature.hpp"
#include "rsnum/special.hpp"

namespace rsnum {

double PrincipalSeriesVector::norm() const {
  double s = 0.0;
  for (const cplx& v : coeffs.values) s += std::norm(v);
  return std::sqrt(kPi * s);
}

bool PrincipalSeriesVector::is_spherical(double tol) const {
  for (int n = -coeffs.trunc; n <= coeffs.trunc; ++n)
    if (n != 0 && std::abs(coeffs(n)) > tol) return false;
  return true;
}

cplx PrincipalSeriesVector::compact_eval(double theta) const {
  cplx s = 0.0;
  for (int n = -coeffs.trunc; n <= coeffs.trunc; ++n)
    if (coeffs(n) != cplx(0.0))
      s += coeffs(n) * std::exp(cplx(0.0, n * theta));
  return s;
}

cplx PrincipalSeriesVector::noncompact_eval(double x) const {
  double theta = std::atan2(1.0, x);  // arccot on (0, pi)
  cplx pw = std::exp(-0.5 * cplx(1.0, lambda) * std::log1p(x * x));
  return pw * compact_eval(theta);
}

PrincipalSeriesVector spherical_vector(double lambda, Extension ext) {
  PrincipalSeriesVector v;
  v.lambda = lambda;
  v.extension = ext;
  v.coeffs = CoefficientSequence(4, Parity::even_fn);
  v.coeffs.at(0) = 1.0;
  return v;
}

GroupElement GroupElement::from_entries(double a, double b, double c,
                                        double d) {
  GroupElement g{a, b, c, d};
  double det = a * d - b * c;
  if (std::abs(std::abs(det) - 1.0) > 1e-12)
    throw std::invalid_argument("GroupElement: |det| must be 1");
  g.flip = det < 0.0;
  double b2 = g.flip ? -b : b, d2 = g.flip ? -d : d;  // right factor I_-
  g.alpha = std::hypot(a, c);
  g.theta = std::atan2(c, a);
  g.t = (std::cos(g.theta) * b2 + std::sin(g.theta) * d2) / g.alpha;
  return g;
}

GroupElement GroupElement::rotation(double theta) {
  return from_entries(std::cos(theta), -std::sin(theta), std::sin(theta),
                      std::cos(theta));
}
GroupElement GroupElement::diagonal(double alpha) {
  return from_entries(alpha, 0.0, 0.0, 1.0 / alpha);
}
GroupElement GroupElement::unipotent(double t) {
  return from_entries(1.0, t, 0.0, 1.0);
}

GroupElement GroupElement::operator*(const GroupElement& r) const {
  return from_entries(a * r.a + b * r.c, a * r.b + b * r.d,
                      c * r.a + d * r.c, c * r.b + d * r.d);
}

PrincipalSeriesVector picture_convert(const std::function<cplx(double)>& f,
                                      double lambda, int N) {
  const int G = 2048;
  PrincipalSeriesVector v;
  v.lambda = lambda;
  v.coeffs = CoefficientSequence(N, Parity::even_fn);
  std::vector<cplx> samples(G);
  for (int j = 0; j < G; ++j) {
    double theta = kPi * (j + 0.5) / G;
    double x = std::cos(theta) / std::sin(theta);
    cplx pw = std::exp(cplx(1.0, lambda) * (-std::log(std::sin(theta))));
    samples[j] = f(x) * pw;
    if (!std::isfinite(samples[j].real()) || !std::isfinite(samples[j].imag()))
      throw std::runtime_error("picture_convert: profile not integrable at the pole");
  }
  for (int n = -N; n <= N; n += 2) {
    cplx acc = 0.0;
    for (int j = 0; j < G; ++j) {
      double theta = kPi * (j + 0.5) / G;
      acc += samples[j] * std::exp(cplx(0.0, -n * theta));
    }
    v.coeffs.at(n) = acc / (double)G;
  }
  return v;
}

PrincipalSeriesVector k_rotate(const PrincipalSeriesVector& v, double theta0) {
  PrincipalSeriesVector out = v;
  for (int n = -v.coeffs.trunc; n <= v.coeffs.trunc; ++n)
    out.coeffs.at(n) = v.coeffs(n) * std::exp(cplx(0.0, n * theta0));
  return out;
}

std::function<cplx(double)> group_action_noncompact(
    const GroupElement& g, std::function<cplx(double)> f, cplx u,
    bool sgn_chi) {
  double a = g.a, b = g.b, c = g.c, d = g.d;
  return [=, f = std::move(f)](double x) -> cplx {
    double m = a - c * x;
    if (std::abs(m) < 1e-300)
      throw std::domain_error("group action: multiplier zero at x = a/c");
    cplx chi = (sgn_chi && m < 0.0) ? -1.0 : 1.0;
    cplx mult = std::exp((-1.0 - u) * std::log(std::abs(m)));
    return chi * mult * f((d * x - b) / m);
  };
}

PrincipalSeriesVector i_minus_action(const PrincipalSeriesVector& v) {
  PrincipalSeriesVector out = v;
  double sgn = (v.extension == Extension::o) ? -1.0 : 1.0;
  for (int n = -v.coeffs.trunc; n <= v.coeffs.trunc; ++n)
    out.coeffs.at(n) = sgn * v.coeffs(-n);
  return out;
}

cplx spherical_fourier_closed(cplx s, double xi) {
  if (xi == 0.0) throw std::domain_error("spherical_fourier_closed: xi = 0");
  double ax = std::abs(xi);
  return 2.0 * std::exp(s * std::log(kPi) - log_gamma(s) +
                        (s - 0.5) * std::log(ax)) *
         bessel_k(s - 0.5, kTwoPi * ax);
}

cplx whittaker_eval(const PrincipalSeriesVector& v, double k_angle, double a,
                    double t) {
  if (a == 0.0) throw std::domain_error("whittaker_eval: a = 0");
  PrincipalSeriesVector w = k_rotate(v, -k_angle);  // pi(k)^{-1} f
  double xi = (a > 0 ? 1.0 : -1.0) / (a * a);
  cplx four;
  if (w.is_spherical()) {
    four = w.coeffs(0) * spherical_fourier_closed(0.5 * cplx(1.0, v.lambda), xi);
  } else {
    QuadratureSpec spec;
    spec.abs_tol = 1e-11;
    four = real_line_fourier([&w](double x) { return w.noncompact_eval(x); },
                             xi, spec);
  }
  cplx chi = (v.extension == Extension::o && a < 0.0) ? -1.0 : 1.0;
  cplx pref = chi * std::exp(cplx(-1.0, v.lambda) * std::log(std::abs(a)));
  return pref * std::exp(cplx(0.0, kTwoPi * t)) * four;
}

}  // namespace rsnum
