#include <cmath>

#include "doctest.h"
#include "rsnum/principal_series.hpp"

using namespace rsnum;

TEST_SUITE_BEGIN("principal_series");

TEST_CASE("spherical vector is the delta at 0 with norm sqrt(pi)") {
  auto v = spherical_vector(1.5);
  CHECK(v.is_spherical());
  CHECK(v.norm() == doctest::Approx(std::sqrt(kPi)));
  CHECK(std::abs(v.compact_eval(0.7) - cplx(1.0)) < 1e-14);
}

TEST_CASE("noncompact realization of the spherical vector") {
  auto v = spherical_vector(2.0);
  double x = 0.8;
  cplx expect = std::pow(cplx(1.0 + x * x), cplx(-0.5, -1.0));
  CHECK(std::abs(v.noncompact_eval(x) - expect) < 1e-12);
}

TEST_CASE("picture_convert round-trips the spherical vector") {
  double lam = 1.2;
  auto f = [lam](double x) {
    return std::pow(cplx(1.0 + x * x), -cplx(1.0, lam) / 2.0);
  };
  auto v = picture_convert(f, lam, 8);
  CHECK(std::abs(v.coeffs(0) - cplx(1.0)) < 1e-9);
  for (int n = 2; n <= 8; n += 2) CHECK(std::abs(v.coeffs(n)) < 1e-9);
}

TEST_CASE("k_rotate phases the coefficients") {
  PrincipalSeriesVector v;
  v.lambda = 0.5;
  v.coeffs = CoefficientSequence(4, Parity::none);
  v.coeffs.at(2) = 1.0;
  v.coeffs.at(-2) = 3.0;
  auto r = k_rotate(v, 0.3);
  CHECK(std::abs(r.coeffs(2) - std::exp(cplx(0.0, 0.6))) < 1e-14);
  CHECK(std::abs(r.coeffs(-2) - 3.0 * std::exp(cplx(0.0, -0.6))) < 1e-14);
  CHECK(r.norm() == doctest::Approx(v.norm()));
}

TEST_CASE("group element iwasawa data") {
  auto g = GroupElement::rotation(0.4) * GroupElement::diagonal(2.0) *
           GroupElement::unipotent(0.7);
  CHECK(g.theta == doctest::Approx(0.4));
  CHECK(g.alpha == doctest::Approx(2.0));
  CHECK(g.t == doctest::Approx(0.7));
  CHECK_FALSE(g.flip);
  // determinant of the assembled matrix
  CHECK(g.a * g.d - g.b * g.c == doctest::Approx(1.0));
}

TEST_CASE("group action multiplier zero throws") {
  auto g = GroupElement::from_entries(1.0, 0.0, 2.0, 1.0);
  auto act = group_action_noncompact(
      g, [](double) { return cplx(1.0); }, cplx(0.5, 0.0));
  CHECK_THROWS_AS(act(0.5), std::domain_error);  // x = a/c = 1/2
  CHECK(std::isfinite(std::abs(act(0.3))));
}

TEST_CASE("spherical fourier closed form vs whittaker_eval") {
  // Wh on a = 1, t = 0, k = 0 reduces to F[f](1) for the spherical vector.
  double lam = 1.0;
  auto v = spherical_vector(lam);
  cplx wh = whittaker_eval(v, 0.0, 1.0, 0.0);
  cplx closed = spherical_fourier_closed(cplx(0.5, lam / 2.0), 1.0);
  CHECK(std::abs(wh - closed) < 1e-10);
}

TEST_CASE("whittaker unipotent equivariance") {
  auto v = spherical_vector(0.8);
  cplx base = whittaker_eval(v, 0.0, 1.0, 0.0);
  cplx shifted = whittaker_eval(v, 0.0, 1.0, 0.25);
  CHECK(std::abs(shifted - base * std::exp(cplx(0.0, kTwoPi * 0.25))) < 1e-10);
}

TEST_CASE("i_minus flips coefficient index") {
  PrincipalSeriesVector v;
  v.lambda = 0.0;
  v.coeffs = CoefficientSequence(4, Parity::none);
  v.coeffs.at(2) = cplx(1.0, 2.0);
  auto w = i_minus_action(v);
  CHECK(std::abs(w.coeffs(-2) - cplx(1.0, 2.0)) < 1e-14);
  CHECK(std::abs(w.coeffs(2)) == 0.0);
}

TEST_SUITE_END();
