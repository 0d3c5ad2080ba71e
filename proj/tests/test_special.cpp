#include <cmath>
#include <random>

#include "doctest.h"
#include "rsnum/special.hpp"

using namespace rsnum;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE_BEGIN("special");

TEST_CASE("gamma functional equation on a random grid") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.2, 8.0), im(-30.0, 30.0);
  for (int i = 0; i < 200; ++i) {
    cplx z(re(rng), im(rng));
    CHECK(rel(gamma_fn(z + 1.0), z * gamma_fn(z)) < 1e-11);
  }
}

TEST_CASE("gamma duplication formula") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> re(0.2, 5.0), im(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    cplx z(re(rng), im(rng));
    cplx lhs = log_gamma(z) + log_gamma(z + 0.5);
    cplx rhs = log_gamma(2.0 * z) + 0.5 * std::log(kPi) -
               (2.0 * z - 1.0) * std::log(2.0);
    CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-11);
  }
}

TEST_CASE("gamma reflection and poles") {
  CHECK(rel(gamma_fn(0.5), cplx(std::sqrt(kPi))) < 1e-13);
  CHECK(rel(gamma_fn(5.0), cplx(24.0)) < 1e-13);
  CHECK_THROWS_AS(log_gamma(cplx(0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(log_gamma(cplx(-3.0, 0.0)), std::domain_error);
  CHECK(std::abs(recip_gamma(cplx(-2.0, 0.0))) == 0.0);
}

TEST_CASE("K_{1/2} closed form") {
  // K_{1/2}(y) = sqrt(pi/(2y)) e^{-y}
  for (double y : {0.3, 1.0, 2.5, 10.0}) {
    cplx k = bessel_k(cplx(0.5, 0.0), y);
    double exact = std::sqrt(kPi / (2.0 * y)) * std::exp(-y);
    CHECK(rel(k, cplx(exact)) < 1e-10);
  }
}

TEST_CASE("bessel_k symmetry and scaled variant") {
  cplx nu(0.0, 8.0);
  double y = 2.0;
  CHECK(rel(bessel_k(nu, y), bessel_k(-nu, y)) < 1e-10);
  // scaled = e^{pi |Im nu|/2} K; check consistency where both are finite
  cplx s = bessel_k_scaled(nu, y);
  CHECK(rel(s, bessel_k(nu, y) * std::exp(kPi * 4.0)) < 1e-9);
}

TEST_CASE("bessel_k_lifted matches recurrence seed") {
  // K_{nu+1}(y) = K_{nu-1}(y) + (2 nu / y) K_nu(y)
  cplx nu(0.3, 2.0);
  double y = 6.0;
  cplx expect = bessel_k(nu - 1.0, y) + (2.0 * nu / y) * bessel_k(nu, y);
  CHECK(rel(bessel_k_lifted(nu + 1.0, y), expect) < 1e-9);
}

TEST_CASE("zeta special values") {
  CHECK(rel(zeta(2.0), cplx(kPi * kPi / 6.0)) < 1e-10);
  CHECK(rel(zeta(4.0), cplx(std::pow(kPi, 4) / 90.0)) < 1e-10);
  CHECK(rel(zeta(0.5), cplx(-1.4603545088095868)) < 1e-9);
  // zeta(1/2 + 14.134725...i) is near the first zero: magnitude small
  CHECK(std::abs(zeta(cplx(0.5, 14.134725141734693))) < 1e-6);
}

TEST_CASE("xi functional equation xi(s) = xi(1-s)") {
  for (cplx s : {cplx(0.3, 2.0), cplx(0.8, -5.0), cplx(0.5, 11.0)}) {
    cplx a = log_xi(s), b = log_xi(1.0 - s);
    CHECK(std::abs(std::exp(a - b) - 1.0) < 1e-9);
  }
}

TEST_CASE("power_tail_sum vs direct summation") {
  cplx g(3.0, 2.0);  // fast decay so the direct reference converges
  int J = 40;
  cplx direct = 0.0;
  for (int j = 400000; j > J; --j)
    direct += std::exp(-g * std::log(double(j)));
  CHECK(std::abs(power_tail_sum(g, J) - direct) < 1e-10);
}

TEST_CASE("log_sin_pi stays finite for large imaginary part") {
  cplx z(0.25, 200.0);
  cplx v = log_sin_pi(z);
  CHECK(std::isfinite(v.real()));
  // |sin(pi z)| ~ e^{pi |Im z|}/2
  CHECK(v.real() == doctest::Approx(kPi * 200.0 - std::log(2.0)).epsilon(1e-10));
}

TEST_SUITE_END();
