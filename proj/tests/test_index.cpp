#include <cmath>

#include "doctest.h"
#include "rsnum/index.hpp"

using namespace rsnum;

TEST_SUITE_BEGIN("index");

TEST_CASE("c_sequence basic structure") {
  SpectralPoint pt;
  pt.s = {0.6, 0.0};
  auto c = c_sequence(pt, 32);
  for (int n = -31; n <= 31; n += 2) CHECK(std::abs(c(n)) == 0.0);  // odd n
  for (int n = 0; n <= 32; n += 2) {
    CHECK(std::abs(c(n).imag()) < 1e-10 * std::abs(c(n)));  // real case
    CHECK(std::abs(c(n) - c(-n)) < 1e-13);
  }
}

TEST_CASE("c_sequence regression value") {
  // frozen from the Richardson-extrapolated brute-convolution validation
  SpectralPoint pt;
  pt.s = {0.3, 0.0};
  auto c = c_sequence(pt, 64);
  CHECK(std::abs(c(0).real() - 73.5729118709931) / 73.57 < 1e-10);
}

TEST_CASE("c_sequence conjugation symmetry") {
  SpectralPoint pt, ptc;
  pt.s = {0.7, 3.0};
  pt.lambda1 = 1.0;
  pt.lambda2 = 2.0;
  ptc.s = std::conj(pt.s);
  ptc.lambda1 = -pt.lambda1;
  ptc.lambda2 = -pt.lambda2;
  auto c = c_sequence(pt, 32);
  auto cc = c_sequence(ptc, 32);
  for (int n = -32; n <= 32; n += 2)
    CHECK(std::abs(cc(n) - std::conj(c(-n))) <
          1e-10 * std::max(1.0, std::abs(c(-n))));
}

TEST_CASE("index_value equals index_bruteforce on the lattice") {
  for (double sigma : {0.55, 0.7, 0.85}) {
    for (double t : {0.0, 5.0}) {
      for (auto [l1, l2] : {std::pair{0.0, 0.0}, std::pair{1.0, 2.0}}) {
        SpectralPoint pt;
        pt.s = {sigma, t};
        pt.lambda1 = l1;
        pt.lambda2 = l2;
        auto a = index_value(pt, 64);
        auto b = index_bruteforce(pt, 32);
        CHECK(std::abs(a.value - b.value) / a.value < 1e-8);
      }
    }
  }
}

TEST_CASE("index regression at a scanned point") {
  // frozen from the validated lattice run
  SpectralPoint pt;
  pt.s = {0.75, 20.0};
  pt.lambda1 = 1.0;
  pt.lambda2 = 2.0;
  CHECK(std::abs(index_value(pt).value - 0.109205429161345) / 0.109 < 1e-9);
}

TEST_CASE("index positive and strip guarded") {
  SpectralPoint pt;
  pt.s = {0.5, 7.0};
  pt.lambda1 = -1.5;
  CHECK(index_value(pt).value > 0.0);
  pt.s = {1.2, 0.0};
  CHECK_THROWS_AS(index_value(pt), std::domain_error);
}

TEST_CASE("index_scan floor positive, degenerate flagged") {
  auto fit = index_scan(0.9, {1.0, 4.0, 16.0, 64.0}, 0.0, 0.0);
  for (auto& [t, v] : fit.grid)
    CHECK(v * std::pow(1.0 + t, 0.1) > 0.0);
  auto deg = index_scan(0.75, {0.0}, 0.0, 0.0);
  CHECK(deg.degenerate);
}

TEST_CASE("l1 exponent scan stays under the paper envelope") {
  auto fit = l1_exponent_scan(1.0, {10.0, 30.0, 100.0, 300.0});
  CHECK(fit.fitted_exponent <= 0.55);
  CHECK(fit.fitted_exponent >= 0.30);  // genuinely grows ~ sqrt
}

TEST_CASE("adaptive_trunc covers the spectral mass") {
  CHECK(adaptive_trunc(0.0) == 512);
  CHECK(adaptive_trunc(200.0) == 800);
  CHECK(adaptive_trunc(-200.0) == 800);
}

TEST_SUITE_END();
