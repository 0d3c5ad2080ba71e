#include <cmath>

#include "doctest.h"
#include "rsnum/fit.hpp"
#include "rsnum/pl.hpp"

using namespace rsnum;

TEST_SUITE_BEGIN("pl");

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(2, 4), b(1, 3);
  CHECK(a == Rational(1, 2));
  CHECK((a + b) == Rational(5, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("4/3 - sigma interpolates to 5/6 on the critical line") {
  std::vector<ExponentPoint> pts = {
      {Rational(3, 4), Rational(4, 3) - Rational(3, 4)},
      {Rational(7, 8), Rational(4, 3) - Rational(7, 8)}};
  auto r = pl_interpolate(pts, PlSymmetry::functional_equation);
  CHECK(r.sigma == Rational(1, 2));
  CHECK(r.exponent == Rational(5, 6));
}

TEST_CASE("11/8 - sigma interpolates to 7/8") {
  std::vector<ExponentPoint> pts = {
      {Rational(3, 4), Rational(11, 8) - Rational(3, 4)},
      {Rational(1, 1), Rational(11, 8) - Rational(1, 1)}};
  auto r = pl_interpolate(pts, PlSymmetry::functional_equation);
  CHECK(r.exponent == Rational(7, 8));
}

TEST_CASE("degree-4 convexity reference gives exponent 1") {
  // e(0) = 2, e(1) = 0 straight chord, no symmetry applied
  std::vector<ExponentPoint> pts = {{Rational(0), Rational(2)},
                                    {Rational(1), Rational(0)}};
  auto r = pl_interpolate(pts, PlSymmetry::none);
  CHECK(r.exponent == Rational(1));
}

TEST_CASE("single point plus functional equation pins the chord") {
  // one point only pins the degree-4 reflection chord of slope -2:
  // e(1/2) = e(3/4) + 1/2 = 13/12
  std::vector<ExponentPoint> pts = {
      {Rational(3, 4), Rational(4, 3) - Rational(3, 4)}};
  auto r = pl_interpolate(pts, PlSymmetry::functional_equation);
  CHECK(r.exponent == Rational(13, 12));
}

TEST_CASE("non-collinear inputs throw") {
  std::vector<ExponentPoint> pts = {{Rational(3, 4), Rational(1, 2)},
                                    {Rational(7, 8), Rational(1, 2)},
                                    {Rational(1), Rational(0)}};
  CHECK_THROWS(pl_interpolate(pts, PlSymmetry::none));
}

TEST_CASE("functional equation mode needs a point right of 1/2") {
  std::vector<ExponentPoint> pts = {{Rational(1, 4), Rational(1)}};
  CHECK_THROWS(pl_interpolate(pts, PlSymmetry::functional_equation));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("fit");

TEST_CASE("fit recovers an exact power law") {
  std::vector<std::pair<double, double>> grid;
  for (double t : {1.0, 3.0, 10.0, 30.0, 100.0})
    grid.emplace_back(t, 2.5 * std::pow(1.0 + t, -0.75));
  auto f = fit_log_power(grid);
  CHECK(f.fitted_exponent == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(f.fitted_constant == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(f.residual < 1e-12);
  CHECK_FALSE(f.degenerate);
}

TEST_CASE("degenerate grids are flagged") {
  CHECK(fit_log_power({{5.0, 1.0}}).degenerate);
  CHECK(fit_log_power({}).degenerate);
}

TEST_SUITE_END();
