// Acceptance gate: one criterion per invocation (argv[1] = 1..10), one
// pass/fail line each.  Criteria follow the project plan; known-red items
// are computed faithfully and reported as FAIL (see the decisions ledger).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "rsnum/automorphic.hpp"
#include "rsnum/circle.hpp"
#include "rsnum/eisenstein.hpp"
#include "rsnum/index.hpp"
#include "rsnum/pl.hpp"
#include "rsnum/special.hpp"
#include "rsnum/trilinear.hpp"

using namespace rsnum;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

bool criterion_1() {
  // Special-function substrate.
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> re(0.2, 6.0), im(-40.0, 40.0);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    cplx z(re(rng), im(rng));
    worst = std::max(worst, rel(gamma_fn(z + 1.0), z * gamma_fn(z)));
    cplx dup = log_gamma(z) + log_gamma(z + 0.5) - log_gamma(2.0 * z) -
               0.5 * std::log(kPi) + (2.0 * z - 1.0) * std::log(2.0);
    worst = std::max(worst, std::abs(std::exp(dup) - 1.0));
  }
  double kerr = 0.0;
  for (double y : {0.5, 1.0, 3.0, 8.0})
    kerr = std::max(kerr, rel(bessel_k(cplx(0.5, 0.0), y),
                              cplx(std::sqrt(kPi / (2.0 * y)) * std::exp(-y))));
  double zerr = rel(zeta(2.0), cplx(kPi * kPi / 6.0));
  std::printf("  gamma identities %.2e, K_{1/2} %.2e, zeta(2) %.2e\n", worst,
              kerr, zerr);
  return worst <= 1e-11 && kerr <= 1e-10 && zerr <= 1e-10;
}

bool criterion_2() {
  // Coefficient formula vs quadrature oracle over the strip.
  double worst = 0.0;
  for (double wr : {-0.9, -0.5, 0.05, 0.75, 1.5, 2.0}) {
    for (double wi : {0.0, 3.0, -12.0, 50.0}) {
      cplx w(wr, wi);
      auto c = cos_power_coeffs(w, 32);
      PowerKernelSpec k{w, KernelFn::cos_power};
      for (int n : {0, 2, 8, 16, 32})
        worst = std::max(worst, std::abs(c(n) - coeff_quadrature_oracle(k, n)));
    }
  }
  auto c1 = cos_power_coeffs(cplx(1.0, 0.0), 8);
  double closed = std::max(std::abs(c1(0).real() - 2.0 / kPi),
                           std::abs(c1(2).real() - 2.0 / (3.0 * kPi)));
  std::printf("  oracle max abs err %.2e, closed-form err %.2e\n", worst,
              closed);
  return worst <= 1e-8 && closed <= 1e-12;
}

bool criterion_3() {
  std::vector<double> grid;
  for (double u = 10.0; u <= 1000.0; u *= 1.93) grid.push_back(u);
  auto fit = l1_exponent_scan(1.0, grid);
  std::printf("  l1 exponent %.4f (bound 0.55)\n", fit.fitted_exponent);
  return fit.fitted_exponent <= 0.55;
}

bool criterion_4() {
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> lam(-3.0, 3.0), cf(-1.0, 1.0);
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  CoefficientSequence phi(0, Parity::even_fn);
  phi.at(0) = 1.0;
  double worst = 0.0, worst_rot = 0.0;
  const double sigmas[3] = {0.55, 0.75, 0.9};
  for (int i = 0; i < 20; ++i) {
    SpectralPoint pt;
    pt.s = {sigmas[i % 3], 0.0};
    pt.lambda1 = lam(rng);
    pt.lambda2 = lam(rng);
    PrincipalSeriesVector f1, f2;
    f1.lambda = pt.lambda1;
    f2.lambda = pt.lambda2;
    f1.coeffs = CoefficientSequence(4, Parity::none);
    f2.coeffs = CoefficientSequence(4, Parity::none);
    for (int m = -4; m <= 4; m += 2) {
      f1.coeffs.at(m) = {cf(rng), cf(rng)};
      f2.coeffs.at(m) = {cf(rng), cf(rng)};
    }
    auto a = tr_rs_fourier(f1, f2, pt);
    auto b = tr_rs_quadrature(f1, f2, phi, pt, spec);
    worst = std::max(worst, rel(a.value, b.value));
    cplx rot = tr_rs_fourier(k_rotate(f1, 1.1), k_rotate(f2, 1.1), pt).value;
    worst_rot =
        std::max(worst_rot, std::abs(std::abs(rot) - std::abs(a.value)));
  }
  std::printf("  two-route max rel %.2e, K-rotation %.2e\n", worst, worst_rot);
  return worst <= 1e-5 && worst_rot <= 1e-10;
}

bool criterion_5() {
  double worst = 0.0, worst_ext = 0.0;
  for (double sigma : {0.55, 0.7, 0.85}) {
    for (double t : {0.0, 5.0, 20.0}) {
      for (auto [l1, l2] : {std::pair{0.0, 0.0}, std::pair{1.0, 2.0}}) {
        SpectralPoint pt;
        pt.s = {sigma, t};
        pt.lambda1 = l1;
        pt.lambda2 = l2;
        auto a = index_value(pt);
        auto b = index_bruteforce(pt, 64);
        worst = std::max(worst, std::abs(a.value - b.value) / a.value);
        // delta-sequence extremizer: unit mode pair at the argmax
        PrincipalSeriesVector f1, f2;
        f1.lambda = l1;
        f2.lambda = l2;
        int m = std::abs(a.argmax_mode);
        f1.coeffs = CoefficientSequence(m + 2, Parity::none);
        f2.coeffs = CoefficientSequence(m + 2, Parity::none);
        // diagonal pairing: both vectors concentrated on the argmax mode
        f1.coeffs.at(a.argmax_mode) = 1.0;
        f2.coeffs.at(a.argmax_mode) = 1.0;
        cplx tr = tr_rs_fourier(f1, f2, pt).value;
        worst_ext = std::max(
            worst_ext, std::abs(std::abs(tr) / (f1.norm() * f2.norm()) -
                                a.value) / a.value);
      }
    }
  }
  std::printf("  lattice max rel %.2e, extremizer gap %.2e\n", worst,
              worst_ext);
  return worst <= 1e-8 && worst_ext <= 1e-8;
}

bool criterion_6() {
  // Theorem floor scan.  The positivity clause holds; the fitted-exponent
  // clause is a known-red: the computed index decays ~ (1+t)^{sigma-1-0.35}
  // at desk scale (see ledger), so this criterion reports FAIL honestly.
  bool ok = true;
  for (double sigma : {0.6, 0.75, 0.9}) {
    std::vector<double> grid = {1, 2, 4, 8, 16, 32, 64, 120, 200};
    auto fit = index_scan(sigma, grid, 0.0, 0.0);
    double min_floor = 1e300;
    for (auto& [t, v] : fit.grid)
      min_floor = std::min(min_floor, v * std::pow(1.0 + t, 1.0 - sigma));
    bool pos = min_floor > 0.0;
    bool expo = fit.fitted_exponent >= sigma - 1.0 - 0.05;
    std::printf(
        "  sigma %.2f: min floor %.4g (%s), exponent %.4f vs %.4f (%s)\n",
        sigma, min_floor, pos ? "pos" : "NONPOS", fit.fitted_exponent,
        sigma - 1.0 - 0.05, expo ? "ok" : "below");
    ok = ok && pos && expo;
  }
  return ok;
}

bool criterion_7() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> sre(1.1, 2.5), sim(-3.0, 3.0);
  std::uniform_real_distribution<double> xd(-0.5, 0.5), yd(0.9, 2.5);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    cplx s(sre(rng), sim(rng));
    UpperHalfPoint z{xd(rng), yd(rng)};
    worst = std::max(
        worst, rel(eval_lattice_sum(z, s), eval_fourier_expansion(z, s)));
  }
  // modular invariance under inversion
  UpperHalfPoint z{0.31, 1.7};
  double r2 = z.x * z.x + z.y * z.y;
  cplx s(1.6, 0.0);
  double minv = rel(eval_lattice_sum({-z.x / r2, z.y / r2}, s),
                    eval_lattice_sum(z, s));
  double uerr = 0.0;
  for (double t : {3.0, 9.5, 21.0}) {
    cplx phi = std::exp(log_xi(cplx(0.0, 2.0 * t)) - log_xi(cplx(1.0, 2.0 * t)));
    uerr = std::max(uerr, std::abs(std::abs(phi) - 1.0));
  }
  cplx vol = fundamental_domain_quad(
      [](const UpperHalfPoint&) { return cplx(1.0); }, 1e-10);
  double verr = std::abs(vol.real() - kPi / 3.0);
  std::printf(
      "  two-route %.2e, inversion %.2e, unitarity %.2e, vol err %.2e\n",
      worst, minv, uerr, verr);
  return worst <= 1e-6 && minv <= 1e-7 && uerr <= 1e-8 && verr <= 1e-7;
}

bool criterion_8() {
  DomainSample ds;
  ds.nx = 64;
  ds.ny = 64;
  auto r = supnorm_scan({10.0, 16.0, 25.0, 40.0, 60.0}, 0.5, ds);
  std::printf("  critical-line weighted sup exponent %.4f (bound 0.5)\n",
              r.fit.fitted_exponent);
  return r.fit.fitted_exponent <= 0.5;
}

bool criterion_9() {
  std::vector<ExponentPoint> a = {
      {Rational(3, 4), Rational(4, 3) - Rational(3, 4)},
      {Rational(7, 8), Rational(4, 3) - Rational(7, 8)}};
  bool ok1 = pl_interpolate(a, PlSymmetry::functional_equation).exponent ==
             Rational(5, 6);
  std::vector<ExponentPoint> b = {
      {Rational(3, 4), Rational(11, 8) - Rational(3, 4)},
      {Rational(7, 8), Rational(11, 8) - Rational(7, 8)}};
  bool ok2 = pl_interpolate(b, PlSymmetry::functional_equation).exponent ==
             Rational(7, 8);
  std::vector<ExponentPoint> c = {{Rational(0), Rational(2)},
                                  {Rational(1), Rational(0)}};
  bool ok3 = pl_interpolate(c, PlSymmetry::none).exponent == Rational(1);
  std::printf("  5/6 %s, 7/8 %s, convexity 1 %s\n", ok1 ? "ok" : "BAD",
              ok2 ? "ok" : "BAD", ok3 ? "ok" : "BAD");
  return ok1 && ok2 && ok3;
}

bool criterion_10(const std::string& data_path) {
  auto f = load_maass_json(data_path);
  f.validate();
  bool mock = f.source.find("mock") != std::string::npos ||
              f.source.find("synthetic") != std::string::npos;
  std::vector<cplx> ratios;
  for (double sv : {1.5, 2.0, 2.5}) {
    auto lq = l_quotient(f, f, cplx(sv, 0.0));
    auto d = rankin_dirichlet_series(f, f, cplx(sv, 0.0));
    cplx r = lq.value / d.value;
    ratios.push_back(r);
    std::printf("  s=%.1f  L/Tr_R = %.6g  D = %.6g  ratio = %.6g\n", sv,
                lq.value.real(), d.value.real(), r.real());
  }
  double spread = 0.0;
  for (const cplx& r : ratios)
    spread = std::max(spread, std::abs(r - ratios[0]) / std::abs(ratios[0]));
  if (mock) {
    std::printf(
        "  synthetic coefficients: table reported, constancy not claimed "
        "(spread %.3g)\n",
        spread);
    return true;  // pipeline ran to completion, as required for mock data
  }
  std::printf("  ratio spread %.3g (bound 1e-3)\n", spread);
  return spread <= 1e-3;
}

}  // namespace

int main(int argc, char** argv) {
  const char* names[10] = {
      "special-function substrate",
      "coefficient formula vs quadrature oracle",
      "L1 growth exponent",
      "trilinear two-route consistency",
      "index sup-norm identity on the lattice",
      "index floor over t in [1,200]",
      "Eisenstein two-route / invariance / unitarity / volume",
      "critical-line weighted sup-norm scan",
      "Phragmen-Lindelof exponent arithmetic",
      "unfolding constant-consistency",
  };
  std::string data = "data/mock_maass.json";
  if (argc >= 3) data = argv[2];
  int lo = 1, hi = 10;
  if (argc >= 2) lo = hi = std::atoi(argv[1]);
  if (lo < 1 || hi > 10) {
    std::fprintf(stderr, "usage: %s [criterion 1..10] [data.json]\n", argv[0]);
    return 2;
  }
  bool all = true;
  for (int i = lo; i <= hi; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      switch (i) {
        case 1: ok = criterion_1(); break;
        case 2: ok = criterion_2(); break;
        case 3: ok = criterion_3(); break;
        case 4: ok = criterion_4(); break;
        case 5: ok = criterion_5(); break;
        case 6: ok = criterion_6(); break;
        case 7: ok = criterion_7(); break;
        case 8: ok = criterion_8(); break;
        case 9: ok = criterion_9(); break;
        case 10: ok = criterion_10(data); break;
      }
    } catch (const std::exception& e) {
      std::printf("  exception: %s\n", e.what());
      ok = false;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", i,
                names[i - 1], secs);
    all = all && ok;
  }
  return all ? 0 : 1;
}
