#pragma once

#include <vector>

#include "rsnum/fit.hpp"
#include "rsnum/types.hpp"

namespace rsnum {

struct UpperHalfPoint {
  double x = 0.0;
  double y = 1.0;

  /// Membership in the standard fundamental domain |x| <= 1/2, |z| >= 1.
  bool in_fundamental_domain(double tol = 1e-12) const;
};

/// Tensor sampling of the fundamental domain: nx points across
/// x in [-1/2, 1/2], ny log-spaced points in y from sqrt(3)/2 up to y_max
/// (y_max = 0 means the automatic rule max(10, |t| / 2pi)).
struct DomainSample {
  int nx = 64;
  int ny = 64;
  double y_max = 0.0;

  double resolve_y_max(double t) const;
};

struct SupnormReport {
  std::vector<double> t_grid;
  std::vector<double> weighted_sup;
  ExponentFit fit;
  double weight_exponent = 0.0;
};

struct WeightedSup {
  double value = 0.0;
  UpperHalfPoint argmax;
};

/// E(z, s) = (1/2) sum_{gcd(c,d)=1} y^s / |cz+d|^{2s}, truncated with a
/// rigorous tail bound <= tol.  Requires Re s >= 1.1.
cplx eval_lattice_sum(const UpperHalfPoint& z, cplx s, double tol = 1e-10);

/// Fourier data of E(., s) at fixed height y: the constant-term block and
/// the Bessel coefficients of cos(2 pi n x).  Caches the y-only work so a
/// scan across x costs one cosine series per point.
struct FourierProfile {
  cplx s;
  double y = 1.0;
  cplx constant_term;
  std::vector<cplx> an;  // coefficient of cos(2 pi n x), n = 1..an.size()

  cplx eval(double x) const;
};

FourierProfile fourier_profile(double y, cplx s, double tol = 1e-10);

/// E(z, s) = y^s + (xi(2s-1)/xi(2s)) y^{1-s}
///           + (4 sqrt(y)/xi(2s)) sum_{n>=1} n^{s-1/2} sigma_{1-2s}(n)
///             K_{s-1/2}(2 pi n y) cos(2 pi n x).
/// Valid for s away from the constant-term poles; intended for y >= 1/2.
/// Works on the critical line via the scaled Bessel evaluation.
cplx eval_fourier_expansion(const UpperHalfPoint& z, cplx s,
                            double tol = 1e-10);

/// For each t computes sup over a fundamental-domain sample of
/// |E(sigma + it, z)| y^{-sigma}, then fits the growth exponent in (1+t).
SupnormReport supnorm_scan(const std::vector<double>& t_grid, double sigma,
                           const DomainSample& sample = {});

/// sup over the sampled fundamental domain of |E(s, z)| v(z) with the
/// Siegel weight v(z) = y^{-(2-eps)/2} for y >= 1 and v = 1 on the compact
/// part.  Requires eps in (0, min(2 sigma, 2 - 2 sigma)).
WeightedSup weighted_sup_E_v(cplx s, double eps,
                             const DomainSample& sample = {});

}  // namespace rsnum
