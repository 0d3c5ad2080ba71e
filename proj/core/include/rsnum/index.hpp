#pragma once

#include <cstdint>
#include <vector>

#include "rsnum/circle.hpp"
#include "rsnum/fit.hpp"
#include "rsnum/types.hpp"

namespace rsnum {

/// Fourier coefficients of C(theta) = K(theta) |sin theta|^{-u}, where
/// K = p_{w1} * p_{w2} is the cross-correlation of the two power kernels,
/// w1 = -1 + u + i lambda1, w2 = -1 + u - i lambda2.  Exact partial
/// convolution out to an internal cutoff M, then an analytic tail resummed
/// through the Gamma-ratio asymptotics of the coefficients (exact
/// identities; the only approximation is a fitted cubic correction in 1/m).
/// Coefficients vanish at odd n.
CoefficientSequence c_sequence(const SpectralPoint& pt, int trunc);

struct IndexResult {
  SpectralPoint pt;
  double value = 0.0;
  int argmax_mode = 0;    // Fourier mode attaining the sup
  double c_seq_tail = 0.0;
  enum class Method { supnorm_formula, bruteforce } method =
      Method::supnorm_formula;
};

/// Truncation heuristic for the spectral parameter t: the coefficient mass
/// of c^ lives out to |n| ~ |t|, with slow m^{-(1-sigma)} decay past it.
int adaptive_trunc(double t);

/// I_{pi1,pi2}(s) = sup over unit spherical-type pairs of |Tr| =
/// (1/4) |G0(u)| sup_n |c^(n)|.
IndexResult index_value(const SpectralPoint& pt, int trunc = 0);

/// Independent maximization: alternating power iteration of the bilinear
/// form |Tr(f1, f2)| over unit vectors with `restarts` seeded random
/// starts.  Shares only the c^ data with index_value, not the sup-norm
/// reduction.
IndexResult index_bruteforce(const SpectralPoint& pt, int trunc = 0,
                             std::uint64_t seed = 12345,
                             int restarts = 32);

/// Scan I(sigma + it) over a t-grid at fixed (lambda1, lambda2) and fit the
/// growth exponent of I against (1 + t).
ExponentFit index_scan(double sigma, const std::vector<double>& t_grid,
                       double lambda1, double lambda2, int trunc = 0);

/// ||cos_power_coeffs(eps + i u1)||_l1 over the u1 grid, fitted against
/// (1 + u1); the paper bound is exponent 1/2.
ExponentFit l1_exponent_scan(double eps, const std::vector<double>& u1_grid);

/// index_value prefactor 1/4 over the paper's 1/(8 pi) bookkeeping.
inline constexpr double kIndexCalibrationRatio = kTwoPi;

}  // namespace rsnum
