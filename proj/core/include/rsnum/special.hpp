#pragma once

#include "rsnum/types.hpp"

namespace rsnum {

/// log Gamma, Lanczos rational approximation with reflection for
/// Re z < 1/2.  Relative accuracy ~1e-13 for |z| <= 1e3.  exp of the
/// result is always Gamma(z); left of the reflection line the imaginary
/// part may differ from the continuous branch by a multiple of 2 pi
/// (all uses downstream are Gamma quotients and exponentials).
/// Throws std::domain_error at the poles z = 0, -1, -2, ...
cplx log_gamma(cplx z);

/// exp(log_gamma(z)); may overflow for large |z| on the right half plane.
cplx gamma_fn(cplx z);

/// 1/Gamma(z).  Entire: returns exactly 0 at the poles of Gamma.
cplx recip_gamma(cplx z);

/// log(sin(pi z)) computed without overflow for large |Im z|.
cplx log_sin_pi(cplx z);

/// Modified Bessel K_nu(y) for |Re nu| < 1, y > 0.  Hybrid of the
/// e^{-y cosh u} representation (y not too small against |Im nu|) and the
/// contour-deformed cos(y sinh u) representation, so the result keeps
/// relative accuracy even when K is exponentially small in |Im nu|.
cplx bessel_k(cplx nu, double y);

/// e^{pi |Im nu| / 2} * K_nu(y), computed without the exponential underflow.
/// This is the quantity the Eisenstein critical-line code consumes.
cplx bessel_k_scaled(cplx nu, double y);

/// K_nu for Re nu outside (-1,1) by upward recurrence from the base strip.
/// Only safe in the non-oscillatory regime y >~ pi |Im nu| / 2.
cplx bessel_k_lifted(cplx nu, double y);

/// Riemann zeta by Euler-Maclaurin, valid for Re s > -1, s != 1,
/// |Im s| <= ~1e3 at 1e-10 relative.
cplx zeta(cplx s);

/// Completed zeta xi(w) = pi^{-w/2} Gamma(w/2) zeta(w), via log_xi.
cplx log_xi(cplx w);

/// sum_{j > J} j^{-gamma} for Re gamma > 1 (Euler-Maclaurin tail).
cplx power_tail_sum(cplx gamma, int J);

}  // namespace rsnum
