#pragma once

#include "rsnum/types.hpp"

namespace rsnum {

enum class KernelFn { cos_power, sin_power };

/// |cos theta|^w or |sin theta|^w on the circle.
struct PowerKernelSpec {
  cplx w;
  KernelFn fn = KernelFn::cos_power;

  void validate() const {
    if (!(w.real() > -1.0))
      throw std::domain_error("PowerKernelSpec: needs Re w > -1");
  }
};

/// Fourier coefficients of |cos theta|^w under the convention
/// c(n) = (1/2pi) integral_0^{2pi} |cos theta|^w e^{-i n theta} d theta:
///   c(2m) = Gamma(w+1) / (2^w Gamma(1 + w/2 + m) Gamma(1 + w/2 - m)),
/// odd indices exactly zero.  tail_bound covers sum_{|n|>N} |c(n)| when the
/// Gamma-ratio decay O(|m|^{-1-Re w}) is summable (Re w > 0); otherwise 0.
CoefficientSequence cos_power_coeffs(cplx w, int N);

/// |sin theta|^w: the cos coefficients rotated by pi/2, c_sin(n) = e^{i pi n / 2} c_cos(n).
CoefficientSequence sin_power_coeffs(cplx w, int N);

/// Coefficients of theta -> integral_0^{2pi} f_a(theta + phi) f_b(phi) d phi,
/// namely c(n) = 2 pi a(n) b(-n); truncation min(N_a, N_b).
CoefficientSequence correlation_coeffs(const CoefficientSequence& a,
                                       const CoefficientSequence& b);

SeqNorms seq_norms(const CoefficientSequence& c);

/// Independent oracle: c(n) by direct quadrature of the defining integral.
/// The singular endpoint regions are integrated in the variable
/// q = -log(distance), where the kernel oscillation e^{-i Im w log sin d}
/// becomes a plain linear phase; absolute error <= ~1e-10 for
/// Re w > -0.95, |Im w| <= 50, |n| <= 64.
cplx coeff_quadrature_oracle(const PowerKernelSpec& kernel, int n);

}  // namespace rsnum
