#pragma once

#include <functional>

#include "rsnum/types.hpp"

namespace rsnum {

enum class Extension { e, o };

/// Vector of the spherical principal series P(i lambda, +) of SL±(2),
/// stored in the compact picture by Fourier coefficients of the pi-periodic
/// even-type function f~ (even indices only).
/// Norm convention: ||f||^2 = pi * sum_n |c(n)|^2.
struct PrincipalSeriesVector {
  double lambda = 0.0;
  CoefficientSequence coeffs;
  Extension extension = Extension::e;

  double norm() const;
  bool is_spherical(double tol = 1e-12) const;  // delta at n = 0
  /// Evaluate f~(theta) from the coefficients.
  cplx compact_eval(double theta) const;
  /// Noncompact realization f(x) = (1+x^2)^{-(1+i lambda)/2} f~(arccot x).
  cplx noncompact_eval(double x) const;
};

PrincipalSeriesVector spherical_vector(double lambda, Extension ext = Extension::e);

/// Element of SL±(2) with cached Iwasawa data g = k_theta a_alpha n_t
/// (times I_- = diag(1,-1) when det = -1).
struct GroupElement {
  double a, b, c, d;
  double theta = 0.0;   // rotation angle
  double alpha = 1.0;   // diag(alpha, 1/alpha), alpha > 0
  double t = 0.0;       // upper unipotent entry
  bool flip = false;    // right factor I_- (det = -1)

  static GroupElement from_entries(double a, double b, double c, double d);
  static GroupElement rotation(double theta);
  static GroupElement diagonal(double alpha);
  static GroupElement unipotent(double t);
  GroupElement operator*(const GroupElement& rhs) const;
};

/// Compact-picture coefficients of a noncompact-realization function:
/// f~(theta) = f(cot theta) |sin theta|^{-(1+i lambda)}, sampled on a
/// uniform 2048-point grid over (0, pi) and extended pi-periodically.
PrincipalSeriesVector picture_convert(const std::function<cplx(double)>& f,
                                      double lambda, int N);

/// Rotation action in the compact picture: c(n) -> e^{i n theta0} c(n).
PrincipalSeriesVector k_rotate(const PrincipalSeriesVector& v, double theta0);

/// pi_{u,chi}(g) f (x) = chi(a - c x) |a - c x|^{-1-u} f((d x - b)/(a - c x)).
/// chi is trivial (false) or sgn (true).  The returned function throws a
/// std::domain_error when evaluated at the multiplier zero x = a/c.
std::function<cplx(double)> group_action_noncompact(
    const GroupElement& g, std::function<cplx(double)> f, cplx u,
    bool sgn_chi = false);

/// I_- action: extension e sends c(n) -> c(-n); extension o adds a sign.
PrincipalSeriesVector i_minus_action(const PrincipalSeriesVector& v);

/// Whittaker functional (character e^{-2 pi i x}) evaluated on the Iwasawa
/// cell:  Wh_f(k a n_t) = chi(a) |a|^{-1+i lambda} e^{2 pi i t}
///                        * F[pi(k)^{-1} f](sgn(a) / a^2),
/// with the closed Fourier form used for the spherical vector and
/// real_line_fourier otherwise.
cplx whittaker_eval(const PrincipalSeriesVector& v, double k_angle, double a,
                    double t);

/// F[(1+x^2)^{-s}](xi) = (2 pi^s / Gamma(s)) |xi|^{s-1/2} K_{s-1/2}(2 pi |xi|).
cplx spherical_fourier_closed(cplx s, double xi);

}  // namespace rsnum
