#pragma once

#include <functional>

#include "rsnum/principal_series.hpp"
#include "rsnum/types.hpp"

namespace rsnum {

enum class GKind { even, odd };

/// Miller-Schmid factors G0(u) = 2 (2pi)^{-u} Gamma(u) cos(pi u / 2),
/// G1(u) = 2i (2pi)^{-u} Gamma(u) sin(pi u / 2), in log-safe form.
cplx g_factor(GKind kind, cplx u);

/// H_{f1,f2,phi}(t1,t2) = (1/2pi) int phi(t) f1~(t1+t) conj(f2~(t2+t)) dt,
/// held as Fourier data:  H = sum_{m,k} c1(m) conj(c2(k)) phi^(k-m)
/// e^{i(m t1 - k t2)}.
struct HCorrelation {
  CoefficientSequence c1, c2, phi;
  bool phi_spherical = false;  // phi = const * delta_0 => H = H0(t1 - t2)

  cplx eval(double theta1, double theta2) const;
  /// Coefficients of the K-invariant reduction H0 (valid when
  /// phi_spherical): H0^(n) = phi^(0) * c1(n) conj(c2(n)).
  CoefficientSequence h0() const;
};

HCorrelation h_correlation(const PrincipalSeriesVector& f1,
                           const PrincipalSeriesVector& f2,
                           const CoefficientSequence& phi);

struct TrilinearResult {
  cplx value;
  enum class Method { fourier, quadrature } method = Method::fourier;
  double est_error = 0.0;
};

/// Fast spherical-phi evaluation:
///   Tr = (pi/4) G0(u) sum_n H0^(n) c^(-n),
/// where c^ = c_sequence(pt) are the coefficients of K(theta)|sin theta|^{-u}.
/// The pi/4 prefactor is the Fourier reduction of the quadrature formula
/// below under the norm convention ||f||^2 = pi sum |c|^2; its ratio to the
/// paper's 1/(8 pi) reading is kTrCalibrationRatio, fixed once against
/// tr_rs_quadrature and frozen.
TrilinearResult tr_rs_fourier(const PrincipalSeriesVector& f1,
                              const PrincipalSeriesVector& f2,
                              const SpectralPoint& pt);

/// Ground-truth oracle: (G0(u)/8) * singular_circle_quad of
/// |sin(t1-t2)|^{-u} |sin t1|^{-1+u+i l1} |sin t2|^{-1+u-i l2} H(t1,t2).
TrilinearResult tr_rs_quadrature(const PrincipalSeriesVector& f1,
                                 const PrincipalSeriesVector& f2,
                                 const CoefficientSequence& phi,
                                 const SpectralPoint& pt,
                                 const QuadratureSpec& spec);

/// Ratio of the Fourier-path prefactor pi/4 to the paper's 1/(8 pi): 2 pi.
inline constexpr double kTrCalibrationRatio = kTwoPi;

/// Delta_+(f1, f2, u) = int int |x-y|^{-u} f1(x) conj(f2(y)) dx dy over
/// [a,b]^2 for compactly supported continuous profiles.
cplx delta_plus(const std::function<cplx(double)>& f1,
                const std::function<cplx(double)>& f2, cplx u, double a,
                double b, const QuadratureSpec& spec);

/// Archimedean factor of the unfolded Rankin-Selberg integral for two
/// spherical principal series (lambda = 2R dictionary):
///   int_0^inf y^{s-1} K_{i l1/2}(2 pi y) K_{i l2/2}(2 pi y) dy,
/// in closed Gamma form.  Valid for Re s > 0.
cplx tr_rs_whittaker(double lambda1, double lambda2, cplx s);

}  // namespace rsnum
