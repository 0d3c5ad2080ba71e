#pragma once

#include <functional>
#include <vector>

#include "rsnum/types.hpp"

namespace rsnum {

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1,1].
struct GlRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GlRule& gauss_legendre_rule(int n);

cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                  int panels = 16, int n = 16);

/// Integrand taking the node plus its exact distances to the panel ends.
/// Kernels with endpoint singularities must use da/db, not x-a/b-x, so the
/// distance stays meaningful below machine epsilon of the endpoints.
using EndpointIntegrand = std::function<cplx(double x, double da, double db)>;

/// tanh-sinh (double-exponential) rule on [a,b]; handles integrable
/// algebraic endpoint singularities up to exponent ~ -0.95.
cplx integrate_tanh_sinh(const EndpointIntegrand& f, double a, double b,
                         double tol, int max_level = 7);
cplx integrate_tanh_sinh(const std::function<cplx(double)>& f, double a,
                         double b, double tol, int max_level = 7);

/// Composite Gauss-Legendre on a mesh graded toward both endpoints,
/// breakpoint fractions u^p / (u^p + (1-u)^p).
cplx integrate_graded(const EndpointIntegrand& f, double a, double b,
                      int panels, double grading_exponent, int gl_n = 16);

/// integral_0^{2pi} |sin t|^{-u} f(t) dt with the zeros of sin handled in
/// endpoint-exact coordinates.  Requires Re u < 1.
cplx circle_sin_power_integral(const std::function<cplx(double)>& f, cplx u,
                               const QuadratureSpec& spec);

/// integral over [0,2pi]^2 of
///   |sin(t1-t2)|^{-u} |sin t1|^{-1+u+i l1} |sin t2|^{-1+u-i l2} f(t1,t2).
/// Throws std::domain_error when Re u >= 1 (divergent kernel).
cplx singular_circle_quad(const std::function<cplx(double, double)>& f, cplx u,
                          double lambda1, double lambda2,
                          const QuadratureSpec& spec);

/// integral f(x) e^{-2 pi i x xi} dx with oscillation-aware panels,
/// integration-by-parts tail corrections, and a tanh-sinh patch around 0
/// (tolerates an integrable singularity there).  Throws std::runtime_error
/// when the tail estimate does not pass the requested tolerance.
cplx real_line_fourier(const std::function<cplx(double)>& f, double xi,
                       const QuadratureSpec& spec);

}  // namespace rsnum
