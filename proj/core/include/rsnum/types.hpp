#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rsnum {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Quadrature rule selection shared by the singular-kernel integrators.
enum class QuadRule { gauss_legendre, double_exponential, graded_mesh };

struct QuadratureSpec {
  QuadRule rule = QuadRule::double_exponential;
  int panels = 16;                 // per smooth subinterval (graded/GL rules)
  double grading_exponent = 3.0;   // mesh grading toward algebraic singularities
  double abs_tol = 1e-10;

  void validate() const {
    if (!(abs_tol > 0.0 && abs_tol < 1.0))
      throw std::invalid_argument("QuadratureSpec: abs_tol must be in (0,1)");
    if (panels < 4)
      throw std::invalid_argument("QuadratureSpec: panels must be >= 4");
    if (!(grading_exponent > 1.0))
      throw std::invalid_argument("QuadratureSpec: grading_exponent must be > 1");
  }
};

/// The spectral parameter bundle (s, lambda1, lambda2).  The kernel shift
/// u = s - i(lambda1 - lambda2)/2 is always derived, never stored separately.
struct SpectralPoint {
  cplx s;
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  cplx u() const { return s - cplx(0.0, 0.5 * (lambda1 - lambda2)); }
  double sigma() const { return s.real(); }
  double t() const { return s.imag(); }

  void require_critical_strip() const {
    if (!(sigma() > 0.0 && sigma() < 1.0))
      throw std::domain_error("SpectralPoint: Re(s) must lie in (0,1)");
  }
};

enum class Parity { even_fn, odd_fn, none };

/// Two-sided truncated Fourier coefficient array c(n), |n| <= N.
struct CoefficientSequence {
  int trunc = 0;                 // N
  std::vector<cplx> values;      // index n stored at values[n + trunc]
  Parity parity = Parity::none;
  double tail_bound = 0.0;       // bound on sum_{|n|>N} |c(n)| (inf if divergent)

  CoefficientSequence() = default;
  explicit CoefficientSequence(int n_trunc, Parity p = Parity::none)
      : trunc(n_trunc), values(2 * n_trunc + 1, cplx(0.0)), parity(p) {}

  cplx operator()(int n) const {
    if (n < -trunc || n > trunc) return {0.0, 0.0};
    return values[static_cast<std::size_t>(n + trunc)];
  }
  cplx& at(int n) { return values[static_cast<std::size_t>(n + trunc)]; }
};

struct SeqNorms {
  double l1 = 0.0;   // includes tail_bound
  double l2 = 0.0;
  double sup = 0.0;
  int argmax = 0;    // smallest |n| achieving sup; positive n wins ties
  double tail = 0.0; // reported uncertainty from the truncation tail
};

}  // namespace rsnum
