#include "rsnum/special.hpp"

#include <cmath>
#include <stdexcept>

#include "rsnum/quadrature.hpp"

namespace rsnum {

namespace {

// Lanczos, g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

cplx log_gamma_core(cplx z) {
  // Requires Re z > 0.5.
  cplx sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z + cplx(k - 1.0));
  cplx t = z + (kLanczosG - 0.5);
  return 0.5 * std::log(kTwoPi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

cplx log_sin_pi(cplx z) {
  // log sin(pi z) without overflow for large |Im z|.
  double y = z.imag();
  if (std::abs(y) < 8.0) return std::log(std::sin(kPi * z));
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); pull out the large term.
  cplx ipz = cplx(0.0, kPi) * z;
  if (y > 0.0)
    return -ipz + std::log(cplx(1.0) - std::exp(2.0 * ipz)) +
           cplx(-std::log(2.0), 0.5 * kPi);  // log(i/2)
  return ipz + std::log(cplx(1.0) - std::exp(-2.0 * ipz)) +
         cplx(-std::log(2.0), -0.5 * kPi);  // -log(2i)
}

cplx log_gamma(cplx z) {
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma: pole at non-positive integer");
  return std::log(kPi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx recip_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    return 0.0;
  return std::exp(-log_gamma(z));
}

// ---------------------------------------------------------------------------
// Modified Bessel K of complex order.

namespace {

// integral_0^inf e^{-x cosh u} cosh(nu u) du, scaled by e^{x}: returns
// e^{x} K_nu(x).  Valid for all nu; accurate when x is not much smaller
// than |Im nu| (no cancellation in this regime).
cplx bessel_k_exp_scaled(cplx nu, double x) {
  double alpha = std::abs(nu.real());
  double tau = std::abs(nu.imag());
  // Cut off where x(cosh u - 1) - alpha u > 46.
  double umax = 1.0;
  for (int it = 0; it < 40; ++it) {
    double next = std::acosh(1.0 + (46.0 + alpha * umax) / x);
    if (std::abs(next - umax) < 1e-3) {
      umax = next;
      break;
    }
    umax = next;
  }
  umax += 0.5;
  int panels = std::max(8, (int)std::ceil(umax * std::max(2.0, (tau + 1.0) / 4.0)));
  panels = std::min(panels, 400);
  auto f = [&](double u) -> cplx {
    double decay = x * (std::cosh(u) - 1.0);
    if (decay > 700.0) return 0.0;
    return std::exp(-decay) * std::cosh(nu * u);
  };
  return integrate_gl(f, 0.0, umax, panels, 12);
}

// Oscillatory representation, |Re nu| < 1, Im nu >= 0:
//   K_nu(x) = sec(nu pi / 2) * integral_0^inf cos(x sinh u) cosh(nu u) du.
// Returns I = the integral; the caller divides by cos(nu pi / 2) in a form
// safe against overflow.  The head is integrated in u with panels shrinking
// as the local frequency x cosh(u) grows; past sinh(u) = V the variable
// v = sinh(u) is used and each half-oscillation e^{+-ixv} is rotated onto a
// vertical contour where it decays.
cplx bessel_k_osc_integral(cplx nu, double x) {
  double tau = nu.imag();
  // V = 2 tau / x keeps the decay rate on the rotated legs at least x/2,
  // so the tail variable scales cleanly as q = x w.
  double V = std::max(2.0 * tau / x, 10.0);
  double U = std::asinh(V);
  const GlRule& r = gauss_legendre_rule(12);
  cplx head = 0.0;
  double u = 0.0;
  while (u < U) {
    double omega = x * std::cosh(u) + tau + 1.0;
    double h = std::min(3.0 / omega, 0.35);
    h = std::min(h, U - u);
    double mid = u + 0.5 * h;
    cplx s = 0.0;
    for (int i = 0; i < 12; ++i) {
      double t = mid + 0.5 * h * r.nodes[i];
      s += r.weights[i] * (std::cos(x * std::sinh(t)) * std::cosh(nu * t));
    }
    head += s * (0.5 * h);
    u += h;
  }
  // Tail in v = sinh u: integral_V^inf B(v) cos(xv) dv with
  // B(v) = cosh(nu asinh v) / sqrt(1 + v^2), each half-exponential rotated
  // onto a vertical contour v = V +- i q/x where it decays like e^{-q/2}
  // or faster (tau / V <= x / 2 by the choice of V).
  auto B = [&](cplx v) -> cplx {
    return std::cosh(nu * std::asinh(v)) / std::sqrt(1.0 + v * v);
  };
  auto leg = [&](double sgn) -> cplx {
    auto g = [&](double q) -> cplx {
      return B(cplx(V, sgn * q / x)) * std::exp(-q);
    };
    return integrate_gl(g, 0.0, 60.0, 30, 12) / x;
  };
  cplx up = leg(1.0), down = leg(-1.0);
  cplx tail = 0.5 * cplx(0.0, 1.0) *
              (std::exp(cplx(0.0, x * V)) * up - std::exp(cplx(0.0, -x * V)) * down);
  return head + tail;
}

}  // namespace

cplx bessel_k_scaled(cplx nu, double x) {
  if (x <= 0.0) throw std::domain_error("bessel_k: requires x > 0");
  if (nu.imag() < 0.0) nu = -nu;  // K_nu = K_{-nu}
  double tau = nu.imag();
  double b = 0.5 * kPi * tau;
  if (x >= 0.9 * b || tau < 2.0) {
    // e^{pi tau / 2} e^{-x} * (e^{x} K): safe as long as the prefactor
    // exponent b - x is moderate; in this regime b <= x/0.9 so it is.
    return std::exp(b - x) * bessel_k_exp_scaled(nu, x);
  }
  if (std::abs(nu.real()) > 1.0 + 1e-9)
    throw std::domain_error("bessel_k: oscillatory regime needs |Re nu| <= 1");
  cplx I = bessel_k_osc_integral(nu, x);
  // K = I / cos(nu pi / 2); scaled K = I / (cos(nu pi / 2) e^{-pi tau / 2}),
  // and cos((a + i tau) pi / 2) e^{-pi tau / 2}
  //   = [cos(a pi / 2)(1 + e^{-pi tau}) - i sin(a pi / 2)(1 - e^{-pi tau})]/2.
  double a = nu.real();
  double e = std::exp(-kPi * tau);
  cplx denom = 0.5 * cplx(std::cos(0.5 * kPi * a) * (1.0 + e),
                          -std::sin(0.5 * kPi * a) * (1.0 - e));
  return I / denom;
}

cplx bessel_k(cplx nu, double x) {
  if (nu.imag() < 0.0) nu = -nu;
  double b = 0.5 * kPi * std::abs(nu.imag());
  cplx scaled = bessel_k_scaled(nu, x);
  // Unscale; underflows to 0 for very large |Im nu|, which is the honest
  // double-precision answer.
  return scaled * std::exp(-b);
}

cplx bessel_k_lifted(cplx nu, double x) {
  if (x <= 0.0) throw std::domain_error("bessel_k_lifted: requires x > 0");
  if (nu.imag() < 0.0) nu = -nu;
  double tau = nu.imag();
  double b = 0.5 * kPi * tau;
  if (x >= 0.9 * b || tau < 2.0)
    return std::exp(-x) * bessel_k_exp_scaled(nu, x);
  if (nu.real() < 0.0) nu = -nu;  // K_nu = K_{-nu}
  if (nu.real() < 1.0) return bessel_k(nu, x);
  // Upward recurrence K_{mu+1} = K_{mu-1} + (2 mu / x) K_mu from the strip.
  int shift = (int)std::floor(nu.real());
  cplx base = nu - (double)shift;  // Re in [0,1)
  cplx km1 = bessel_k(base - 1.0, x);
  cplx k0 = bessel_k(base, x);
  cplx mu = base;
  for (int j = 0; j < shift; ++j) {
    cplx k1 = km1 + (2.0 * mu / x) * k0;
    km1 = k0;
    k0 = k1;
    mu += 1.0;
  }
  return k0;
}

// ---------------------------------------------------------------------------
// Riemann zeta by Euler-Maclaurin with N adapted to |Im s|.

namespace {
// B_{2k} for k = 1..10.
constexpr double kBern2k[10] = {1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,
                                -1.0 / 30.0, 5.0 / 66.0,   -691.0 / 2730.0,
                                7.0 / 6.0,   -3617.0 / 510.0, 43867.0 / 798.0,
                                -174611.0 / 330.0};
}

cplx zeta(cplx s) {
  if (s == cplx(1.0)) throw std::domain_error("zeta: pole at s = 1");
  if (s.real() < 0.5) {
    // Functional equation zeta(s) = chi(s) zeta(1-s).
    cplx chi = std::exp((s - 0.5) * std::log(kPi) +
                        log_gamma(0.5 * (1.0 - s)) - log_gamma(0.5 * s));
    return chi * zeta(1.0 - s);
  }
  int N = std::max(50, (int)std::ceil(1.3 * std::abs(s.imag())) + 10);
  cplx sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log((double)n));
  cplx Ns = std::exp(-s * std::log((double)N));
  sum += 0.5 * Ns + Ns * (double)N / (s - 1.0);
  // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  cplx poly = 1.0;
  cplx npow = Ns;  // runs through N^{-s-2k+2}
  double fact = 1.0;
  for (int k = 1; k <= 10; ++k) {
    poly *= (k == 1) ? s : (s + cplx(2.0 * k - 3.0)) * (s + cplx(2.0 * k - 2.0));
    fact *= (k == 1) ? 2.0 : (2.0 * k) * (2.0 * k - 1.0);
    npow /= (double)N;
    sum += kBern2k[k - 1] / fact * poly * npow;
    npow /= (double)N;
  }
  return sum;
}

cplx log_xi(cplx w) {
  // xi(w) = pi^{-w/2} Gamma(w/2) zeta(w); log form for the critical line.
  return -0.5 * w * std::log(kPi) + log_gamma(0.5 * w) + std::log(zeta(w));
}

cplx power_tail_sum(cplx gamma, int J) {
  // sum_{j > J} j^{-gamma} by Euler-Maclaurin from M = max(J+1, 20).
  if (gamma.real() <= 1.0)
    throw std::domain_error("power_tail_sum: requires Re gamma > 1");
  int M = std::max(J + 1, 20);
  cplx sum = 0.0;
  for (int j = J + 1; j < M; ++j) sum += std::exp(-gamma * std::log((double)j));
  cplx Ms = std::exp(-gamma * std::log((double)M));
  sum += Ms * (double)M / (gamma - 1.0) + 0.5 * Ms;
  cplx poly = 1.0;
  cplx npow = Ms;
  double fact = 1.0;
  for (int k = 1; k <= 8; ++k) {
    poly *= (k == 1) ? gamma
                     : (gamma + cplx(2.0 * k - 3.0)) * (gamma + cplx(2.0 * k - 2.0));
    fact *= (k == 1) ? 2.0 : (2.0 * k) * (2.0 * k - 1.0);
    npow /= (double)M * (double)M;
    sum += kBern2k[k - 1] / fact * poly * npow * (double)M;
  }
  return sum;
}

}  // namespace rsnum
