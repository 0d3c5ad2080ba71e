#include "rsnum/circle.hpp"

#include <algorithm>
#include <cmath>

#include "rsnum/quadrature.hpp"
#include "rsnum/special.hpp"

namespace rsnum {

namespace {

bool gamma_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// l1 tail bound from the O(m^{-1-Re w}) Gamma-ratio decay; 0 when the tail
// is not summable (Re w <= 0).
double coeff_tail_bound(const CoefficientSequence& c, double re_w) {
  double p = 1.0 + re_w;
  int M = c.trunc / 2;
  if (p <= 1.02 || M < 8) return 0.0;
  double C = 0.0;
  for (int m = M - 3; m <= M; ++m)
    C = std::max(C, std::abs(c(2 * m)) * std::pow((double)m, p));
  double tail = power_tail_sum(cplx(p, 0.0), M).real();
  return 2.0 * 1.5 * C * tail;  // both signs, 50% asymptotic-constant margin
}

}  // namespace

CoefficientSequence cos_power_coeffs(cplx w, int N) {
  if (!(w.real() > -1.0))
    throw std::domain_error("cos_power_coeffs: needs Re w > -1");
  CoefficientSequence c(N, Parity::even_fn);
  cplx base = log_gamma(w + 1.0) - w * std::log(2.0);
  bool real_w = (w.imag() == 0.0);
  for (int m = 0; 2 * m <= N; ++m) {
    cplx zp = 1.0 + 0.5 * w + (double)m;
    cplx zm = 1.0 + 0.5 * w - (double)m;
    cplx val = 0.0;
    if (!gamma_pole(zm)) {
      val = std::exp(base - log_gamma(zp) - log_gamma(zm));
      if (real_w) val = cplx(val.real(), 0.0);
    }
    c.at(2 * m) = val;
    c.at(-2 * m) = val;
  }
  c.tail_bound = coeff_tail_bound(c, w.real());
  return c;
}

CoefficientSequence sin_power_coeffs(cplx w, int N) {
  CoefficientSequence c = cos_power_coeffs(w, N);
  for (int m = 1; 2 * m <= N; ++m) {
    double sgn = (m % 2 == 0) ? 1.0 : -1.0;  // e^{i pi n / 2} at n = 2m
    c.at(2 * m) *= sgn;
    c.at(-2 * m) *= sgn;
  }
  return c;
}

CoefficientSequence correlation_coeffs(const CoefficientSequence& a,
                                       const CoefficientSequence& b) {
  int N = std::min(a.trunc, b.trunc);
  Parity p = (a.parity == Parity::even_fn && b.parity == Parity::even_fn)
                 ? Parity::even_fn
                 : Parity::none;
  CoefficientSequence c(N, p);
  double sup_a = 0.0, sup_b = 0.0;
  for (const cplx& v : a.values) sup_a = std::max(sup_a, std::abs(v));
  for (const cplx& v : b.values) sup_b = std::max(sup_b, std::abs(v));
  for (int n = -N; n <= N; ++n) c.at(n) = kTwoPi * a(n) * b(-n);
  c.tail_bound =
      kTwoPi * (a.tail_bound * sup_b + b.tail_bound * sup_a +
                a.tail_bound * b.tail_bound);
  return c;
}

SeqNorms seq_norms(const CoefficientSequence& c) {
  SeqNorms nr;
  nr.tail = c.tail_bound;
  double sumsq = 0.0;
  for (int n = -c.trunc; n <= c.trunc; ++n) {
    double a = std::abs(c(n));
    nr.l1 += a;
    sumsq += a * a;
  }
  nr.l2 = std::sqrt(sumsq);
  nr.l1 += c.tail_bound;
  // argmax: smallest |n| achieving the sup, positive n on ties.
  for (int k = 0; k <= c.trunc; ++k) {
    for (int n : {k, -k}) {
      if (n == 0 && k != 0) continue;
      double a = std::abs(c(n));
      if (a > nr.sup * (1.0 + 1e-14)) {
        nr.sup = a;
        nr.argmax = n;
      }
    }
  }
  return nr;
}

namespace {

// integral_0^L sin(d)^w e^{-i n theta(d)} dd with theta(d) = s0 + dir*d,
// via q = -log d: the kernel phase Im w * log sin d becomes linear in q.
cplx half_panel_integral(cplx w, int n, double s0, double dir, double L) {
  const double d0 = 1e-4;
  const double q1 = -std::log(d0);
  double q0 = -std::log(L);
  double rate_w = std::abs(w.imag());
  double decay = 1.0 + w.real();
  const GlRule& r = gauss_legendre_rule(12);
  cplx acc = 0.0;
  double q = q0;
  double qstop = std::min(q1, q0 + 48.0 / decay);
  while (q < qstop) {
    double h = std::min(2.5 / (1.0 + rate_w + std::abs(n) * std::exp(-q)),
                        qstop - q);
    double mid = q + 0.5 * h;
    cplx s = 0.0;
    for (int i = 0; i < 12; ++i) {
      double qq = mid + 0.5 * h * r.nodes[i];
      double d = std::exp(-qq);
      cplx ker = std::exp(w * std::log(std::sin(d)));
      s += r.weights[i] * ker *
           std::exp(cplx(0.0, -n * (s0 + dir * d))) * d;
    }
    acc += s * (0.5 * h);
    q += h;
  }
  if (q1 >= qstop && decay * (qstop - q0) >= 48.0) return acc;
  // Analytic micro-tail over d in (0, d0]: expand sin(d)^w e^{-i n dir d}
  // = d^w sum_k C_k d^k + O(d^{w+5}) and integrate term by term.
  cplx beta(0.0, -n * dir);
  cplx s2 = -w / 6.0;
  cplx s4 = w * w / 72.0 - w / 180.0;
  cplx C[5];
  C[0] = 1.0;
  C[1] = beta;
  C[2] = beta * beta / 2.0 + s2;
  C[3] = beta * beta * beta / 6.0 + beta * s2;
  C[4] = beta * beta * beta * beta / 24.0 + beta * beta * s2 / 2.0 + s4;
  cplx tail = 0.0;
  for (int k = 0; k < 5; ++k)
    tail += C[k] * std::exp((w + (double)(k + 1)) * std::log(d0)) /
            (w + (double)(k + 1));
  return acc + tail * std::exp(cplx(0.0, -n * s0));
}

}  // namespace

cplx coeff_quadrature_oracle(const PowerKernelSpec& kernel, int n) {
  kernel.validate();
  // Zeros of the kernel factor on [0, 2pi]; every half-panel obtained by
  // splitting between consecutive zeros has length pi/2, one designated
  // end on a zero, and kernel value exactly sin(distance-to-that-end).
  std::vector<double> zeros = (kernel.fn == KernelFn::cos_power)
                                  ? std::vector<double>{0.5 * kPi, 1.5 * kPi}
                                  : std::vector<double>{0.0, kPi, kTwoPi};
  cplx total = 0.0;
  const double L = 0.5 * kPi;
  for (double z : zeros) {
    if (z > 1e-12) total += half_panel_integral(kernel.w, n, z, -1.0, L);
    if (z < kTwoPi - 1e-12) total += half_panel_integral(kernel.w, n, z, 1.0, L);
  }
  return total / kTwoPi;
}

}  // namespace rsnum
