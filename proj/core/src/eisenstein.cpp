#include "rsnum/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rsnum/special.hpp"
#include "rsnum/quadrature.hpp"

namespace rsnum {

bool UpperHalfPoint::in_fundamental_domain(double tol) const {
  return y > 0.0 && std::abs(x) <= 0.5 + tol && x * x + y * y >= 1.0 - tol;
}

double DomainSample::resolve_y_max(double t) const {
  if (y_max > 0.0) return y_max;
  return std::max(10.0, std::abs(t) / kTwoPi);
}

namespace {

// int_W^inf (w^2 + b^2)^{-s} dw for W > 0, by the substitution w = W / v.
cplx epstein_tail_integral(double W, double b, cplx s) {
  // The integrand behaves like v^{2s-2} near v = 0 (fractional, possibly
  // oscillatory), so tanh-sinh rather than Gauss-Legendre.
  auto g = [&](double v, double, double) -> cplx {
    // log form: w = W / v can overflow for the deepest tanh-sinh nodes
    double lw = std::log(W) - std::log(v);
    double r = b * v / W;
    return std::exp(-s * (2.0 * lw + std::log1p(r * r)) + std::log(W) -
                    2.0 * std::log(v));
  };
  return integrate_tanh_sinh(g, 0.0, 1.0, 1e-14);
}

}  // namespace

cplx eval_lattice_sum(const UpperHalfPoint& z, cplx s, double tol) {
  if (z.y <= 0.0) throw std::domain_error("eval_lattice_sum: y <= 0");
  double sg = s.real();
  if (sg < 1.1)
    throw std::domain_error("eval_lattice_sum: Re s < 1.1 converges too slowly");
  // Mobius-normalized full lattice sum: sum'_{(c,d)} y^s |cz+d|^{-2s}
  // = 2 zeta(2s) E(z, s).  The d-sum at fixed c is truncated with
  // Euler-Maclaurin integral tails; the c-sum beyond C is replaced by its
  // d-integral leading term (a zeta(2s-1)-type tail), whose Poisson
  // remainder is O(e^{-2 pi C y}).
  const double y = z.y, x = z.x;
  long C = std::max<long>(32, (long)std::ceil((std::log(1.0 / tol) + 6.0) /
                                             (kTwoPi * y)));
  cplx full = 2.0 * zeta(2.0 * s);  // c = 0 row, without the y^s factor
  for (long c = 1; c <= C; ++c) {
    double b = c * y, a = c * x;
    long D = 50 + (long)std::ceil(2.0 * std::abs(a) + 2.0 * b +
                                  3.0 * std::abs(s.imag()));
    cplx row = 0.0;
    for (long d = -D; d <= D; ++d) {
      double t = a + d;
      row += std::exp(-s * std::log(t * t + b * b));
    }
    // Sum over d > D: midpoint Euler-Maclaurin, error O(f''') ~ D^{-2sg-3}.
    for (double sgn : {1.0, -1.0}) {
      double W = D + 0.5 + sgn * a;
      cplx q = cplx(W * W + b * b);
      row += epstein_tail_integral(W, b, s) +
             (1.0 / 24.0) * (-s) * std::exp(-(s + 1.0) * std::log(q)) *
                 (2.0 * W);
    }
    full += 2.0 * row;
  }
  // c > C: leading integral term sum_{c>C} sqrt(pi) Gamma(s-1/2)/Gamma(s)
  // (c y)^{1-2s}, doubled for +-c.
  cplx gr = std::exp(log_gamma(s - 0.5) - log_gamma(s));
  full += 2.0 * std::sqrt(kPi) * gr * std::exp((1.0 - 2.0 * s) * std::log(y)) *
          power_tail_sum(2.0 * s - 1.0, (int)C);
  return std::exp(s * std::log(y)) * full / (2.0 * zeta(2.0 * s));
}

namespace {

cplx divisor_sigma(long n, cplx w) {
  // sigma_w(n) = sum_{d | n} d^w
  cplx acc = 0.0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    acc += std::exp(w * std::log((double)d));
    long e = n / d;
    if (e != d) acc += std::exp(w * std::log((double)e));
  }
  return acc;
}

}  // namespace

FourierProfile fourier_profile(double y, cplx s, double tol) {
  if (y <= 0.0) throw std::domain_error("fourier_profile: y <= 0");
  if (std::abs(s - 1.0) < 1e-8 || std::abs(s) < 1e-8 ||
      std::abs(s - 0.5) < 1e-8)
    throw std::domain_error("fourier_profile: s at/near a constant-term pole");
  FourierProfile pr;
  pr.s = s;
  pr.y = y;
  cplx ls = std::log(cplx(y));
  cplx phi = std::exp(log_xi(2.0 * s - 1.0) - log_xi(2.0 * s));
  pr.constant_term = std::exp(s * ls) + phi * std::exp((1.0 - s) * ls);

  cplx nu = s - 0.5;
  double ti = std::abs(nu.imag());
  // log prefactor of the Bessel tail, with the e^{-pi |Im nu|/2} underflow
  // of K on the critical line folded in against the scaled Bessel.
  bool scaled = std::abs(nu.real()) < 1.0;
  cplx lpref = std::log(4.0 * std::sqrt(y)) - log_xi(2.0 * s) -
               (scaled ? 0.5 * kPi * ti : 0.0);
  double mpref = std::exp(lpref.real());
  for (long n = 1;; ++n) {
    double by = kTwoPi * n * y;
    cplx kb = scaled ? bessel_k_scaled(nu, by) : bessel_k_lifted(nu, by);
    pr.an.push_back(std::exp(lpref + nu * std::log((double)n)) *
                    divisor_sigma(n, 1.0 - 2.0 * s) * kb);
    // K decays like e^{-sqrt(by^2 - ti^2)} past the transition by ~ ti; the
    // divisor sum is at most n^{max(0, 1-2 Re s)} d(n).
    if (by > ti && n >= 2) {
      double decay = std::sqrt(by * by - ti * ti) - (scaled ? 0.0 : 0.5 * kPi * ti);
      double env = mpref * std::exp(nu.real() * std::log((double)n) - decay) *
                   4.0 * std::pow((double)n, std::max(0.0, 1.0 - 2.0 * s.real()));
      if (env < 0.25 * tol) break;
    }
    if (n > 100000)
      throw std::runtime_error("fourier_profile: Bessel tail will not truncate");
  }
  return pr;
}

cplx FourierProfile::eval(double x) const {
  cplx total = constant_term;
  for (size_t n = 0; n < an.size(); ++n)
    total += an[n] * std::cos(kTwoPi * (n + 1.0) * x);
  return total;
}

cplx eval_fourier_expansion(const UpperHalfPoint& z, cplx s, double tol) {
  return fourier_profile(z.y, s, tol).eval(z.x);
}

namespace {

template <class WeightFn>
WeightedSup sample_sup(const DomainSample& sample, cplx s, WeightFn weight) {
  int nx = std::max(2, sample.nx), ny = std::max(2, sample.ny);
  double y0 = 0.5 * std::sqrt(3.0), y1 = sample.resolve_y_max(s.imag());
  double ly0 = std::log(y0), ly1 = std::log(std::max(y1, y0 * 1.0001));
  WeightedSup best;
  best.value = -1.0;
  for (int j = 0; j < ny; ++j) {
    double y = std::exp(ly0 + (ly1 - ly0) * j / (ny - 1.0));
    FourierProfile pr = fourier_profile(y, s);
    double v = weight(y);
    for (int i = 0; i < nx; ++i) {
      double x = -0.5 + i / (nx - 1.0);
      UpperHalfPoint p{x, y};
      if (!p.in_fundamental_domain()) continue;
      double val = std::abs(pr.eval(x)) * v;
      if (val > best.value) {
        best.value = val;
        best.argmax = p;
      }
    }
  }
  return best;
}

}  // namespace

SupnormReport supnorm_scan(const std::vector<double>& t_grid, double sigma,
                           const DomainSample& sample) {
  if (sigma < 0.5) throw std::domain_error("supnorm_scan: sigma < 1/2");
  SupnormReport rep;
  rep.t_grid = t_grid;
  rep.weight_exponent = sigma;
  std::vector<std::pair<double, double>> pts;
  for (double t : t_grid) {
    cplx s(sigma, t);
    auto w = sample_sup(sample, s,
                        [&](double y) { return std::pow(y, -sigma); });
    rep.weighted_sup.push_back(w.value);
    pts.push_back({std::abs(t), w.value});
  }
  rep.fit = fit_log_power(std::move(pts));
  return rep;
}

WeightedSup weighted_sup_E_v(cplx s, double eps, const DomainSample& sample) {
  double sg = s.real();
  if (!(eps > 0.0 && eps < std::min(2.0 * sg, 2.0 - 2.0 * sg)))
    throw std::domain_error("weighted_sup_E_v: eps outside (0, min(2 sigma, 2 - 2 sigma))");
  double wexp = 0.5 * (2.0 - eps);
  return sample_sup(sample, s, [&](double y) {
    return y >= 1.0 ? std::pow(y, -wexp) : 1.0;
  });
}

}  // namespace rsnum
