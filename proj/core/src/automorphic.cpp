#include "rsnum/automorphic.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <stdexcept>

#include "json.hpp"
#include "rsnum/index.hpp"
#include "rsnum/quadrature.hpp"
#include "rsnum/special.hpp"
#include "rsnum/trilinear.hpp"

namespace rsnum {

void MaassFormData::validate() const {
  if (!(R > 0.0)) throw std::domain_error("MaassFormData: R must be positive");
  if (parity != Parity::even_fn)
    throw std::domain_error("MaassFormData: only even forms are supported");
  if (coeffs.size() < 50)
    throw std::domain_error("MaassFormData: need at least 50 coefficients");
  if (std::abs(coeffs[0] - 1.0) > 1e-12)
    throw std::domain_error("MaassFormData: a_1 must equal 1");
}

MaassFormData load_maass_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_maass_json: cannot open " + path);
  nlohmann::json j;
  in >> j;
  MaassFormData f;
  f.R = j.at("R").get<double>();
  std::string par = j.at("parity").get<std::string>();
  if (par != "even")
    throw std::domain_error("load_maass_json: parity must be \"even\"");
  f.parity = Parity::even_fn;
  f.coeffs = j.at("coeffs").get<std::vector<double>>();
  f.source = j.value("source", "");
  f.validate();
  return f;
}

MaassProfile maass_profile(const MaassFormData& f, double y) {
  f.validate();
  if (y <= 0.0) throw std::domain_error("maass_profile: y <= 0");
  const size_t M = f.coeffs.size();
  MaassProfile pr;
  pr.y = y;
  pr.terms.resize(M);
  double amax = 0.0;
  for (double a : f.coeffs) amax = std::max(amax, std::abs(a));
  double sq = 2.0 * std::sqrt(y);
  cplx nu(0.0, f.R);
  for (size_t n = 1; n <= M; ++n)
    pr.terms[n - 1] = sq * f.coeffs[n - 1] * bessel_k(nu, kTwoPi * n * y).real();
  // Truncation audit: the first dropped term, geometrically continued.
  double edge = sq * amax * std::abs(bessel_k(nu, kTwoPi * (M + 1) * y));
  double tail = edge / std::max(1e-3, 1.0 - std::exp(-kTwoPi * y));
  if (tail > 1e-9)
    throw std::runtime_error(
        "maass_profile: coefficient truncation insufficient at this height");
  return pr;
}

double MaassProfile::eval(double x) const {
  double acc = 0.0;
  for (size_t n = 0; n < terms.size(); ++n)
    acc += terms[n] * std::cos(kTwoPi * (n + 1.0) * x);
  return acc;
}

double maass_eval(const MaassFormData& f, const UpperHalfPoint& z) {
  return maass_profile(f, z.y).eval(z.x);
}

namespace {

cplx x_integral(const std::function<cplx(const UpperHalfPoint&)>& f, double y,
                double xa, double xb) {
  auto g = [&](double x) { return f({x, y}); };
  return integrate_gl(g, xa, xb, 8, 16);
}

}  // namespace

cplx fundamental_domain_quad(
    const std::function<cplx(const UpperHalfPoint&)>& integrand, double tol) {
  // Bulk below y = 1: parametrize the circle boundary by u = sqrt(1 - y^2),
  // so x runs over [-1/2, -u] and [u, 1/2]; dy = (u/y) du removes the
  // square-root edge at y = 1.
  auto region1 = [&](double u) -> cplx {
    double y = std::sqrt(1.0 - u * u);
    cplx row = x_integral(integrand, y, u, 0.5) +
               x_integral(integrand, y, -0.5, -u);
    return row * (u / (y * y * y));
  };
  cplx total = integrate_gl(region1, 0.0, 0.5, 8, 16);

  auto strip = [&](double ya, double yb) -> cplx {
    auto g = [&](double y) -> cplx {
      return x_integral(integrand, y, -0.5, 0.5) / (y * y);
    };
    return integrate_gl(g, ya, yb, 6, 16);
  };
  total += strip(1.0, 2.0);

  // Cusp ladder with doubling panels and geometric-decay enforcement.
  double prev = std::numeric_limits<double>::infinity();
  double ya = 2.0;
  for (int k = 0;; ++k) {
    cplx part = strip(ya, 2.0 * ya);
    total += part;
    double mag = std::abs(part);
    if (mag < tol && k >= 1) break;
    if (k >= 6 && mag > 0.75 * prev)
      throw std::runtime_error(
          "fundamental_domain_quad: integrand decays too slowly at the cusp");
    if (k > 40)
      throw std::runtime_error(
          "fundamental_domain_quad: cusp ladder failed to converge");
    prev = mag;
    ya *= 2.0;
  }
  return total;
}

cplx tr_aut(const MaassFormData& f1, const MaassFormData& f2, cplx s,
            double tol) {
  f1.validate();
  f2.validate();
  // Rows share y between the x-nodes; cache the Bessel work per height.
  struct Row {
    double y = -1.0;
    MaassProfile p1, p2;
    FourierProfile pe;
  };
  auto row = std::make_shared<Row>();
  auto integrand = [=](const UpperHalfPoint& z) -> cplx {
    if (z.y != row->y) {
      row->y = z.y;
      row->p1 = maass_profile(f1, z.y);
      row->p2 = maass_profile(f2, z.y);
      row->pe = fourier_profile(z.y, s);
    }
    return row->p1.eval(z.x) * row->p2.eval(z.x) * row->pe.eval(z.x);
  };
  return fundamental_domain_quad(integrand, tol);
}

DirichletResult rankin_dirichlet_series(const MaassFormData& f1,
                                        const MaassFormData& f2, cplx s,
                                        SignMode mode) {
  f1.validate();
  f2.validate();
  if (s.real() <= 1.0)
    throw std::domain_error("rankin_dirichlet_series: divergent for Re s <= 1");
  // For the even-even coefficient convention a_{-n} = a_n the signed series
  // coincides with the plain one term by term.
  (void)mode;
  size_t N = std::min(f1.coeffs.size(), f2.coeffs.size());
  DirichletResult out;
  out.terms = (int)N;
  double tail_scale = 0.0;
  for (size_t n = 1; n <= N; ++n) {
    double ab = f1.coeffs[n - 1] * f2.coeffs[n - 1];
    out.value += 2.0 * ab * std::exp(-s * std::log((double)n));
    if (n + 8 > N) tail_scale = std::max(tail_scale, std::abs(ab));
  }
  out.tail_estimate =
      2.0 * tail_scale *
      std::abs(power_tail_sum(cplx(s.real(), 0.0), (int)N));
  return out;
}

LQuotient l_quotient(const MaassFormData& f1, const MaassFormData& f2, cplx s,
                     double tol) {
  LQuotient q;
  q.denominator = tr_rs_whittaker(2.0 * f1.R, 2.0 * f2.R, s);
  if (std::abs(q.denominator) < 1e-300)
    throw std::domain_error("l_quotient: vanishing archimedean denominator");
  q.numerator = tr_aut(f1, f2, s, tol);
  q.value = q.numerator / q.denominator;
  return q;
}

BoundReport bound_pipeline(double lambda1, double lambda2, double sigma,
                           const std::vector<double>& t_grid, double eps,
                           const DomainSample& sample) {
  if (!(sigma > 0.5 && sigma < 1.0))
    throw std::domain_error("bound_pipeline: sigma outside (1/2, 1)");
  BoundReport rep;
  rep.sigma = sigma;
  rep.eps = eps;
  rep.t_grid = t_grid;
  rep.exponent_congruence = 11.0 / 8.0 - sigma;
  rep.exponent_sl2z = 4.0 / 3.0 - sigma;
  std::vector<std::pair<double, double>> pts;
  for (double t : t_grid) {
    cplx s(sigma, t);
    double sup = weighted_sup_E_v(s, eps, sample).value;
    double idx = index_value(SpectralPoint{s, lambda1, lambda2}).value;
    rep.sup_E_v.push_back(sup);
    rep.index_values.push_back(idx);
    rep.ratio.push_back(sup / idx);
    pts.push_back({std::abs(t), sup / idx});
  }
  rep.fit = fit_log_power(std::move(pts));
  double e = rep.fit.fitted_exponent;
  if (e <= rep.exponent_sl2z + 0.05)
    rep.regime = "sl2z (4/3 - sigma)";
  else if (e <= rep.exponent_congruence + 0.05)
    rep.regime = "congruence (11/8 - sigma)";
  else if (e <= rep.exponent_convexity + 0.05)
    rep.regime = "convexity";
  else
    rep.regime = "exceeds convexity";
  return rep;
}

}  // namespace rsnum
