#include "rsnum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rsnum {

namespace {

GlRule make_gl(int n) {
  GlRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the Chebyshev-based initial guess.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GlRule& gauss_legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, GlRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
  return it->second;
}

cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                  int panels, int n) {
  const GlRule& r = gauss_legendre_rule(n);
  cplx sum = 0.0;
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double pa = a + p * h;
    double mid = pa + 0.5 * h;
    for (int i = 0; i < n; ++i)
      sum += r.weights[i] * f(mid + 0.5 * h * r.nodes[i]);
  }
  return sum * (0.5 * h);
}

namespace {

struct TsNode {
  double frac_a;  // distance to left endpoint as a fraction of the length
  double frac_b;
  double weight;  // includes the trapezoid step of its birth level
};

// tanh-sinh abscissa fractions per refinement level.  Level 0 is the coarse
// h=0.5 trapezoid; level k adds the midpoints of level k-1.
const std::vector<std::vector<TsNode>>& ts_levels(int max_level) {
  static std::mutex mu;
  static std::vector<std::vector<TsNode>> levels;
  std::lock_guard<std::mutex> lock(mu);
  const double t_max = 6.7, h0 = 0.5;
  if ((int)levels.size() < max_level + 1) {
    levels.clear();
    for (int lev = 0; lev <= max_level; ++lev) {
      double h = h0 / (1 << lev);
      std::vector<TsNode> nodes;
      for (double t = (lev == 0 ? 0.0 : h); t <= t_max; t += (lev == 0 ? h : 2 * h)) {
        double g = 0.5 * kPi * std::sinh(t);
        double e = std::exp(-2.0 * g);
        double far = e / (1.0 + e);       // fraction to the far endpoint
        double near = 1.0 - far;          // fraction to the near endpoint
        double sech = 2.0 * std::exp(-g) / (1.0 + e);  // 1/cosh(g)
        double w = h * 0.25 * kPi * std::cosh(t) * sech * sech;
        if (far < 5e-300 || w < 5e-300) break;
        nodes.push_back({near, far, w});  // node on the right half
        if (t > 0.0) nodes.push_back({far, near, w});
      }
      levels.push_back(std::move(nodes));
    }
  }
  return levels;
}

}  // namespace

cplx integrate_tanh_sinh(const EndpointIntegrand& f, double a, double b,
                         double tol, int max_level) {
  const auto& levels = ts_levels(max_level);
  double L = b - a;
  if (L <= 0.0) return 0.0;
  cplx acc = 0.0;
  cplx prev = 0.0;
  for (int lev = 0; lev <= max_level; ++lev) {
    cplx part = 0.0;
    for (const TsNode& nd : levels[lev]) {
      double da = L * nd.frac_a, db = L * nd.frac_b;
      double x = (nd.frac_a <= 0.5) ? a + da : b - db;
      part += nd.weight * f(x, da, db);
    }
    // Node weights carry the step of their birth level; once the step
    // halves, previously seen nodes contribute half their old weight.
    acc = (lev == 0) ? part : prev * 0.5 + part;
    if (lev > 0 && std::abs(acc - prev) <= std::max(tol, 1e-15 * std::abs(acc)))
      return acc * L;
    prev = acc;
  }
  return acc * L;
}

cplx integrate_tanh_sinh(const std::function<cplx(double)>& f, double a,
                         double b, double tol, int max_level) {
  return integrate_tanh_sinh(
      [&f](double x, double, double) { return f(x); }, a, b, tol, max_level);
}

cplx integrate_graded(const EndpointIntegrand& f, double a, double b,
                      int panels, double grading_exponent, int gl_n) {
  const GlRule& r = gauss_legendre_rule(gl_n);
  double L = b - a;
  cplx sum = 0.0;
  auto frac = [&](int i) {
    double u = double(i) / panels;
    double up = std::pow(u, grading_exponent);
    double vp = std::pow(1.0 - u, grading_exponent);
    return up / (up + vp);
  };
  for (int p = 0; p < panels; ++p) {
    double fa = frac(p), fb = frac(p + 1);
    double h = L * (fb - fa);
    for (int i = 0; i < gl_n; ++i) {
      double s = 0.5 * (1.0 + r.nodes[i]);  // in (0,1)
      double da = L * fa + h * s;
      double db = L - da;
      sum += (0.5 * h * r.weights[i]) * f(a + da, da, db);
    }
  }
  return sum;
}

namespace {

// A point where some factor of the integrand blows up, with the exponents
// handled by the caller; we only track locations here.
struct Panel {
  double a, b;
  bool sing_left, sing_right;
};

std::vector<Panel> split_panels(std::vector<double> pts, double a, double b) {
  pts.push_back(a);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  std::vector<double> uniq;
  for (double p : pts) {
    if (p < a || p > b) continue;
    // Keep every distinct cut: two singular points a hair apart still
    // bracket an O(1) chunk of mass when the exponents sum to -1.
    if (uniq.empty() || p > uniq.back()) uniq.push_back(p);
  }
  std::vector<Panel> out;
  for (size_t i = 0; i + 1 < uniq.size(); ++i)
    out.push_back({uniq[i], uniq[i + 1], true, true});
  return out;
}

cplx panel_integrate(const EndpointIntegrand& g, const Panel& p, double tol,
                     const QuadratureSpec& spec) {
  switch (spec.rule) {
    case QuadRule::gauss_legendre: {
      auto plain = [&g, &p](double x) {
        return g(x, x - p.a, p.b - x);
      };
      return integrate_gl(plain, p.a, p.b, spec.panels, 16);
    }
    case QuadRule::graded_mesh:
      return integrate_graded(g, p.a, p.b, spec.panels, spec.grading_exponent);
    case QuadRule::double_exponential:
    default:
      return integrate_tanh_sinh(g, p.a, p.b, tol);
  }
}

}  // namespace

cplx circle_sin_power_integral(const std::function<cplx(double)>& f, cplx u,
                               const QuadratureSpec& spec) {
  if (u.real() >= 1.0) throw std::domain_error("circle_sin_power_integral: Re u >= 1");
  spec.validate();
  auto panels = split_panels({kPi}, 0.0, kTwoPi);
  cplx total = 0.0;
  for (const Panel& p : panels) {
    auto g = [&](double x, double da, double db) -> cplx {
      double d = std::min(da, db);  // both panel ends sit on zeros of sin
      return std::exp(-u * std::log(std::sin(d))) * f(x);
    };
    total += panel_integrate(g, p, 0.25 * spec.abs_tol, spec);
  }
  return total;
}

cplx singular_circle_quad(const std::function<cplx(double, double)>& f, cplx u,
                          double lambda1, double lambda2,
                          const QuadratureSpec& spec) {
  if (u.real() >= 1.0) throw std::domain_error("singular_circle_quad: Re u >= 1");
  spec.validate();
  const cplx e_ker = -u;                          // |sin(t1-t2)| exponent
  const cplx e_1 = cplx(-1.0, lambda1) + u;       // |sin t1| exponent
  const cplx e_2 = cplx(-1.0, -lambda2) + u;      // |sin t2| exponent
  const double inner_tol = spec.abs_tol / 64.0;

  // The inner integral must be cut at the kernel zeros t1 + k pi, whose
  // distance to the pi-lattice (the |sin t2| zeros) equals the distance e
  // from t1 to the lattice.  For outer nodes with e below machine epsilon
  // of pi, the rounded double t1 collapses onto the lattice and the two
  // singular families merge into a non-integrable t2^{-1} profile; the
  // exponents sum to -1 there and the in-between sliver carries O(1) mass,
  // so the geometry cannot be recovered from the rounded t1.  Instead we
  // carry t1 = A pi + e exactly (lattice index A, signed offset e) and
  // represent every cut as m pi + eps with eps in {0, e}, so panel lengths
  // and endpoint-to-singularity offsets are exact at any scale.
  struct Cut {
    int m;
    double eps;
  };
  auto inner = [&](int A, double e, double t1) -> cplx {
    std::vector<Cut> cuts{{0, 0.0}, {1, 0.0}, {2, 0.0}};
    if (e != 0.0) {
      for (int k = -2; k <= 2; ++k) {
        int m = A + k;
        if (m < 0 || m > 2) continue;
        if ((m == 0 && e < 0.0) || (m == 2 && e > 0.0)) continue;
        cuts.push_back({m, e});
      }
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) {
      return x.m != y.m ? x.m < y.m : x.eps < y.eps;
    });
    auto sin_off = [](const Cut& c) {
      double d = std::numeric_limits<double>::infinity();
      for (int B = 0; B <= 2; ++B)
        d = std::min(d, std::abs((c.m - B) * kPi + c.eps));
      return d;
    };
    auto ker_off = [&](const Cut& c) {
      double d = std::numeric_limits<double>::infinity();
      for (int k = -2; k <= 2; ++k)
        d = std::min(d, std::abs((c.m - A - k) * kPi + (c.eps - e)));
      return d;
    };
    cplx acc = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Cut &cl = cuts[i], &cr = cuts[i + 1];
      double len = (cr.m - cl.m) * kPi + (cr.eps - cl.eps);
      if (len <= 0.0) continue;
      double pa = cl.m * kPi + cl.eps;
      // Exact offsets from the panel ends to the nearest singular point of
      // each factor; no singular point lies inside a panel, so the node
      // distance is min(da + offset_a, db + offset_b) exactly.
      double oka = ker_off(cl), okb = ker_off(cr);
      double osa = sin_off(cl), osb = sin_off(cr);
      auto g = [&](double t2, double da, double db) -> cplx {
        double sk = std::sin(std::min(da + oka, db + okb));
        double s2 = std::sin(std::min(da + osa, db + osb));
        if (sk <= 0.0 || s2 <= 0.0) return 0.0;
        cplx lg = e_ker * std::log(sk) + e_2 * std::log(s2);
        // Overflow guard for subnormal node distances; such nodes carry
        // weights that crush the value far below any tolerance.
        if (lg.real() > 705.0) lg = cplx(705.0, lg.imag());
        return std::exp(lg) * f(t1, t2);
      };
      EndpointIntegrand shifted = [&](double dd, double da, double db) {
        return g(pa + dd, da, db);
      };
      acc += panel_integrate(shifted, Panel{0.0, len, true, true}, inner_tol,
                             spec);
    }
    return acc;
  };

  cplx total = 0.0;
  for (int m = 0; m <= 1; ++m) {
    double base = m * kPi;
    auto g = [&](double t1, double da, double db) -> cplx {
      int A = da <= db ? m : m + 1;
      double e = da <= db ? da : -db;
      double d1 = std::min(da, db);
      return std::exp(e_1 * std::log(std::sin(d1))) * inner(A, e, t1);
    };
    EndpointIntegrand og = g;
    total += panel_integrate(og, Panel{base, base + kPi, true, true},
                             0.25 * spec.abs_tol, spec);
  }
  return total;
}

namespace {

// Derivatives of f at x by centered finite differences with step h.
std::array<cplx, 4> fd_derivs(const std::function<cplx(double)>& f, double x,
                              double h) {
  cplx fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h),
       fp2 = f(x + 2 * h);
  std::array<cplx, 4> d;
  d[0] = f0;
  d[1] = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  d[2] = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  d[3] = (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h);
  return d;
}

}  // namespace

cplx real_line_fourier(const std::function<cplx(double)>& f, double xi,
                       const QuadratureSpec& spec) {
  spec.validate();
  const double phi = -kTwoPi * xi;
  auto osc = [&](double x) { return f(x) * std::exp(cplx(0.0, phi * x)); };
  const double tol = spec.abs_tol;

  // Central tanh-sinh patch around a possible singularity at 0.
  double h0 = std::min(1.0, 0.25 / std::max(std::abs(xi), 0.25));
  cplx total = integrate_tanh_sinh(osc, -h0, 0.0, 0.05 * tol) +
               integrate_tanh_sinh(osc, 0.0, h0, 0.05 * tol);

  // Oscillation-resolving composite GL panels outward, stopping once the
  // integration-by-parts tail corrections at +-X fall below tolerance.
  const GlRule& r = gauss_legendre_rule(16);
  double X = h0;
  const double Xmax = 16384.0;
  cplx tail = 0.0;
  bool tail_ok = false;
  while (X < Xmax) {
    double h = std::min(std::max(1.0, 0.25 * X),
                        0.5 / std::max(std::abs(xi), 1e-3));
    for (double sgn : {1.0, -1.0}) {
      double mid = sgn * (X + 0.5 * h);
      cplx s = 0.0;
      for (int i = 0; i < 16; ++i)
        s += r.weights[i] * osc(mid + 0.5 * h * r.nodes[i]);
      total += s * (0.5 * h);
    }
    X += h;
    // Tail check every few panels to amortize the derivative stencils.
    if (X < 8.0 && X < Xmax / 2) continue;
    if (phi != 0.0) {
      cplx iphi(0.0, phi);
      double hd = std::min(0.5, 0.05 / std::max(std::abs(xi), 0.1));
      auto up = fd_derivs(f, X, hd);
      auto lo = fd_derivs(f, -X, hd);
      cplx t_up = 0.0, t_lo = 0.0;
      cplx pw = iphi;
      for (int k = 0; k < 4; ++k) {
        double sg = (k % 2 == 0) ? 1.0 : -1.0;
        t_up += sg * up[k] / pw;
        t_lo += sg * lo[k] / pw;
        pw *= iphi;
      }
      cplx last_up = up[3] / (iphi * iphi * iphi * iphi);
      cplx last_lo = lo[3] / (iphi * iphi * iphi * iphi);
      tail = -std::exp(iphi * X) * t_up + std::exp(-iphi * X) * t_lo;
      if (std::abs(last_up) + std::abs(last_lo) < 0.1 * tol &&
          std::abs(up[0]) + std::abs(lo[0]) < 1.0) {
        tail_ok = true;
        break;
      }
    } else {
      double fx = std::abs(f(X)) + std::abs(f(-X));
      if (fx * X < 0.2 * tol) {
        tail = 0.0;
        tail_ok = true;
        break;
      }
    }
  }
  if (!tail_ok)
    throw std::runtime_error(
        "real_line_fourier: tail estimate failed; integrand decays too slowly");
  return total + tail;
}

}  // namespace rsnum
