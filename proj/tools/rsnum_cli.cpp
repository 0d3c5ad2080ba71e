// Batch CLI: every computation as a reproducible run with a config file,
// flag overrides, and CSV + JSON reports.  Exit codes: 0 pass, 1
// computation/assertion failure, 2 config or validation error.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsnum/automorphic.hpp"
#include "rsnum/circle.hpp"
#include "rsnum/eisenstein.hpp"
#include "rsnum/index.hpp"
#include "rsnum/pl.hpp"
#include "rsnum/trilinear.hpp"

using json = nlohmann::json;
using namespace rsnum;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------
// Run configuration: flat key -> string map.  File values load first,
// flags overwrite, so flags win.
struct RunConfig {
  std::map<std::string, std::string> kv;

  bool has(const std::string& k) const { return kv.count(k) != 0; }
  double num(const std::string& k, double dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : std::stod(it->second);
  }
  long inum(const std::string& k, long dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : std::stol(it->second);
  }
  std::string str(const std::string& k, const std::string& dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (!k.empty()) cfg.kv[k] = v;
  }
}

std::vector<double> parse_grid(const RunConfig& cfg, double dflt_min,
                               double dflt_max, int dflt_steps) {
  double lo = cfg.num("t_min", dflt_min), hi = cfg.num("t_max", dflt_max);
  int n = static_cast<int>(cfg.inum("t_steps", dflt_steps));
  if (n < 1) throw std::invalid_argument("t_steps must be >= 1");
  if (!(lo <= hi)) throw std::invalid_argument("t_min must be <= t_max");
  std::vector<double> g;
  if (n == 1) {
    g.push_back(lo);
    return g;
  }
  // log-spaced in (1 + t): the scans fit against log(1 + t).
  double a = std::log1p(lo), b = std::log1p(hi);
  for (int i = 0; i < n; ++i)
    g.push_back(std::expm1(a + (b - a) * i / (n - 1)));
  return g;
}

// ---------------------------------------------------------------------
// Report: CSV rows plus a JSON summary with PASS/FAIL assertions.  Both
// embed the resolved config; neither embeds timestamps, so identical
// config + seed gives byte-identical files.
struct Report {
  std::string command;
  const RunConfig* cfg = nullptr;
  std::vector<std::string> csv_header;
  std::vector<std::vector<double>> csv_rows;
  json summary;
  bool all_pass = true;

  void assert_that(const std::string& name, bool ok, double value,
                   const std::string& detail) {
    summary["assertions"].push_back(
        {{"name", name}, {"pass", ok}, {"value", value}, {"detail", detail}});
    if (!ok) all_pass = false;
    std::printf("  [%s] %s = %.10g  (%s)\n", ok ? "PASS" : "FAIL",
                name.c_str(), value, detail.c_str());
  }

  void write(const std::string& out_base) {
    summary["command"] = command;
    summary["version"] = kVersion;
    summary["pass"] = all_pass;
    json cfg_echo = json::object();
    for (const auto& [k, v] : cfg->kv) cfg_echo[k] = v;
    summary["config"] = cfg_echo;
    if (out_base.empty()) return;

    std::ofstream csv(out_base + ".csv");
    csv << "# command=" << command << " version=" << kVersion << "\n";
    for (const auto& [k, v] : cfg->kv) csv << "# " << k << "=" << v << "\n";
    for (size_t i = 0; i < csv_header.size(); ++i)
      csv << (i ? "," : "") << csv_header[i];
    csv << "\n";
    char buf[64];
    for (const auto& row : csv_rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", row[i]);
        csv << (i ? "," : "") << buf;
      }
      csv << "\n";
    }
    std::ofstream js(out_base + ".json");
    js << summary.dump(2) << "\n";
  }
};

// Worker pool for grid scans; the library stays pure, parallelism lives
// here.  Order of results is by index, so output is deterministic.
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  int nt = std::min(threads, n);
  for (int w = 0; w < nt; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------
// Subcommand bodies.  Each fills the report and returns nothing; failures
// throw and map to exit 1.

void cmd_index_compute(const RunConfig& cfg, Report& rep, int) {
  SpectralPoint pt;
  pt.s = {cfg.num("sigma", 0.75), cfg.num("t", 0.0)};
  pt.lambda1 = cfg.num("lambda1", 0.0);
  pt.lambda2 = cfg.num("lambda2", 0.0);
  auto r = index_value(pt, static_cast<int>(cfg.inum("trunc", 0)));
  rep.csv_header = {"sigma", "t", "lambda1", "lambda2", "index", "argmax"};
  rep.csv_rows.push_back({pt.sigma(), pt.t(), pt.lambda1, pt.lambda2, r.value,
                          double(r.argmax_mode)});
  rep.assert_that("index_positive", r.value > 0.0, r.value,
                  "I(s) > 0 in the open strip");
}

void cmd_index_scan(const RunConfig& cfg, Report& rep, int threads) {
  double sigma = cfg.num("sigma", 0.75);
  double l1 = cfg.num("lambda1", 0.0), l2 = cfg.num("lambda2", 0.0);
  auto grid = parse_grid(cfg, 1.0, 200.0, 9);
  int trunc = static_cast<int>(cfg.inum("trunc", 0));
  std::vector<double> vals(grid.size());
  parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
    SpectralPoint pt;
    pt.s = {sigma, grid[i]};
    pt.lambda1 = l1;
    pt.lambda2 = l2;
    vals[i] = index_value(pt, trunc).value;
  });
  std::vector<std::pair<double, double>> pairs;
  rep.csv_header = {"t", "index", "floor"};
  double min_floor = 1e300;
  for (size_t i = 0; i < grid.size(); ++i) {
    double fl = vals[i] * std::pow(1.0 + grid[i], 1.0 - sigma);
    min_floor = std::min(min_floor, fl);
    pairs.emplace_back(grid[i], vals[i]);
    rep.csv_rows.push_back({grid[i], vals[i], fl});
  }
  auto fit = fit_log_power(pairs);
  rep.summary["fitted_exponent"] = fit.fitted_exponent;
  rep.assert_that("floor_positive", min_floor > 0.0, min_floor,
                  "min I*(1+t)^{1-sigma} over grid");
  rep.assert_that("exponent_floor", fit.fitted_exponent >= sigma - 1.0 - 0.05,
                  fit.fitted_exponent,
                  "fitted exponent vs sigma-1-0.05; known-red, see ledger");
}

void cmd_l1_scan(const RunConfig& cfg, Report& rep, int) {
  double eps = cfg.num("eps", 1.0);
  auto grid = parse_grid(cfg, 10.0, 1000.0, 8);
  auto fit = l1_exponent_scan(eps, grid);
  rep.csv_header = {"u1", "l1_norm"};
  for (auto& [t, v] : fit.grid) rep.csv_rows.push_back({t, v});
  rep.summary["fitted_exponent"] = fit.fitted_exponent;
  rep.assert_that("l1_exponent", fit.fitted_exponent <= 0.55,
                  fit.fitted_exponent, "paper bound 1/2 plus margin");
}

void cmd_trilinear_check(const RunConfig& cfg, Report& rep, int threads) {
  double sigma = cfg.num("sigma", 0.75);
  int n = static_cast<int>(cfg.inum("samples", 5));
  double tol = cfg.num("tol", 1e-5);
  std::mt19937_64 rng(static_cast<uint64_t>(cfg.inum("seed", 12345)));
  struct Case {
    SpectralPoint pt;
    PrincipalSeriesVector f1, f2;
    double rel = 0.0;
  };
  std::vector<Case> cases(n);
  std::uniform_real_distribution<double> lam(-3.0, 3.0), cf(-1.0, 1.0);
  for (auto& c : cases) {
    c.pt.s = {sigma, 0.0};
    c.pt.lambda1 = lam(rng);
    c.pt.lambda2 = lam(rng);
    c.f1 = spherical_vector(c.pt.lambda1);
    c.f2 = spherical_vector(c.pt.lambda2);
    c.f1.coeffs = CoefficientSequence(4, Parity::none);
    c.f2.coeffs = CoefficientSequence(4, Parity::none);
    for (int m = -4; m <= 4; m += 2) {
      c.f1.coeffs.at(m) = {cf(rng), cf(rng)};
      c.f2.coeffs.at(m) = {cf(rng), cf(rng)};
    }
  }
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  parallel_for(n, threads, [&](int i) {
    auto& c = cases[i];
    CoefficientSequence phi(0, Parity::even_fn);
    phi.at(0) = 1.0;
    auto a = tr_rs_fourier(c.f1, c.f2, c.pt);
    auto b = tr_rs_quadrature(c.f1, c.f2, phi, c.pt, spec);
    c.rel = std::abs(a.value - b.value) / std::max(1e-300, std::abs(b.value));
  });
  rep.csv_header = {"case", "lambda1", "lambda2", "rel_error"};
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, cases[i].rel);
    rep.csv_rows.push_back(
        {double(i), cases[i].pt.lambda1, cases[i].pt.lambda2, cases[i].rel});
  }
  rep.assert_that("two_route_agreement", worst <= tol, worst,
                  "max rel error, fourier vs quadrature");
}

void cmd_eisenstein_check(const RunConfig& cfg, Report& rep, int) {
  cplx s(cfg.num("s_re", 2.0), cfg.num("s_im", 0.0));
  UpperHalfPoint z{cfg.num("x", 0.21), cfg.num("y", 1.3)};
  double tol = cfg.num("tol", 1e-6);
  cplx a = eval_lattice_sum(z, s);
  cplx b = eval_fourier_expansion(z, s);
  double rel = std::abs(a - b) / std::abs(b);
  rep.csv_header = {"s_re", "s_im", "x", "y", "lattice_re", "lattice_im",
                    "fourier_re", "fourier_im", "rel_error"};
  rep.csv_rows.push_back({s.real(), s.imag(), z.x, z.y, a.real(), a.imag(),
                          b.real(), b.imag(), rel});
  rep.assert_that("two_route_agreement", rel <= tol, rel,
                  "lattice sum vs fourier expansion");
}

void cmd_eisenstein_supnorm(const RunConfig& cfg, Report& rep, int) {
  double sigma = cfg.num("sigma", 0.5);
  auto grid = parse_grid(cfg, 10.0, 60.0, 6);
  DomainSample ds;
  ds.nx = static_cast<int>(cfg.inum("nx", 64));
  ds.ny = static_cast<int>(cfg.inum("ny", 64));
  auto r = supnorm_scan(grid, sigma, ds);
  rep.csv_header = {"t", "weighted_sup"};
  for (size_t i = 0; i < r.t_grid.size(); ++i)
    rep.csv_rows.push_back({r.t_grid[i], r.weighted_sup[i]});
  rep.summary["fitted_exponent"] = r.fit.fitted_exponent;
  rep.assert_that("sup_exponent", r.fit.fitted_exponent <= 0.5,
                  r.fit.fitted_exponent, "critical-line weighted sup growth");
}

void cmd_weighted_sup(const RunConfig& cfg, Report& rep, int) {
  cplx s(cfg.num("sigma", 0.5), cfg.num("t", 20.0));
  double eps = cfg.num("eps", 0.4);
  DomainSample ds;
  ds.nx = static_cast<int>(cfg.inum("nx", 64));
  ds.ny = static_cast<int>(cfg.inum("ny", 64));
  auto r = weighted_sup_E_v(s, eps, ds);
  rep.csv_header = {"sigma", "t", "eps", "sup", "argmax_x", "argmax_y"};
  rep.csv_rows.push_back(
      {s.real(), s.imag(), eps, r.value, r.argmax.x, r.argmax.y});
  rep.assert_that("sup_finite", std::isfinite(r.value) && r.value > 0.0,
                  r.value, "weighted sup positive and finite");
}

void cmd_unfold_check(const RunConfig& cfg, Report& rep, int) {
  std::string path = cfg.str("data", "data/mock_maass.json");
  auto f = load_maass_json(path);
  f.validate();
  bool mock = f.source.find("mock") != std::string::npos ||
              f.source.find("synthetic") != std::string::npos;
  rep.csv_header = {"s", "L_re", "L_im", "D_re", "D_im", "ratio_re",
                    "ratio_im"};
  std::vector<cplx> ratios;
  for (double sv : {1.5, 2.0, 2.5}) {
    auto lq = l_quotient(f, f, cplx(sv, 0.0));
    auto d = rankin_dirichlet_series(f, f, cplx(sv, 0.0));
    cplx ratio = lq.value / d.value;
    ratios.push_back(ratio);
    rep.csv_rows.push_back({sv, lq.value.real(), lq.value.imag(),
                            d.value.real(), d.value.imag(), ratio.real(),
                            ratio.imag()});
  }
  double spread = 0.0;
  for (const cplx& r : ratios)
    spread = std::max(spread, std::abs(r - ratios[0]) / std::abs(ratios[0]));
  rep.summary["ratio_spread"] = spread;
  rep.summary["mock_data"] = mock;
  if (mock) {
    // Synthetic coefficients are not modular; the identity is not expected
    // to hold.  Report the table and pass on completion, flagged.
    rep.assert_that("pipeline_completes", true, spread,
                    "mock data: ratio table reported, constancy not claimed");
  } else {
    rep.assert_that("ratio_constant", spread <= 1e-3, spread,
                    "(Tr_aut/Tr_R)/Dirichlet constant across s");
  }
}

void cmd_bound_pipeline(const RunConfig& cfg, Report& rep, int) {
  double sigma = cfg.num("sigma", 0.75);
  double eps = cfg.num("eps", 0.2);
  double l1 = cfg.num("lambda1", 2.0), l2 = cfg.num("lambda2", 3.0);
  auto grid = parse_grid(cfg, 5.0, 60.0, 8);
  DomainSample ds;
  ds.nx = static_cast<int>(cfg.inum("nx", 48));
  ds.ny = static_cast<int>(cfg.inum("ny", 48));
  auto r = bound_pipeline(l1, l2, sigma, grid, eps, ds);
  rep.csv_header = {"t", "sup_E_v", "index", "ratio"};
  for (size_t i = 0; i < r.t_grid.size(); ++i)
    rep.csv_rows.push_back(
        {r.t_grid[i], r.sup_E_v[i], r.index_values[i], r.ratio[i]});
  rep.summary["fitted_exponent"] = r.fit.fitted_exponent;
  rep.summary["regime"] = r.regime;
  bool finite = true;
  for (double v : r.ratio) finite = finite && std::isfinite(v) && v > 0.0;
  rep.assert_that("ratio_positive_finite", finite,
                  r.ratio.empty() ? 0.0 : r.ratio.back(),
                  "sup/index positive and finite on the grid");
}

void cmd_pl_exponent(const RunConfig& cfg, Report& rep, int) {
  // Input line e(sigma) = c0 + c1*sigma given as exact rationals
  // "num/den"; defaults to the paper's 4/3 - sigma.
  auto rat = [](const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  };
  Rational c0 = rat(cfg.str("c0", "4/3")), c1 = rat(cfg.str("c1", "-1"));
  std::vector<ExponentPoint> pts;
  for (const Rational& sg : {Rational(3, 4), Rational(7, 8)})
    pts.push_back({sg, c0 + c1 * sg});
  auto r = pl_interpolate(pts, PlSymmetry::functional_equation);
  rep.csv_header = {"sigma", "exponent"};
  rep.csv_rows.push_back({r.sigma.to_double(), r.exponent.to_double()});
  rep.summary["exponent"] = r.exponent.str();
  rep.assert_that("critical_line_exponent", true, r.exponent.to_double(),
                  "e(1/2) = " + r.exponent.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rsnum batch runner"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::function<void(const RunConfig&, Report&, int)> body;
  };
  const std::vector<Sub> subs = {
      {"index-compute", "I(s) at a single spectral point", cmd_index_compute},
      {"index-scan", "I(sigma+it) over a t grid with exponent fit",
       cmd_index_scan},
      {"l1-scan", "L1 norm growth of the cos-power coefficients",
       cmd_l1_scan},
      {"trilinear-check", "fourier vs quadrature trilinear agreement",
       cmd_trilinear_check},
      {"eisenstein-check", "lattice sum vs fourier expansion agreement",
       cmd_eisenstein_check},
      {"eisenstein-supnorm", "weighted sup-norm scan over t",
       cmd_eisenstein_supnorm},
      {"weighted-sup", "sup of |E v| at one s", cmd_weighted_sup},
      {"unfold-check", "unfolding constant-consistency table",
       cmd_unfold_check},
      {"bound-pipeline", "sup/index ratio scan with regime report",
       cmd_bound_pipeline},
      {"pl-exponent", "Phragmen-Lindelof critical-line exponent",
       cmd_pl_exponent},
  };

  std::string config_path, out_base, data_path;
  long threads = static_cast<long>(std::thread::hardware_concurrency());
  long seed = 12345, trunc = 0, t_steps = -1;
  double tol = -1.0, sigma = -10.0, t_min = -1.0, t_max = -1.0;

  const Sub* chosen = nullptr;
  for (const auto& s : subs) {
    CLI::App* c = app.add_subcommand(s.name, s.help);
    c->add_option("--config", config_path, "key=value config file");
    c->add_option("--out", out_base, "report base path (.csv/.json added)");
    c->add_option("--threads", threads, "worker pool size");
    c->add_option("--seed", seed, "RNG seed for optimizer restarts");
    c->add_option("--tol", tol, "tolerance override");
    c->add_option("--sigma", sigma, "Re s");
    c->add_option("--t-min", t_min, "grid start");
    c->add_option("--t-max", t_max, "grid end");
    c->add_option("--t-steps", t_steps, "grid size");
    c->add_option("--trunc", trunc, "truncation override");
    c->add_option("--data", data_path, "Maass coefficient data file");
    c->callback([&chosen, &s] { chosen = &s; });
    c->allow_extras();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    // Flags win over the file.
    cfg.kv["seed"] = std::to_string(seed);
    cfg.kv["threads"] = std::to_string(threads);
    if (tol > 0.0) cfg.kv["tol"] = std::to_string(tol);
    if (sigma > -10.0) cfg.kv["sigma"] = std::to_string(sigma);
    if (t_min >= 0.0) cfg.kv["t_min"] = std::to_string(t_min);
    if (t_max >= 0.0) cfg.kv["t_max"] = std::to_string(t_max);
    if (t_steps >= 0) cfg.kv["t_steps"] = std::to_string(t_steps);
    if (trunc > 0) cfg.kv["trunc"] = std::to_string(trunc);
    if (!data_path.empty()) cfg.kv["data"] = data_path;
    if (cfg.has("t_steps") && cfg.inum("t_steps", 1) < 1)
      throw std::invalid_argument("empty grid");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  Report rep;
  rep.command = chosen->name;
  rep.cfg = &cfg;
  std::printf("rsnum %s %s\n", kVersion, chosen->name);
  try {
    chosen->body(cfg, rep, static_cast<int>(cfg.inum("threads", 1)));
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "computation error: %s\n", e.what());
    return 1;
  }
  rep.write(out_base);
  std::printf("%s\n", rep.all_pass ? "PASS" : "FAIL");
  return rep.all_pass ? 0 : 1;
}
