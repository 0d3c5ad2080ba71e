#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rsnum/eisenstein.hpp"
#include "rsnum/fit.hpp"
#include "rsnum/types.hpp"

namespace rsnum {

/// Even Maass cusp form given by its spectral parameter R (eigenvalue
/// 1/4 + R^2) and normalized Fourier coefficients a_1 = 1, ..., a_M.
struct MaassFormData {
  double R = 0.0;
  Parity parity = Parity::even_fn;
  std::vector<double> coeffs;  // a_n at index n-1
  std::string source;

  void validate() const;  // a_1 = 1, R > 0, M >= 50
};

/// Parse the JSON data file {"R":..., "parity":"even", "coeffs":[1.0,...],
/// "source":"..."}.
MaassFormData load_maass_json(const std::string& path);

/// Fourier-Whittaker row at fixed height: phi(x) = 2 sqrt(y) sum_n
/// a_n K_{iR}(2 pi n y) cos(2 pi n x), with the Bessel factors cached.
struct MaassProfile {
  double y = 1.0;
  std::vector<double> terms;  // 2 sqrt(y) a_n K_{iR}(2 pi n y)

  double eval(double x) const;
};

MaassProfile maass_profile(const MaassFormData& f, double y);

/// Single-point evaluation; throws if the coefficient truncation cannot
/// reach ~1e-9 at this height.
double maass_eval(const MaassFormData& f, const UpperHalfPoint& z);

/// int_F integrand dx dy / y^2 over the standard fundamental domain,
/// split into the bulk (sqrt(3)/2 <= y <= 2) and a doubling cusp ladder
/// y in [2, 4], [4, 8], ... truncated when a panel falls below tol; the
/// ladder must decay geometrically (slow-decay detection).
cplx fundamental_domain_quad(
    const std::function<cplx(const UpperHalfPoint&)>& integrand,
    double tol = 1e-10);

/// Tr_aut^RS(f1, f2, s) = int_F Phi_1 conj(Phi_2) E(s, z) dmu.
cplx tr_aut(const MaassFormData& f1, const MaassFormData& f2, cplx s,
            double tol = 1e-10);

enum class SignMode { plain, with_sign };

struct DirichletResult {
  cplx value = 0.0;
  double tail_estimate = 0.0;  // Ramanujan-on-average tail, not applied
  int terms = 0;
};

/// sum_{n != 0} a_n conj(b_n) |n|^{-s} over the shared coefficient range
/// (= 2 sum_{n >= 1} for even forms; the signed variant coincides for the
/// even-even convention a_{-n} = a_n).  Requires Re s > 1.
DirichletResult rankin_dirichlet_series(const MaassFormData& f1,
                                        const MaassFormData& f2, cplx s,
                                        SignMode mode = SignMode::plain);

struct LQuotient {
  cplx value = 0.0;        // numerator / denominator
  cplx numerator = 0.0;    // tr_aut
  cplx denominator = 0.0;  // tr_rs_whittaker at lambda_i = 2 R_i
};

/// L(s, f1 x f2) ~ Tr_aut / Tr_R with the lambda = 2R dictionary.
LQuotient l_quotient(const MaassFormData& f1, const MaassFormData& f2, cplx s,
                     double tol = 1e-10);

struct BoundReport {
  double sigma = 0.0;
  double eps = 0.0;
  std::vector<double> t_grid;
  std::vector<double> sup_E_v;
  std::vector<double> index_values;
  std::vector<double> ratio;  // sup_E_v / index, the Theorem-driven factor
  ExponentFit fit;
  double exponent_congruence = 0.0;  // 11/8 - sigma
  double exponent_sl2z = 0.0;        // 4/3 - sigma
  double exponent_convexity = 1.0;
  std::string regime;  // which comparison exponent the fit obeys
};

/// Per t: weighted_sup_E_v(sigma + it, eps) / index_value at the spectral
/// point (sigma + it, lambda1, lambda2); fits the growth exponent.
BoundReport bound_pipeline(double lambda1, double lambda2, double sigma,
                           const std::vector<double>& t_grid, double eps,
                           const DomainSample& sample = {});

}  // namespace rsnum
