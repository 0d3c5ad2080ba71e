#include "rsnum/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsnum {

ExponentFit fit_log_power(std::vector<std::pair<double, double>> grid) {
  std::sort(grid.begin(), grid.end());
  ExponentFit fit;
  fit.grid = grid;
  std::vector<std::pair<double, double>> pts;  // (log(1+t), log v)
  for (auto& [t, v] : grid)
    if (v > 0.0 && std::isfinite(v)) pts.push_back({std::log1p(t), std::log(v)});
  if (pts.size() < 2) {
    fit.degenerate = true;
    if (pts.size() == 1) fit.fitted_constant = std::exp(pts[0].second);
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = (double)pts.size();
  double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-12 * (n * sxx + 1.0)) {
    fit.degenerate = true;  // all abscissas equal
    return fit;
  }
  fit.fitted_exponent = (n * sxy - sx * sy) / det;
  double intercept = (sy * sxx - sx * sxy) / det;
  fit.fitted_constant = std::exp(intercept);
  double ss = 0;
  for (auto& [x, y] : pts) {
    double r = y - (intercept + fit.fitted_exponent * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace rsnum
