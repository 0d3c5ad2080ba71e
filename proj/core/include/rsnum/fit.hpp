#pragma once

#include <utility>
#include <vector>

#include "rsnum/types.hpp"

namespace rsnum {

/// Least-squares fit of log(value) against log(1 + t) over a scan grid.
struct ExponentFit {
  std::vector<std::pair<double, double>> grid;  // (t, value), t increasing
  double fitted_exponent = 0.0;
  double fitted_constant = 0.0;  // value ~ constant * (1+t)^exponent
  double residual = 0.0;         // rms residual in log space
  bool degenerate = false;       // fewer than 2 usable points
};

ExponentFit fit_log_power(std::vector<std::pair<double, double>> grid);

}  // namespace rsnum
