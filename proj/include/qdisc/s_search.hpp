#pragma once

// One-dimensional search over the Chernoff parameter s. A uniform grid locates
// the best point, then golden-section refinement runs on the bracket formed by
// its two grid neighbours.

#include <functional>

namespace qdisc {

struct SearchOptions {
  int grid_points = 200;
  double s_lo = 1e-4;
  double s_hi = 1.0 - 1e-4;
  double s_tol = 1e-9;
};

struct Extremum {
  double s;
  double value;
};

Extremum grid_golden_maximize(const std::function<double(double)>& f, const SearchOptions& opts);
Extremum grid_golden_minimize(const std::function<double(double)>& f, const SearchOptions& opts);

}  // namespace qdisc
