#include "qdisc/s_search.hpp"

#include <cmath>
#include <stdexcept>

#include "qdisc/errors.hpp"

namespace qdisc {
namespace {

Extremum golden_maximize(const std::function<double(double)>& f, double lo, double hi,
                         Extremum best, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  // Never return something worse than the grid point we started from.
  if (f1 > best.value) best = {x1, f1};
  if (f2 > best.value) best = {x2, f2};
  return best;
}

}  // namespace

Extremum grid_golden_maximize(const std::function<double(double)>& f, const SearchOptions& opts) {
  if (opts.grid_points < 2) throw DomainError("search grid needs at least two points");
  if (!(opts.s_lo < opts.s_hi)) throw DomainError("search interval is empty");
  const int n = opts.grid_points;
  const double step = (opts.s_hi - opts.s_lo) / (n - 1);
  int best_i = 0;
  Extremum best{opts.s_lo, f(opts.s_lo)};
  for (int i = 1; i < n; ++i) {
    const double s = (i == n - 1) ? opts.s_hi : opts.s_lo + step * i;
    const double v = f(s);
    if (v > best.value) {
      best = {s, v};
      best_i = i;
    }
  }
  if (!std::isfinite(best.value)) return best;
  const double lo = opts.s_lo + step * std::max(0, best_i - 1);
  const double hi = std::min(opts.s_hi, opts.s_lo + step * std::min(n - 1, best_i + 1));
  return golden_maximize(f, lo, hi, best, opts.s_tol);
}

Extremum grid_golden_minimize(const std::function<double(double)>& f, const SearchOptions& opts) {
  Extremum e = grid_golden_maximize([&f](double s) { return -f(s); }, opts);
  e.value = -e.value;
  return e;
}

}  // namespace qdisc
