#pragma once

// Symmetric and asymmetric discrimination bounds between two Gaussian states
// sigma0 (null hypothesis) and sigma1 (alternative).
//
// All exponents use natural logarithms. M is the number of identical copies
// probed; every M-dependence is a closed-form power of a single-copy
// quantity.

#include <optional>

#include "qdisc/gaussian_core.hpp"
#include "qdisc/s_search.hpp"

namespace qdisc {

/// 2^s / ((x+1)^s - (x-1)^s); equals 1 at x = 1.
double g_function(double x, double s);

/// ((x+1)^s + (x-1)^s) / ((x+1)^s - (x-1)^s); equals 1 at x = 1.
double lambda_function(double x, double s);

/// Fidelity <phi|sigma|phi> between a pure and an arbitrary Gaussian state of
/// the same number of modes.
double gaussian_fidelity_pure_mixed(const GaussianState& pure, const GaussianState& mixed);

/// C_s = Tr(sigma0^s sigma1^(1-s)) for s in (0, 1), from the Williamson forms
/// of both CMs.
double s_overlap(const GaussianState& state0, const GaussianState& state1, double s);

/// C_s as a function of s for a fixed pair. Decompositions are computed once.
class OverlapFunction {
 public:
  OverlapFunction(const GaussianState& state0, const GaussianState& state1);

  double operator()(double s) const;

  /// lim s->0 C_s: the fidelity when sigma0 is pure, otherwise C at s = 1e-6.
  double limit_at_zero() const;
  /// lim s->1 C_s: the fidelity when sigma1 is pure, otherwise C at s = 1 - 1e-6.
  double limit_at_one() const;

  bool state0_pure() const { return pure0_; }
  bool state1_pure() const { return pure1_; }

 private:
  int n_modes_;
  Williamson w0_;
  Williamson w1_;
  Vector d_;
  bool pure0_;
  bool pure1_;
  std::optional<double> fidelity01_;
  std::optional<double> fidelity10_;
};

struct ChernoffResult {
  double overlap;  // inf_s C_s
  double s_star;
};

/// Numerical infimum of C_s over s in [0, 1], endpoints taken as limits.
ChernoffResult chernoff_infimum(const GaussianState& state0, const GaussianState& state1,
                                const SearchOptions& opts = {});

/// Quantum Chernoff bound (1/2) (inf_s C_s)^M. Uses C = F directly when
/// sigma0 is pure.
double qcb(const GaussianState& state0, const GaussianState& state1, int m_copies,
           const SearchOptions& opts = {});

/// Quantum Bhattacharyya bound (1/2) C_{1/2}^M.
double qbb(const GaussianState& state0, const GaussianState& state1, int m_copies);

/// (1 - sqrt(1 - F^M)) / 2 for single-copy fidelity F in (0, 1].
double fidelity_lower_bound(double fidelity, int m_copies);

/// Exact Helstrom error for two pure states with single-copy fidelity F in
/// [0, 1]. Numerically the same expression as fidelity_lower_bound.
double pure_pure_helstrom(double fidelity, int m_copies);

struct BoundSet {
  int m_copies;
  double fidelity_lower;
  double qcb;
  double qbb;
  std::optional<double> helstrom_exact;
};

/// Evaluates the bound chain. sigma0 must be pure (fidelity formula).
/// helstrom_exact is filled automatically when both states are pure, or from
/// `helstrom` when the caller supplies it (e.g. from the Fock oracle).
BoundSet compute_bounds(const GaussianState& state0, const GaussianState& state1, int m_copies,
                        std::optional<double> helstrom = std::nullopt);

enum class HoeffdingClass { finite, infinite, boundary };

/// Quantum Hoeffding bound H(r) = sup_{0<=s<1} (-r s - ln C_s) / (1 - s).
///
/// classification:
///   finite   - supremum attained inside [0, 1)
///   infinite - H(r) = +inf (h_value is +inf, s_star empty)
///   boundary - finite, but attained at the s -> 1 edge (closed forms: r sits
///              exactly on the finite/infinite threshold)
struct HoeffdingResult {
  double r;
  double h_value;
  std::optional<double> s_star;
  HoeffdingClass classification;

  bool is_infinite() const { return classification == HoeffdingClass::infinite; }
};

struct HoeffdingOptions {
  SearchOptions search{};
  double divergence_cap = 1e4;
  /// P still increasing at s = 1 - edge with a value above this -> infinite.
  double growth_threshold = 50.0;
  double edge = 1e-6;
};

HoeffdingResult qhb_numeric(const GaussianState& state0, const GaussianState& state1, double r,
                            const HoeffdingOptions& opts = {});

/// Piecewise Hoeffding bound for a pure reference: -ln F for r >= -ln F,
/// +inf below.
HoeffdingResult hoeffding_pure_piecewise(double fidelity, double r);

/// Same, parametrized by -ln F so that closed-form exponents stay exact.
HoeffdingResult hoeffding_pure_piecewise_log(double neg_log_fidelity, double r);

/// C10 p0 p(1|0) + C01 p1 p(0|1).
double bayes_cost(double c01, double c10, double p0, double p1, double p_fp, double p_fn);

}  // namespace qdisc
