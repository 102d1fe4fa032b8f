#include "qdisc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qdisc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointS = 1e-6;

// Round-off can push a computed fidelity of identical states just above 1.
double checked_fidelity(double f) {
  if (!(f > 0.0 && f <= 1.0 + 1e-12)) throw DomainError("fidelity must lie in (0, 1]");
  return std::min(f, 1.0);
}

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("parameter s must lie in (0, 1]");
}

void require_x(double x) {
  if (!(x >= 1.0) || !std::isfinite(x)) throw DomainError("argument must be >= 1");
}

void require_copies(int m) {
  if (m < 1) throw DomainError("number of copies must be >= 1");
}

// (x+1)^s - (x-1)^s = (x-1)^s * expm1(s * ln((x+1)/(x-1))), which stays
// accurate for small s and for x close to 1.
double log_ratio(double x) { return std::log1p(2.0 / (x - 1.0)); }

// Symplectic eigenvalues computed from rounded CMs can dip a hair below 1.
Vector clamp_spectrum(const Vector& nu) {
  Vector out = nu;
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if (out(k) < 1.0 - kPhysicalTol) throw DomainError("unphysical CM: symplectic eigenvalue < 1");
    if (out(k) < 1.0 + 1e-13) out(k) = 1.0;
  }
  return out;
}

}  // namespace

double g_function(double x, double s) {
  require_x(x);
  require_s(s);
  if (x == 1.0) return 1.0;
  const double e = std::expm1(s * log_ratio(x));
  return std::exp(s * (std::numbers::ln2 - std::log(x - 1.0))) / e;
}

double lambda_function(double x, double s) {
  require_x(x);
  require_s(s);
  if (x == 1.0) return 1.0;
  const double e = std::expm1(s * log_ratio(x));
  return (e + 2.0) / e;
}

double gaussian_fidelity_pure_mixed(const GaussianState& pure, const GaussianState& mixed) {
  if (pure.n_modes() != mixed.n_modes()) throw DomainError("states have different mode counts");
  if (!pure.is_pure()) throw DomainError("first argument of the fidelity formula must be pure");
  const Matrix sum = pure.cm() + mixed.cm();
  Eigen::LLT<Matrix> llt(sum);
  if (llt.info() != Eigen::Success) throw NumericError("V0 + V1 is not positive definite");
  const Vector d = pure.mean() - mixed.mean();
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double quad = d.dot(llt.solve(d));
  const int n = pure.n_modes();
  return std::exp(n * std::numbers::ln2 - 0.5 * log_det - 0.5 * quad);
}

OverlapFunction::OverlapFunction(const GaussianState& state0, const GaussianState& state1)
    : n_modes_(state0.n_modes()),
      w0_(williamson(state0)),
      w1_(williamson(state1)),
      d_(state0.mean() - state1.mean()) {
  if (state0.n_modes() != state1.n_modes()) throw DomainError("states have different mode counts");
  w0_.nu = clamp_spectrum(w0_.nu);
  w1_.nu = clamp_spectrum(w1_.nu);
  pure0_ = (w0_.nu.array() - 1.0).abs().maxCoeff() <= kPurityTol;
  pure1_ = (w1_.nu.array() - 1.0).abs().maxCoeff() <= kPurityTol;
  if (pure0_) fidelity01_ = gaussian_fidelity_pure_mixed(state0, state1);
  if (pure1_) fidelity10_ = gaussian_fidelity_pure_mixed(state1, state0);
}

double OverlapFunction::operator()(double s) const {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("s-overlap requires s in (0, 1)");
  double log_pi = n_modes_ * std::numbers::ln2;
  Vector lam0(2 * n_modes_);
  Vector lam1(2 * n_modes_);
  for (int k = 0; k < n_modes_; ++k) {
    log_pi += std::log(g_function(w0_.nu(k), s)) + std::log(g_function(w1_.nu(k), 1.0 - s));
    lam0(2 * k) = lam0(2 * k + 1) = lambda_function(w0_.nu(k), s);
    lam1(2 * k) = lam1(2 * k + 1) = lambda_function(w1_.nu(k), 1.0 - s);
  }
  Matrix sigma = w0_.s * lam0.asDiagonal() * w0_.s.transpose() +
                 w1_.s * lam1.asDiagonal() * w1_.s.transpose();
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  Eigen::LLT<Matrix> llt(sigma);
  if (llt.info() != Eigen::Success) throw NumericError("Sigma_s is not positive definite");
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double quad = d_.dot(llt.solve(d_));
  return std::exp(log_pi - 0.5 * log_det - 0.5 * quad);
}

double OverlapFunction::limit_at_zero() const {
  return fidelity01_ ? *fidelity01_ : (*this)(kEndpointS);
}

double OverlapFunction::limit_at_one() const {
  return fidelity10_ ? *fidelity10_ : (*this)(1.0 - kEndpointS);
}

double s_overlap(const GaussianState& state0, const GaussianState& state1, double s) {
  return OverlapFunction(state0, state1)(s);
}

ChernoffResult chernoff_infimum(const GaussianState& state0, const GaussianState& state1,
                                const SearchOptions& opts) {
  const OverlapFunction c(state0, state1);
  const Extremum inner = grid_golden_minimize([&c](double s) { return c(s); }, opts);
  ChernoffResult best{inner.value, inner.s};
  const double at0 = c.limit_at_zero();
  const double at1 = c.limit_at_one();
  if (at0 <= best.overlap) best = {at0, 0.0};
  if (at1 < best.overlap) best = {at1, 1.0};
  return best;
}

double qcb(const GaussianState& state0, const GaussianState& state1, int m_copies,
           const SearchOptions& opts) {
  require_copies(m_copies);
  const double c = state0.is_pure() ? gaussian_fidelity_pure_mixed(state0, state1)
                                    : chernoff_infimum(state0, state1, opts).overlap;
  return 0.5 * std::pow(c, m_copies);
}

double qbb(const GaussianState& state0, const GaussianState& state1, int m_copies) {
  require_copies(m_copies);
  return 0.5 * std::pow(s_overlap(state0, state1, 0.5), m_copies);
}

namespace {
// (1 - sqrt(1 - x)) / 2 without cancellation for small x
double one_minus_sqrt_half(double x) { return 0.5 * x / (1.0 + std::sqrt(1.0 - x)); }
}  // namespace

double fidelity_lower_bound(double fidelity, int m_copies) {
  require_copies(m_copies);
  fidelity = checked_fidelity(fidelity);
  return one_minus_sqrt_half(std::pow(fidelity, m_copies));
}

double pure_pure_helstrom(double fidelity, int m_copies) {
  require_copies(m_copies);
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw DomainError("fidelity must lie in [0, 1]");
  return one_minus_sqrt_half(std::pow(fidelity, m_copies));
}

BoundSet compute_bounds(const GaussianState& state0, const GaussianState& state1, int m_copies,
                        std::optional<double> helstrom) {
  require_copies(m_copies);
  const double f = gaussian_fidelity_pure_mixed(state0, state1);
  BoundSet b{m_copies, fidelity_lower_bound(f, m_copies), qcb(state0, state1, m_copies),
             qbb(state0, state1, m_copies), helstrom};
  if (!b.helstrom_exact && state1.is_pure()) b.helstrom_exact = pure_pure_helstrom(f, m_copies);
  return b;
}

HoeffdingResult qhb_numeric(const GaussianState& state0, const GaussianState& state1, double r,
                            const HoeffdingOptions& opts) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("r must be finite and >= 0");
  const OverlapFunction c(state0, state1);
  const auto p = [&c, r](double s) { return (-r * s - std::log(c(s))) / (1.0 - s); };

  Extremum best = grid_golden_maximize(p, opts.search);
  const double p0 = -std::log(c.limit_at_zero());
  if (p0 >= best.value) best = {0.0, p0};

  const double s_edge = 1.0 - opts.edge;
  const double p_edge = p(s_edge);
  const double p_before = p(1.0 - 2.0 * opts.edge);
  const bool still_growing = p_edge > p_before && p_edge > opts.growth_threshold;
  if (still_growing || best.value > opts.divergence_cap || p_edge > opts.divergence_cap) {
    return {r, kInf, std::nullopt, HoeffdingClass::infinite};
  }
  if (p_edge > best.value) {
    return {r, std::max(0.0, p_edge), s_edge, HoeffdingClass::boundary};
  }
  return {r, std::max(0.0, best.value), best.s, HoeffdingClass::finite};
}

HoeffdingResult hoeffding_pure_piecewise(double fidelity, double r) {
  return hoeffding_pure_piecewise_log(-std::log(checked_fidelity(fidelity)), r);
}

HoeffdingResult hoeffding_pure_piecewise_log(double neg_log_fidelity, double r) {
  if (!(neg_log_fidelity >= 0.0)) throw DomainError("-ln F must be >= 0");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("r must be finite and >= 0");
  const double threshold = neg_log_fidelity;
  if (r < threshold) return {r, kInf, std::nullopt, HoeffdingClass::infinite};
  // For pure pairs C_s is constant, so every s attains the supremum at the
  // threshold; s = 0 is reported.
  const auto cls = (r == threshold && threshold > 0.0) ? HoeffdingClass::boundary
                                                       : HoeffdingClass::finite;
  return {r, threshold, 0.0, cls};
}

double bayes_cost(double c01, double c10, double p0, double p1, double p_fp, double p_fn) {
  if (!(c01 >= 0.0) || !(c10 >= 0.0)) throw DomainError("costs must be non-negative");
  for (double p : {p0, p1, p_fp, p_fn}) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probabilities must lie in [0, 1]");
  }
  if (std::abs(p0 + p1 - 1.0) > 1e-12) throw DomainError("priors must sum to 1");
  return c10 * p0 * p_fp + c01 * p1 * p_fn;
}

}  // namespace qdisc
