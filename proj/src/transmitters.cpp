#include "qdisc/transmitters.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qdisc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_energy(double n) {
  if (!std::isfinite(n) || n < 0.0) throw DomainError("photon number must be finite and >= 0");
}

void require_tau(double tau) {
  if (!std::isfinite(tau) || tau < 0.0 || tau > 1.0) {
    throw DomainError("transmissivity must lie in [0, 1]");
  }
}

void require_copies(int m) {
  if (m < 1) throw DomainError("number of copies must be >= 1");
}

double one_minus_sqrt(double tau) { return 1.0 - std::sqrt(tau); }

}  // namespace

CopyCount CopyCount::finite(int m) {
  require_copies(m);
  return CopyCount{m};
}

int CopyCount::value() const {
  if (is_broadband()) throw DomainError("broadband transmitter has no finite copy count");
  return m;
}

double transmitter_error(const TransmitterConfig& config, double total_nbar, double tau) {
  switch (config.kind) {
    case TransmitterKind::coherent:
      return coherent_error(total_nbar, tau);
    case TransmitterKind::epr:
      if (config.copies.is_broadband()) return epr_qcb_broadband(total_nbar, tau);
      return epr_qcb(total_nbar / config.copies.value(), tau, config.copies.value());
  }
  throw DomainError("unknown transmitter kind");
}

double coherent_error(double total_nbar, double tau) {
  require_energy(total_nbar);
  require_tau(tau);
  const double x = one_minus_sqrt(tau);
  // sqrt(1 - e^-k) written with expm1 so that tau -> 1 keeps its precision.
  return 0.5 * (1.0 - std::sqrt(-std::expm1(-total_nbar * x * x)));
}

double coherent_qcb(double total_nbar, double tau) {
  require_energy(total_nbar);
  require_tau(tau);
  const double x = one_minus_sqrt(tau);
  return 0.5 * std::exp(-total_nbar * x * x);
}

HoeffdingResult coherent_qhb(double nbar, double tau, double r) {
  require_energy(nbar);
  require_tau(tau);
  const double x = one_minus_sqrt(tau);
  return hoeffding_pure_piecewise_log(nbar * x * x, r);
}

double epr_qcb(double nbar, double tau, int m_copies) {
  require_energy(nbar);
  require_tau(tau);
  require_copies(m_copies);
  // (1 + n(1 - sqrt(tau)))^(-2M) evaluated in log space.
  return 0.5 * std::exp(-2.0 * m_copies * std::log1p(nbar * one_minus_sqrt(tau)));
}

double epr_qcb_broadband(double total_nbar, double tau) {
  require_energy(total_nbar);
  require_tau(tau);
  return 0.5 * std::exp(-2.0 * total_nbar * one_minus_sqrt(tau));
}

HoeffdingResult epr_qhb(double nbar, double tau, double r, const HoeffdingOptions& opts) {
  require_energy(nbar);
  require_tau(tau);
  const GaussianState input = tmsv_state(nbar);
  const HoeffdingResult h = qhb_numeric(input, loss_on_signal(input, tau), r, opts);
  const double plateau = kappa_quantum(nbar, tau);
  if (r >= plateau && (h.is_infinite() || std::abs(h.h_value - plateau) > 1e-6)) {
    throw NumericError("numerical QHB departs from its closed-form plateau 2 ln[1 + n(1 - sqrt tau)]");
  }
  return h;
}

double gain(double nbar, double tau, int m_copies) {
  require_copies(m_copies);
  return coherent_error(m_copies * nbar, tau) - epr_qcb(nbar, tau, m_copies);
}

double optimal_gain(double total_nbar, double tau) {
  return coherent_error(total_nbar, tau) - epr_qcb_broadband(total_nbar, tau);
}

double kappa_coherent(double nbar, double tau) {
  require_energy(nbar);
  require_tau(tau);
  const double x = one_minus_sqrt(tau);
  return nbar * x * x;
}

double kappa_quantum(double nbar, double tau) {
  require_energy(nbar);
  require_tau(tau);
  return 2.0 * std::log1p(nbar * one_minus_sqrt(tau));
}

double rate_ratio(double nbar, double tau) {
  const double kc = kappa_coherent(nbar, tau);
  const double kq = kappa_quantum(nbar, tau);
  if (tau == 1.0) return 1.0;
  // nbar -> 0 limit of 2 ln(1 + n x) / (n x^2).
  if (kc == 0.0) return 2.0 / one_minus_sqrt(tau);
  return kq / kc;
}

ClassifiedRatio qhb_ratio(double nbar, double tau, double r, const HoeffdingOptions& opts) {
  return classify_qhb_ratio(epr_qhb(nbar, tau, r, opts), coherent_qhb(nbar, tau, r));
}

ClassifiedRatio classify_qhb_ratio(const HoeffdingResult& hq, const HoeffdingResult& hc) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (hc.is_infinite() && hq.is_infinite()) return {RatioClass::indeterminate, nan};
  if (hq.is_infinite()) return {RatioClass::infinite, kInf};
  if (hc.is_infinite()) return {RatioClass::zero, 0.0};
  if (hc.h_value == 0.0) {
    // Both exponents vanish only at tau = 1 (or nbar = 0); same convention as rate_ratio.
    return hq.h_value == 0.0 ? ClassifiedRatio{RatioClass::finite, 1.0}
                             : ClassifiedRatio{RatioClass::infinite, kInf};
  }
  return {RatioClass::finite, hq.h_value / hc.h_value};
}

ComparisonPoint compare(double nbar, double tau, int m_copies) {
  ComparisonPoint p{};
  p.nbar = nbar;
  p.tau = tau;
  p.m_copies = m_copies;
  p.p_coh = coherent_error(m_copies * nbar, tau);
  p.p_quant_qcb = epr_qcb(nbar, tau, m_copies);
  p.delta = p.p_coh - p.p_quant_qcb;
  p.r_coh = kappa_coherent(nbar, tau);
  p.r_quant = kappa_quantum(nbar, tau);
  p.rate_ratio = rate_ratio(nbar, tau);
  return p;
}

}  // namespace qdisc
