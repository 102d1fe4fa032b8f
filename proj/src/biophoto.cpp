#include "qdisc/biophoto.hpp"

#include <cmath>

namespace qdisc {
namespace {

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("time must be finite and >= 0");
}

}  // namespace

void GrowthParams::validate() const {
  if (!(c0 >= 0.0) || !(g >= 0.0) || !(gamma >= 0.0) || !(epsilon_l > 0.0) ||
      !std::isfinite(c0 + g + gamma + epsilon_l)) {
    throw DomainError("growth parameters need c0, g, gamma >= 0 and epsilon_l > 0");
  }
}

void SaturationParams::validate() const {
  if (!(theta1 > 0.0 && theta1 <= 1.0) || !(theta2 > 0.0) || !std::isfinite(theta2)) {
    throw DomainError("saturation parameters need theta1 in (0, 1] and theta2 > 0");
  }
}

double concentration_growth(double t, const GrowthParams& p) {
  p.validate();
  require_time(t);
  return -p.c0 * std::expm1(-p.g * t);
}

double concentration_degraded(double t, double total_nbar_per_unit_time, const GrowthParams& p) {
  if (!(total_nbar_per_unit_time >= 0.0)) throw DomainError("photon rate must be >= 0");
  return concentration_growth(t, p) * std::exp(-p.gamma * total_nbar_per_unit_time * t);
}

double beer_lambert(double concentration, double epsilon_l) {
  if (!(concentration >= 0.0) || !std::isfinite(concentration)) {
    throw DomainError("concentration must be finite and >= 0");
  }
  if (!(epsilon_l > 0.0)) throw DomainError("epsilon_l must be > 0");
  return std::pow(10.0, -epsilon_l * concentration);
}

std::vector<TimePoint> error_vs_time(std::span<const double> t_grid, double total_nbar,
                                     const TransmitterConfig& transmitter, const GrowthParams& p,
                                     bool degraded) {
  if (t_grid.empty()) throw DomainError("time grid is empty");
  p.validate();
  std::vector<TimePoint> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const double c = degraded ? concentration_degraded(t, total_nbar, p) : concentration_growth(t, p);
    const double tau = beer_lambert(c, p.epsilon_l);
    out.push_back({t, c, tau, transmitter_error(transmitter, total_nbar, tau)});
  }
  return out;
}

double memory_transmissivity(double total_nbar, const SaturationParams& sp) {
  sp.validate();
  if (!(total_nbar >= 0.0)) throw DomainError("photon number must be >= 0");
  return 1.0 - sp.theta1 * std::exp(-sp.theta2 * total_nbar);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
  const auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

double info_per_cell(double p_error) { return 1.0 - binary_entropy(p_error); }

double memory_readout(double total_nbar, const SaturationParams& sp,
                      const TransmitterConfig& transmitter) {
  const double tau = memory_transmissivity(total_nbar, sp);
  return info_per_cell(transmitter_error(transmitter, total_nbar, tau));
}

}  // namespace qdisc
