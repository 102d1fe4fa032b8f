#pragma once

// Application models: growth of an absorbing species read through the
// Beer-Lambert law, photo-degradation of that species, and a photo-degradable
// optical memory read cell by cell.
//
// Time is in abstract units. In the degradation model the sample is taken to
// have received total_nbar photons per unit time up to the query time t, so
// its concentration carries the factor exp(-gamma * total_nbar * t), while the
// readout itself uses total_nbar photons.

#include <span>
#include <vector>

#include "qdisc/transmitters.hpp"

namespace qdisc {

struct GrowthParams {
  double c0 = 1.0;
  double g = 0.2;
  double gamma = 0.0;
  double epsilon_l = 1.0;

  void validate() const;
};

struct SaturationParams {
  double theta1;
  double theta2;

  void validate() const;
};

double concentration_growth(double t, const GrowthParams& p);
double concentration_degraded(double t, double total_nbar_per_unit_time, const GrowthParams& p);

/// tau = 10^(-epsilon_l * c).
double beer_lambert(double concentration, double epsilon_l = 1.0);

struct TimePoint {
  double t;
  double concentration;
  double tau;
  double p_error;
};

std::vector<TimePoint> error_vs_time(std::span<const double> t_grid, double total_nbar,
                                     const TransmitterConfig& transmitter, const GrowthParams& p,
                                     bool degraded);

/// tau = 1 - theta1 * exp(-theta2 * total_nbar).
double memory_transmissivity(double total_nbar, const SaturationParams& sp);

/// Binary Shannon entropy in bits, with 0 log 0 = 0.
double binary_entropy(double p);

/// 1 - H2(p) bits.
double info_per_cell(double p_error);

double memory_readout(double total_nbar, const SaturationParams& sp,
                      const TransmitterConfig& transmitter);

}  // namespace qdisc
