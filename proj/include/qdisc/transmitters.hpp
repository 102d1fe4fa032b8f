#pragma once

// Closed-form performance of the coherent-state (classical) and EPR/TMSV
// (quantum) transmitters for detecting a pure-loss channel of transmissivity
// tau against the identity channel.

#include <optional>

#include "qdisc/bounds.hpp"

namespace qdisc {

enum class TransmitterKind { coherent, epr };

/// M copies or the M -> infinity limit at fixed total energy.
struct CopyCount {
  static CopyCount finite(int m);
  static CopyCount broadband() { return CopyCount{0}; }

  bool is_broadband() const { return m == 0; }
  int value() const;

  int m;
};

struct TransmitterConfig {
  TransmitterKind kind;
  CopyCount copies;
};

/// Error probability used for a transmitter at total energy total_nbar spread
/// over its copies (global energy constraint): exact Helstrom for the coherent
/// transmitter, the QCB for the EPR transmitter.
double transmitter_error(const TransmitterConfig& config, double total_nbar, double tau);

double coherent_error(double total_nbar, double tau);
double coherent_qcb(double total_nbar, double tau);
HoeffdingResult coherent_qhb(double nbar, double tau, double r);

double epr_qcb(double nbar, double tau, int m_copies);
double epr_qcb_broadband(double total_nbar, double tau);
HoeffdingResult epr_qhb(double nbar, double tau, double r, const HoeffdingOptions& opts = {});

/// Delta = coherent_error(M nbar, tau) - epr_qcb(nbar, tau, M).
double gain(double nbar, double tau, int m_copies);
/// Coherent error minus the broadband EPR limit at the same total energy.
double optimal_gain(double total_nbar, double tau);

/// Error exponents per copy and the thresholds of the Hoeffding bounds.
double kappa_coherent(double nbar, double tau);  // r_coh
double kappa_quantum(double nbar, double tau);   // r_quant

/// kappa_quant / kappa_coh. tau = 1 is a 0/0 form and returns 1 by convention;
/// nbar = 0 returns the limit 2 / (1 - sqrt(tau)).
double rate_ratio(double nbar, double tau);

enum class RatioClass { finite, infinite, zero, indeterminate };

struct ClassifiedRatio {
  RatioClass classification;
  double value;  // meaningful for finite and zero; +inf for infinite; NaN otherwise
};

/// H_quant(r) / H_coh(r) with the quantum QHB evaluated numerically.
ClassifiedRatio qhb_ratio(double nbar, double tau, double r, const HoeffdingOptions& opts = {});

/// Ratio of two already evaluated Hoeffding bounds (quantum over coherent).
ClassifiedRatio classify_qhb_ratio(const HoeffdingResult& h_quant, const HoeffdingResult& h_coh);

struct ComparisonPoint {
  double nbar;
  double tau;
  int m_copies;
  double p_coh;
  double p_quant_qcb;
  double delta;
  double r_coh;
  double r_quant;
  double rate_ratio;
};

ComparisonPoint compare(double nbar, double tau, int m_copies);

}  // namespace qdisc
