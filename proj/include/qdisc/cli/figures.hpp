#pragma once

// Parameter sweeps behind each published figure. Defaults reproduce the
// figure captions; everything can be overridden from the command line.

#include <optional>
#include <string_view>
#include <vector>

#include "qdisc/biophoto.hpp"
#include "qdisc/cli/table.hpp"

namespace qdisc::cli {

enum class FigureId {
  gain_m1,        // Delta(nbar, tau), M = 1
  gain_m20,       // Delta(nbar, tau), M = 20
  rate_ratio,     // R(nbar, tau)
  qhb_ratio,      // R_QHB at r = r_coh
  qcb_vs_copies,  // EPR QCB vs (tau, M) at fixed total energy
  optimal_gain,   // Delta_opt(total_nbar, tau)
  growth_gain,    // Delta_1 and Delta_opt over (total_nbar, t)
  growth_time,    // error probabilities vs t, pure growth
  degrade_time,   // error probabilities vs t, growth + photo-degradation
  memory,         // bits per cell vs total_nbar
};

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string_view figure_name(FigureId id);
const std::vector<FigureId>& all_figures();

/// Inclusive grid of `points` values, linear or logarithmic.
struct Range {
  double start;
  double stop;
  int points;
  bool log_spaced = false;

  std::vector<double> values() const;
};

struct FigureSpec {
  FigureId id;
  Range outer;  // first CSV column
  Range inner;  // second CSV column (ignored by one-dimensional figures)
  int copies = 1;
  double total_nbar = 1.0;
  GrowthParams growth{};
  SaturationParams saturation{5e-3, 1e-4};
  char panel = 'a';
  HoeffdingOptions hoeffding{};

  void validate() const;
};

FigureSpec default_figure_spec(FigureId id);

/// Theta parameters of the four memory panels 'a'..'d'.
SaturationParams memory_panel(char panel);

Table run_figure(const FigureSpec& spec);

}  // namespace qdisc::cli
