#include "qdisc/cli/figures.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

namespace qdisc::cli {
namespace {

struct NamedFigure {
  FigureId id;
  std::string_view name;
};

constexpr std::array<NamedFigure, 10> kFigures{{
    {FigureId::gain_m1, "gain-m1"},
    {FigureId::gain_m20, "gain-m20"},
    {FigureId::rate_ratio, "rate-ratio"},
    {FigureId::qhb_ratio, "qhb-ratio"},
    {FigureId::qcb_vs_copies, "qcb-vs-copies"},
    {FigureId::optimal_gain, "optimal-gain"},
    {FigureId::growth_gain, "growth-gain"},
    {FigureId::growth_time, "growth-time"},
    {FigureId::degrade_time, "degrade-time"},
    {FigureId::memory, "memory"},
}};

const Range kNbarAxis{0.1, 10.0, 100};
const Range kTauAxis{0.0, 0.99, 100};
const Range kTimeAxis{0.0, 1.0, 201};

std::string describe(const char* name, const Range& r) {
  std::ostringstream os;
  os << name << "=[" << format_number(r.start) << "," << format_number(r.stop) << "]x" << r.points
     << (r.log_spaced ? "log" : "");
  return os.str();
}

std::string_view ratio_label(RatioClass c) {
  switch (c) {
    case RatioClass::finite: return "finite";
    case RatioClass::infinite: return "infinite";
    case RatioClass::zero: return "zero";
    case RatioClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

const TransmitterConfig kCoherent{TransmitterKind::coherent, CopyCount::finite(1)};
const TransmitterConfig kEprSingle{TransmitterKind::epr, CopyCount::finite(1)};
const TransmitterConfig kEprBroadband{TransmitterKind::epr, CopyCount::broadband()};

void fill_nbar_tau(const FigureSpec& spec, Table& t) {
  const auto nbars = spec.outer.values();
  const auto taus = spec.inner.values();
  switch (spec.id) {
    case FigureId::gain_m1:
    case FigureId::gain_m20:
      t.columns = {"nbar", "tau", "p_coh", "p_quant_qcb", "delta"};
      for (double n : nbars)
        for (double tau : taus) {
          const ComparisonPoint p = compare(n, tau, spec.copies);
          t.rows.push_back({n, tau, p.p_coh, p.p_quant_qcb, p.delta});
        }
      break;
    case FigureId::rate_ratio:
      t.columns = {"nbar", "tau", "kappa_coh", "kappa_quant", "rate_ratio"};
      for (double n : nbars)
        for (double tau : taus)
          t.rows.push_back({n, tau, kappa_coherent(n, tau), kappa_quantum(n, tau), rate_ratio(n, tau)});
      break;
    case FigureId::qhb_ratio:
      t.columns = {"nbar", "tau", "r_coh", "r_quant", "h_coh", "h_quant", "r_qhb", "class", "region"};
      for (double n : nbars)
        for (double tau : taus) {
          const double rc = kappa_coherent(n, tau);
          const double rq = kappa_quantum(n, tau);
          const HoeffdingResult hc = coherent_qhb(n, tau, rc);
          const HoeffdingResult hq = epr_qhb(n, tau, rc, spec.hoeffding);
          const ClassifiedRatio ratio = classify_qhb_ratio(hq, hc);
          Cell value = ratio.classification == RatioClass::indeterminate
                           ? Cell{std::string("indeterminate")}
                           : Cell{ratio.value};
          t.rows.push_back({n, tau, rc, rq, hc.h_value, hq.h_value, std::move(value),
                            std::string(ratio_label(ratio.classification)),
                            std::string(rc < rq ? "r_coh<r_quant" : "ignored")});
        }
      break;
    default:
      break;
  }
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
  for (const auto& f : kFigures)
    if (f.name == name) return f.id;
  return std::nullopt;
}

std::string_view figure_name(FigureId id) {
  for (const auto& f : kFigures)
    if (f.id == id) return f.name;
  return "unknown";
}

const std::vector<FigureId>& all_figures() {
  static const std::vector<FigureId> ids = [] {
    std::vector<FigureId> v;
    for (const auto& f : kFigures) v.push_back(f.id);
    return v;
  }();
  return ids;
}

std::vector<double> Range::values() const {
  if (points < 2) throw DomainError("grid resolution must be >= 2");
  if (!(stop > start)) throw DomainError("grid range is empty");
  if (log_spaced && !(start > 0.0)) throw DomainError("log-spaced grid needs start > 0");
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / (points - 1);
    if (log_spaced) {
      v[i] = std::exp(std::log(start) + u * (std::log(stop) - std::log(start)));
    } else {
      v[i] = start + u * (stop - start);
    }
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

void FigureSpec::validate() const {
  outer.values();
  switch (id) {
    case FigureId::growth_time:
    case FigureId::degrade_time:
    case FigureId::memory:
      break;
    default:
      inner.values();
  }
  if (copies < 1) throw DomainError("copies must be >= 1");
  if (!(total_nbar >= 0.0)) throw DomainError("total photon number must be >= 0");
  growth.validate();
  saturation.validate();
}

SaturationParams memory_panel(char panel) {
  switch (panel) {
    case 'a': return {5e-3, 1e-4};
    case 'b': return {1e-2, 7e-4};
    case 'c': return {5e-2, 7e-3};
    case 'd': return {1e-1, 28e-3};
  }
  throw DomainError(std::string("unknown memory panel '") + panel + "'");
}

FigureSpec default_figure_spec(FigureId id) {
  FigureSpec s{};
  s.id = id;
  s.outer = kNbarAxis;
  s.inner = kTauAxis;
  switch (id) {
    case FigureId::gain_m1:
    case FigureId::rate_ratio:
    case FigureId::qhb_ratio:
      break;
    case FigureId::gain_m20:
      s.copies = 20;
      break;
    case FigureId::qcb_vs_copies:
      s.outer = kTauAxis;
      s.inner = Range{1.0, 50.0, 50};
      s.total_nbar = 1.0;
      break;
    case FigureId::optimal_gain:
      s.outer = Range{0.5, 50.0, 100};
      break;
    case FigureId::growth_gain:
      s.outer = Range{10.0, 1000.0, 100};
      s.inner = Range{0.0, 1.0, 101};
      s.growth = GrowthParams{1.0, 0.2, 0.0, 1.0};
      break;
    case FigureId::growth_time:
      s.outer = kTimeAxis;
      s.total_nbar = 500.0;
      s.growth = GrowthParams{1.0, 0.2, 0.0, 1.0};
      break;
    case FigureId::degrade_time:
      s.outer = kTimeAxis;
      s.total_nbar = 100.0;
      s.growth = GrowthParams{1.0, 10.0, 1.0, 1.0};
      break;
    case FigureId::memory:
      s.outer = Range{1.0, 1e5, 251, true};
      s.panel = 'a';
      s.saturation = memory_panel('a');
      break;
  }
  return s;
}

Table run_figure(const FigureSpec& spec) {
  spec.validate();
  Table t;
  t.comments.push_back(std::string(kToolVersion) + " figure=" + std::string(figure_name(spec.id)));

  std::ostringstream params;
  switch (spec.id) {
    case FigureId::gain_m1:
    case FigureId::gain_m20:
    case FigureId::rate_ratio:
      params << describe("nbar", spec.outer) << ' ' << describe("tau", spec.inner)
             << " copies=" << spec.copies;
      fill_nbar_tau(spec, t);
      break;
    case FigureId::qhb_ratio:
      params << describe("nbar", spec.outer) << ' ' << describe("tau", spec.inner)
             << " r=r_coh s_grid=" << spec.hoeffding.search.grid_points
             << " divergence_cap=" << format_number(spec.hoeffding.divergence_cap);
      fill_nbar_tau(spec, t);
      break;
    case FigureId::qcb_vs_copies: {
      params << describe("tau", spec.outer) << ' ' << describe("copies", spec.inner)
             << " total_nbar=" << format_number(spec.total_nbar);
      t.columns = {"tau", "copies", "nbar_per_copy", "p_quant_qcb", "p_quant_broadband"};
      std::vector<long> ms;
      for (double m : spec.inner.values()) {
        const long rounded = std::lround(m);
        if (ms.empty() || ms.back() != rounded) ms.push_back(rounded);
      }
      for (double tau : spec.outer.values()) {
        const double limit = epr_qcb_broadband(spec.total_nbar, tau);
        for (long m : ms) {
          const double n = spec.total_nbar / static_cast<double>(m);
          t.rows.push_back({tau, m, n, epr_qcb(n, tau, static_cast<int>(m)), limit});
        }
      }
      break;
    }
    case FigureId::optimal_gain:
      params << describe("total_nbar", spec.outer) << ' ' << describe("tau", spec.inner);
      t.columns = {"total_nbar", "tau", "p_coh", "p_quant_broadband", "delta_opt"};
      for (double n : spec.outer.values())
        for (double tau : spec.inner.values())
          t.rows.push_back({n, tau, coherent_error(n, tau), epr_qcb_broadband(n, tau),
                            optimal_gain(n, tau)});
      break;
    case FigureId::growth_gain: {
      params << describe("total_nbar", spec.outer) << ' ' << describe("t", spec.inner)
             << " c0=" << format_number(spec.growth.c0) << " g=" << format_number(spec.growth.g)
             << " epsilon_l=" << format_number(spec.growth.epsilon_l);
      t.columns = {"total_nbar", "t", "concentration", "tau", "p_coh", "p_epr_m1",
                   "p_epr_broadband", "delta_1", "delta_opt"};
      for (double n : spec.outer.values())
        for (double time : spec.inner.values()) {
          const double c = concentration_growth(time, spec.growth);
          const double tau = beer_lambert(c, spec.growth.epsilon_l);
          const double pc = transmitter_error(kCoherent, n, tau);
          const double p1 = transmitter_error(kEprSingle, n, tau);
          const double pb = transmitter_error(kEprBroadband, n, tau);
          t.rows.push_back({n, time, c, tau, pc, p1, pb, pc - p1, pc - pb});
        }
      break;
    }
    case FigureId::growth_time:
    case FigureId::degrade_time: {
      const bool degraded = spec.id == FigureId::degrade_time;
      params << describe("t", spec.outer) << " total_nbar=" << format_number(spec.total_nbar)
             << " c0=" << format_number(spec.growth.c0) << " g=" << format_number(spec.growth.g)
             << " gamma=" << format_number(degraded ? spec.growth.gamma : 0.0)
             << " epsilon_l=" << format_number(spec.growth.epsilon_l);
      t.columns = {"t", "concentration", "p_coh", "p_epr_m1", "p_epr_broadband"};
      const auto ts = spec.outer.values();
      const auto coh = error_vs_time(ts, spec.total_nbar, kCoherent, spec.growth, degraded);
      const auto one = error_vs_time(ts, spec.total_nbar, kEprSingle, spec.growth, degraded);
      const auto wide = error_vs_time(ts, spec.total_nbar, kEprBroadband, spec.growth, degraded);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        t.rows.push_back({ts[i], coh[i].concentration, coh[i].p_error, one[i].p_error, wide[i].p_error});
      }
      break;
    }
    case FigureId::memory: {
      params << describe("total_nbar", spec.outer) << " panel=" << spec.panel
             << " theta1=" << format_number(spec.saturation.theta1)
             << " theta2=" << format_number(spec.saturation.theta2);
      t.columns = {"total_nbar", "tau", "i_coh", "i_epr_m1", "i_epr_broadband"};
      for (double n : spec.outer.values()) {
        t.rows.push_back({n, memory_transmissivity(n, spec.saturation),
                          memory_readout(n, spec.saturation, kCoherent),
                          memory_readout(n, spec.saturation, kEprSingle),
                          memory_readout(n, spec.saturation, kEprBroadband)});
      }
      break;
    }
  }
  t.comments.push_back("parameters: " + params.str());
  return t;
}

}  // namespace qdisc::cli
