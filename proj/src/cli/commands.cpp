#include "qdisc/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdisc/bounds.hpp"
#include "qdisc/cli/figures.hpp"
#include "qdisc/fock_oracle.hpp"
#include "qdisc/transmitters.hpp"

namespace qdisc::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view class_label(HoeffdingClass c) {
  switch (c) {
    case HoeffdingClass::finite: return "finite";
    case HoeffdingClass::infinite: return "infinite";
    case HoeffdingClass::boundary: return "boundary";
  }
  return "unknown";
}

std::string_view class_label(RatioClass c) {
  switch (c) {
    case RatioClass::finite: return "finite";
    case RatioClass::infinite: return "infinite";
    case RatioClass::zero: return "zero";
    case RatioClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

/// Ordered key/value record; rendered as a JSON object or a one-row CSV.
struct Record {
  std::vector<std::pair<std::string, Cell>> fields;

  void add(std::string key, Cell value) { fields.emplace_back(std::move(key), std::move(value)); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "csv") {
      Table t;
      t.comments.push_back(kToolVersion);
      std::vector<Cell> row;
      for (const auto& [k, v] : fields) {
        t.columns.push_back(k);
        row.push_back(v);
      }
      t.rows.push_back(std::move(row));
      write_csv(t, out);
      return;
    }
    nlohmann::ordered_json j;
    for (const auto& [k, v] : fields) {
      if (const auto* d = std::get_if<double>(&v)) {
        if (std::isfinite(*d)) {
          j[k] = std::stod(format_number(*d));
        } else {
          j[k] = format_number(*d);
        }
      } else if (const auto* l = std::get_if<long>(&v)) {
        j[k] = *l;
      } else {
        j[k] = std::get<std::string>(v);
      }
    }
    out << j.dump(2) << '\n';
  }
};

void emit_table(const Table& t, const std::string& format, const std::string& path,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    format == "json" ? write_json(t, out) : write_csv(t, out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  format == "json" ? write_json(t, file) : write_csv(t, file);
  if (!file) throw std::runtime_error("failed writing output file: " + path);
}

HoeffdingOptions hoeffding_options(int s_grid, double cap) {
  HoeffdingOptions o;
  o.search.grid_points = s_grid;
  o.divergence_cap = cap;
  return o;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::optional<double> nbar;
  std::optional<double> total_nbar;
  double tau = 0.0;
  int copies = 1;
  std::optional<double> r;
  std::string format = "json";
  int s_grid = 200;
  double divergence_cap = 1e4;
};

void run_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.copies < 1) throw DomainError("--copies must be >= 1");
  double nbar = a.nbar.value_or(1.0);
  if (a.total_nbar && !a.nbar) nbar = *a.total_nbar / a.copies;
  const double total = nbar * a.copies;
  if (a.total_nbar && std::abs(*a.total_nbar - total) > 1e-12 * std::max(1.0, total)) {
    throw DomainError("--total-nbar must equal --nbar times --copies");
  }
  const ComparisonPoint p = compare(nbar, a.tau, a.copies);

  Record rec;
  rec.add("nbar", nbar);
  rec.add("total_nbar", total);
  rec.add("tau", a.tau);
  rec.add("copies", static_cast<long>(a.copies));
  rec.add("p_coh", p.p_coh);
  rec.add("p_coh_qcb", coherent_qcb(total, a.tau));
  rec.add("p_quant_qcb", p.p_quant_qcb);
  rec.add("p_quant_broadband", epr_qcb_broadband(total, a.tau));
  rec.add("delta", p.delta);
  rec.add("delta_opt", optimal_gain(total, a.tau));
  rec.add("rate_ratio", p.rate_ratio);
  rec.add("r_coh", p.r_coh);
  rec.add("r_quant", p.r_quant);
  if (a.r) {
    const HoeffdingOptions opts = hoeffding_options(a.s_grid, a.divergence_cap);
    const HoeffdingResult hc = coherent_qhb(nbar, a.tau, *a.r);
    const HoeffdingResult hq = epr_qhb(nbar, a.tau, *a.r, opts);
    const ClassifiedRatio ratio = classify_qhb_ratio(hq, hc);
    rec.add("r", *a.r);
    rec.add("h_coh", hc.h_value);
    rec.add("h_coh_class", std::string(class_label(hc.classification)));
    rec.add("h_quant", hq.h_value);
    rec.add("h_quant_class", std::string(class_label(hq.classification)));
    rec.add("s_star_quant", hq.s_star.value_or(kNaN));
    if (ratio.classification == RatioClass::indeterminate) {
      rec.add("r_qhb", std::string("indeterminate"));
    } else {
      rec.add("r_qhb", ratio.value);
    }
    rec.add("r_qhb_class", std::string(class_label(ratio.classification)));
  }
  rec.write(out, a.format);
}

// ---------------------------------------------------------------- figure

struct FigureArgs {
  std::string figure_id;
  std::string out = "-";
  std::string format = "csv";
  std::optional<int> copies;
  std::optional<double> total_nbar;
  std::optional<char> panel;
  int s_grid = 200;
  double divergence_cap = 1e4;
};

void run_figure_cmd(const FigureArgs& a, std::ostream& out) {
  const auto id = parse_figure_id(a.figure_id);
  if (!id) throw DomainError("unknown figure id: " + a.figure_id);
  FigureSpec spec = default_figure_spec(*id);
  if (a.copies) spec.copies = *a.copies;
  if (a.total_nbar) spec.total_nbar = *a.total_nbar;
  if (a.panel) {
    spec.panel = *a.panel;
    spec.saturation = memory_panel(*a.panel);
  }
  spec.hoeffding = hoeffding_options(a.s_grid, a.divergence_cap);
  emit_table(run_figure(spec), a.format, a.out, out);
}

// ---------------------------------------------------------------- growth

struct GrowthArgs {
  double total_nbar = 500.0;
  GrowthParams params{};
  double t_max = 1.0;
  int t_points = 201;
  int copies = 1;
  std::string format = "csv";
  std::string out = "-";
};

void run_growth(const GrowthArgs& a, std::ostream& out) {
  const bool degraded = a.params.gamma > 0.0;
  const auto ts = Range{0.0, a.t_max, a.t_points}.values();
  const TransmitterConfig coh{TransmitterKind::coherent, CopyCount::finite(1)};
  const TransmitterConfig epr{TransmitterKind::epr, CopyCount::finite(a.copies)};
  const TransmitterConfig wide{TransmitterKind::epr, CopyCount::broadband()};
  const auto pc = error_vs_time(ts, a.total_nbar, coh, a.params, degraded);
  const auto pm = error_vs_time(ts, a.total_nbar, epr, a.params, degraded);
  const auto pb = error_vs_time(ts, a.total_nbar, wide, a.params, degraded);

  Table t;
  t.comments.push_back(std::string(kToolVersion) + " growth");
  std::ostringstream params;
  params << "parameters: total_nbar=" << format_number(a.total_nbar)
         << " c0=" << format_number(a.params.c0) << " g=" << format_number(a.params.g)
         << " gamma=" << format_number(a.params.gamma)
         << " epsilon_l=" << format_number(a.params.epsilon_l) << " copies=" << a.copies
         << " t=[0," << format_number(a.t_max) << "]x" << a.t_points;
  t.comments.push_back(params.str());
  t.columns = {"t", "concentration", "tau", "p_coh", "p_epr_m" + std::to_string(a.copies),
               "p_epr_broadband"};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    t.rows.push_back({ts[i], pc[i].concentration, pc[i].tau, pc[i].p_error, pm[i].p_error, pb[i].p_error});
  }
  emit_table(t, a.format, a.out, out);
}

// ---------------------------------------------------------------- memory

struct MemoryArgs {
  double theta1 = 5e-3;
  double theta2 = 1e-4;
  std::optional<char> panel;
  std::optional<double> total_nbar;
  double nbar_min = 1.0;
  double nbar_max = 1e5;
  int points = 251;
  int copies = 1;
  std::string format = "csv";
  std::string out = "-";
};

void run_memory(const MemoryArgs& a, std::ostream& out) {
  const SaturationParams sp = a.panel ? memory_panel(*a.panel) : SaturationParams{a.theta1, a.theta2};
  sp.validate();
  const TransmitterConfig coh{TransmitterKind::coherent, CopyCount::finite(1)};
  const TransmitterConfig epr{TransmitterKind::epr, CopyCount::finite(a.copies)};
  const TransmitterConfig wide{TransmitterKind::epr, CopyCount::broadband()};
  const std::vector<double> grid =
      a.total_nbar ? std::vector<double>{*a.total_nbar} : Range{a.nbar_min, a.nbar_max, a.points, true}.values();

  Table t;
  t.comments.push_back(std::string(kToolVersion) + " memory");
  t.comments.push_back("parameters: theta1=" + format_number(sp.theta1) +
                       " theta2=" + format_number(sp.theta2) + " copies=" + std::to_string(a.copies));
  t.columns = {"total_nbar", "tau", "i_coh", "i_epr_m" + std::to_string(a.copies), "i_epr_broadband"};
  for (double n : grid) {
    t.rows.push_back({n, memory_transmissivity(n, sp), memory_readout(n, sp, coh),
                      memory_readout(n, sp, epr), memory_readout(n, sp, wide)});
  }
  emit_table(t, a.format, a.out, out);
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::vector<double> nbars;
  std::vector<double> taus;
  int cutoff = fock::kDefaultCutoff;
  std::string format = "text";
};

Table case_table(const ValidationReport& rep, bool failures_only) {
  Table t;
  t.columns = {"pair", "quantity", "nbar", "tau", "s", "oracle", "gaussian", "deviation", "tolerance", "ok"};
  for (const auto& c : rep.cases) {
    if (failures_only && c.ok()) continue;
    t.rows.push_back({c.pair, c.quantity, c.nbar, c.tau, c.s, c.oracle, c.gaussian, c.deviation,
                      c.tolerance, std::string(c.ok() ? "yes" : "no")});
  }
  return t;
}

int run_validate(const ValidateArgs& a, std::ostream& out) {
  ValidationConfig cfg;
  if (!a.nbars.empty()) cfg.nbars = a.nbars;
  if (!a.taus.empty()) cfg.taus = a.taus;
  cfg.cutoff = a.cutoff;
  const ValidationReport rep = run_validation(cfg);

  if (a.format == "csv") {
    Table t = case_table(rep, false);
    t.comments.push_back(std::string(kToolVersion) + " validate cutoff=" + std::to_string(cfg.cutoff));
    write_csv(t, out);
  } else if (a.format == "json") {
    Table t = case_table(rep, false);
    t.comments.push_back(std::string(kToolVersion) + " validate cutoff=" + std::to_string(cfg.cutoff));
    write_json(t, out);
  } else {
    out << kToolVersion << " validate: cutoff " << cfg.cutoff << ", " << rep.cases.size()
        << " comparisons\n";
    out << "max |dC_s|        = " << format_number(rep.max_overlap_dev) << " (tol "
        << format_number(cfg.overlap_tol) << ")\n";
    out << "max |dF|          = " << format_number(rep.max_fidelity_dev) << " (tol "
        << format_number(cfg.fidelity_tol) << ")\n";
    out << "max |dP_helstrom| = " << format_number(rep.max_helstrom_dev) << " (tol "
        << format_number(cfg.helstrom_tol) << ")\n";
    out << "max sandwich gap  = " << format_number(rep.max_sandwich_violation) << " (slack "
        << format_number(cfg.sandwich_slack) << ")\n";
    if (!rep.passed()) {
      out << "FAILED cases:\n";
      write_csv(case_table(rep, true), out);
    }
    out << (rep.passed() ? "PASS" : "FAIL") << '\n';
  }
  return rep.passed() ? kExitOk : kExitFailure;
}

}  // namespace

bool ValidationReport::passed() const {
  for (const auto& c : cases)
    if (!c.ok()) return false;
  return true;
}

ValidationReport run_validation(const ValidationConfig& cfg) {
  ValidationReport rep;
  const auto record = [&rep](ValidationCase c, double& running_max) {
    running_max = std::max(running_max, c.deviation);
    rep.cases.push_back(std::move(c));
  };

  for (double nbar : cfg.nbars) {
    const GaussianState g0 = tmsv_state(nbar);
    const auto psi = fock::tmsv_fock(nbar, cfg.cutoff);
    const auto raw0 = fock::TruncatedDensityMatrix::from_pure(psi, cfg.cutoff, 2);
    const auto rho0 = raw0.normalized();

    const double alpha = std::sqrt(nbar);
    const GaussianState c0 = coherent_state(alpha);
    const auto coh0 = fock::TruncatedDensityMatrix::from_pure(fock::coherent_fock(alpha, cfg.cutoff),
                                                              cfg.cutoff, 1);

    for (double tau : cfg.taus) {
      // Entangled pair.
      const GaussianState g1 = loss_on_signal(g0, tau);
      const auto rho1 = fock::apply_loss_kraus(raw0, tau, 0).normalized();
      const fock::PairSpectra spectra(rho0, rho1);
      const OverlapFunction overlap(g0, g1);
      for (double s : cfg.s_values) {
        const double o = spectra.s_overlap(s);
        const double g = overlap(s);
        record({"tmsv", "s_overlap", nbar, tau, s, o, g, std::abs(o - g), cfg.overlap_tol},
               rep.max_overlap_dev);
      }
      const double f_oracle = fock::fidelity_fock(rho0, rho1);
      const double f_gauss = gaussian_fidelity_pure_mixed(g0, g1);
      record({"tmsv", "fidelity", nbar, tau, kNaN, f_oracle, f_gauss, std::abs(f_oracle - f_gauss),
              cfg.fidelity_tol},
             rep.max_fidelity_dev);

      const double helstrom = fock::helstrom_fock(rho0, rho1);
      const BoundSet b = compute_bounds(g0, g1, 1, helstrom);
      const double gap = std::max({0.0, b.fidelity_lower - helstrom, helstrom - b.qcb, b.qcb - b.qbb});
      record({"tmsv", "sandwich", nbar, tau, kNaN, helstrom, b.qcb, gap, cfg.sandwich_slack},
             rep.max_sandwich_violation);

      // Coherent pair with |alpha|^2 = nbar.
      const GaussianState c1 = apply_channel(c0, lossy_channel(tau), 0);
      const auto cr0 = coh0.normalized();
      const auto cr1 = fock::apply_loss_kraus(coh0, tau, 0).normalized();
      const double cf_oracle = fock::fidelity_fock(cr0, cr1);
      const double cf_gauss = gaussian_fidelity_pure_mixed(c0, c1);
      record({"coherent", "fidelity", nbar, tau, kNaN, cf_oracle, cf_gauss,
              std::abs(cf_oracle - cf_gauss), cfg.fidelity_tol},
             rep.max_fidelity_dev);
      const double ch_oracle = fock::helstrom_fock(cr0, cr1);
      const double ch_closed = coherent_error(nbar, tau);
      record({"coherent", "helstrom", nbar, tau, kNaN, ch_oracle, ch_closed,
              std::abs(ch_oracle - ch_closed), cfg.helstrom_tol},
             rep.max_helstrom_dev);
    }
  }
  return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discrimination bounds for bosonic loss"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::string> formats{"csv", "json"};

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate all bounds at one parameter point");
  bounds->add_option("--nbar", ba.nbar, "Mean photons per signal mode")->check(CLI::NonNegativeNumber);
  bounds->add_option("--total-nbar", ba.total_nbar, "Total mean photons over all copies")
      ->check(CLI::NonNegativeNumber);
  bounds->add_option("--tau", ba.tau, "Transmissivity of the sample")->required()->check(CLI::Range(0.0, 1.0));
  bounds->add_option("--copies", ba.copies, "Number of probings M")->check(CLI::PositiveNumber);
  bounds->add_option("--r", ba.r, "False-positive exponent constraint for the QHB")
      ->check(CLI::NonNegativeNumber);
  bounds->add_option("--format", ba.format)->check(CLI::IsMember(formats));
  bounds->add_option("--s-grid", ba.s_grid, "Grid points for the search over s")->check(CLI::Range(2, 1000000));
  bounds->add_option("--divergence-cap", ba.divergence_cap, "QHB values above this count as infinite")
      ->check(CLI::PositiveNumber);

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "Sweep the grid behind one figure");
  figure->add_option("--figure-id", fa.figure_id, "Figure to reproduce")->required();
  figure->add_option("--out", fa.out, "Output path, '-' for stdout");
  figure->add_option("--format", fa.format)->check(CLI::IsMember(formats));
  figure->add_option("--copies", fa.copies)->check(CLI::PositiveNumber);
  figure->add_option("--total-nbar", fa.total_nbar)->check(CLI::NonNegativeNumber);
  figure->add_option("--panel", fa.panel, "Memory panel a-d")->check(CLI::IsMember({'a', 'b', 'c', 'd'}));
  figure->add_option("--s-grid", fa.s_grid)->check(CLI::Range(2, 1000000));
  figure->add_option("--divergence-cap", fa.divergence_cap)->check(CLI::PositiveNumber);

  GrowthArgs ga;
  auto* growth = app.add_subcommand("growth", "Error probability versus time for a growing sample");
  growth->add_option("--total-nbar", ga.total_nbar)->check(CLI::NonNegativeNumber);
  growth->add_option("--c0", ga.params.c0)->check(CLI::NonNegativeNumber);
  growth->add_option("--g", ga.params.g)->check(CLI::NonNegativeNumber);
  growth->add_option("--gamma", ga.params.gamma, "Photo-degradability; > 0 enables degradation")
      ->check(CLI::NonNegativeNumber);
  growth->add_option("--epsilon-l", ga.params.epsilon_l)->check(CLI::PositiveNumber);
  growth->add_option("--t-max", ga.t_max)->check(CLI::PositiveNumber);
  growth->add_option("--t-points", ga.t_points)->check(CLI::Range(2, 10000000));
  growth->add_option("--copies", ga.copies)->check(CLI::PositiveNumber);
  growth->add_option("--format", ga.format)->check(CLI::IsMember(formats));
  growth->add_option("--out", ga.out);

  MemoryArgs ma;
  auto* memory = app.add_subcommand("memory", "Bits per cell read from a photo-degradable memory");
  memory->add_option("--theta1", ma.theta1);
  memory->add_option("--theta2", ma.theta2);
  memory->add_option("--panel", ma.panel)->check(CLI::IsMember({'a', 'b', 'c', 'd'}));
  memory->add_option("--total-nbar", ma.total_nbar, "Evaluate a single energy")->check(CLI::NonNegativeNumber);
  memory->add_option("--nbar-min", ma.nbar_min)->check(CLI::PositiveNumber);
  memory->add_option("--nbar-max", ma.nbar_max)->check(CLI::PositiveNumber);
  memory->add_option("--points", ma.points)->check(CLI::Range(2, 10000000));
  memory->add_option("--copies", ma.copies)->check(CLI::PositiveNumber);
  memory->add_option("--format", ma.format)->check(CLI::IsMember(formats));
  memory->add_option("--out", ma.out);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check Gaussian formulas against the Fock oracle");
  validate->add_option("--nbar", va.nbars, "Mean photon numbers (default 0.5 1 2)")->check(CLI::NonNegativeNumber);
  validate->add_option("--tau", va.taus, "Transmissivities (default 0.25 0.5 0.9)")->check(CLI::Range(0.0, 1.0));
  validate->add_option("--cutoff", va.cutoff, "Fock cutoff per mode")->check(CLI::Range(1, 200));
  validate->add_option("--format", va.format)->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*bounds) run_bounds(ba, out);
    if (*figure) run_figure_cmd(fa, out);
    if (*growth) run_growth(ga, out);
    if (*memory) run_memory(ma, out);
    if (*validate) return run_validate(va, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace qdisc::cli
