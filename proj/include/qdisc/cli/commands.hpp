#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdisc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error or tolerance breach
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct ValidationConfig {
  std::vector<double> nbars{0.5, 1.0, 2.0};
  std::vector<double> taus{0.25, 0.5, 0.9};
  std::vector<double> s_values{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int cutoff = 40;
  double overlap_tol = 1e-6;
  double fidelity_tol = 1e-8;
  double helstrom_tol = 1e-8;
  double sandwich_slack = 1e-9;
};

struct ValidationCase {
  std::string pair;      // "tmsv" or "coherent"
  std::string quantity;  // s_overlap, fidelity, helstrom, sandwich
  double nbar;
  double tau;
  double s;  // NaN where not applicable
  double oracle;
  double gaussian;
  double deviation;
  double tolerance;

  bool ok() const { return deviation <= tolerance; }
};

struct ValidationReport {
  std::vector<ValidationCase> cases;
  double max_overlap_dev = 0.0;
  double max_fidelity_dev = 0.0;
  double max_helstrom_dev = 0.0;
  double max_sandwich_violation = 0.0;

  bool passed() const;
};

/// Compares the Fock-space oracle against the Gaussian closed forms on the
/// configured grid. Truncated states are trace-normalized before comparison.
ValidationReport run_validation(const ValidationConfig& config);

}  // namespace qdisc::cli
