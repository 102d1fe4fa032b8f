#pragma once

// Gaussian states of one or two bosonic modes, described by their first and
// second statistical moments.
//
// Conventions
//   * Quadratures are ordered (q1, p1, q2, p2, ...). The vacuum has
//     covariance matrix (CM) equal to the identity, so a thermal state with
//     mean photon number n has CM (2n + 1) I.
//   * A coherent state |alpha> has mean (2 Re alpha, 2 Im alpha). With this
//     factor the Gaussian fidelity formula returns exp(-|alpha - beta|^2) for
//     two coherent states, which fixes the normalization.
//   * For two-mode states mode 0 is the signal S and mode 1 the reference R.

#include <Eigen/Dense>

#include <complex>
#include <utility>

#include "qdisc/errors.hpp"

namespace qdisc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPhysicalTol = 1e-9;
inline constexpr double kPurityTol = 1e-6;

class GaussianState {
 public:
  /// Validates sizes and symmetry of the CM. Physicality is not enforced
  /// here; see is_physical().
  GaussianState(Vector mean, Matrix cm);

  int n_modes() const { return static_cast<int>(mean_.size() / 2); }
  const Vector& mean() const { return mean_; }
  const Matrix& cm() const { return cm_; }

  /// All symplectic eigenvalues >= 1 - kPhysicalTol.
  bool is_physical() const;
  /// All symplectic eigenvalues equal to 1 within kPurityTol.
  bool is_pure() const;

 private:
  Vector mean_;
  Matrix cm_;
};

/// Two-mode CM with blocks (a I, c Z; c Z, b I), Z = diag(1, -1).
struct NormalFormCM {
  double a;
  double b;
  double c;

  double y() const { return (a + b) * (a + b) - 4.0 * c * c; }
  Eigen::Matrix4d to_matrix() const;
};

/// V = S diag(nu_minus, nu_minus, nu_plus, nu_plus) S^T.
///
/// nu_minus belongs to the first mode of the normal form and nu_plus to the
/// second, so nu_minus <= nu_plus holds whenever a <= b (all states built by
/// this library). Use sorted() for an ordered pair regardless.
struct SymplecticDecomposition {
  double nu_minus;
  double nu_plus;
  Eigen::Matrix4d s_matrix;

  std::pair<double, double> sorted() const;
};

/// Single-mode Gaussian channel acting on the moments as
/// mean -> K mean + d, CM -> K V K^T + N.
struct GaussianChannelSpec {
  Eigen::Matrix2d k_matrix;
  Eigen::Matrix2d n_matrix;
  Eigen::Vector2d d;
};

/// Standard symplectic form for n modes, block diagonal in (0 1; -1 0).
Matrix symplectic_form(int n_modes);

GaussianState vacuum_state(int n_modes);

/// Two-mode squeezed vacuum with nbar mean photons per mode.
GaussianState tmsv_state(double nbar);

GaussianState coherent_state(std::complex<double> alpha);

/// Pure-loss channel of transmissivity tau.
GaussianChannelSpec lossy_channel(double tau);

GaussianState apply_channel(const GaussianState& state, const GaussianChannelSpec& spec,
                            int target_mode);

/// Pure loss on the signal mode (mode 0) of a two-mode state, acting directly
/// on the moments.
GaussianState loss_on_signal(const GaussianState& tmsv, double tau);

/// Same channel computed by a beam splitter mixing the signal with a vacuum
/// ancilla and tracing the ancilla out.
GaussianState loss_on_signal_dilated(const GaussianState& tmsv, double tau);

/// Reads (a, b, c) off a two-mode CM in normal form. Throws DomainError if the
/// CM has a different structure (within kSymmetryTol-scaled tolerance).
NormalFormCM normal_form_of(const Matrix& cm);

/// Closed-form symplectic decomposition of a normal-form CM with c >= 0.
SymplecticDecomposition normal_form_decompose(const NormalFormCM& nf);

/// Symplectic eigenvalues of a 4x4 CM from the moduli of the eigenvalues of
/// i Omega V, sorted ascending.
std::pair<double, double> symplectic_spectrum_generic(const Eigen::Matrix4d& cm);

/// Symplectic eigenvalues of an arbitrary 2n x 2n CM, sorted ascending.
Vector symplectic_eigenvalues(const Matrix& cm);

/// Williamson form V = S diag(nu_1, nu_1, ..., nu_n, nu_n) S^T. Available for
/// arbitrary single-mode CMs and for two-mode CMs in normal form.
struct Williamson {
  Vector nu;  // one entry per mode, in the order used by s
  Matrix s;
};

Williamson williamson(const GaussianState& state);

}  // namespace qdisc
