#include "qdisc/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qdisc {
namespace {

bool all_finite(const Matrix& m) { return m.array().isFinite().all(); }

void require_tau(double tau) {
  if (!std::isfinite(tau) || tau < 0.0 || tau > 1.0) {
    throw DomainError("transmissivity must lie in [0, 1], got " + std::to_string(tau));
  }
}

double scale_of(const Matrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

GaussianState::GaussianState(Vector mean, Matrix cm) : mean_(std::move(mean)), cm_(std::move(cm)) {
  const auto dim = mean_.size();
  if (dim < 2 || dim % 2 != 0) throw DomainError("mean vector must have length 2 * n_modes");
  if (cm_.rows() != dim || cm_.cols() != dim) {
    throw DomainError("covariance matrix size does not match the mean vector");
  }
  if (!all_finite(cm_) || !mean_.array().isFinite().all()) {
    throw DomainError("non-finite moments");
  }
  if ((cm_ - cm_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale_of(cm_)) {
    throw DomainError("covariance matrix is not symmetric");
  }
}

bool GaussianState::is_physical() const {
  return symplectic_eigenvalues(cm_).minCoeff() >= 1.0 - kPhysicalTol;
}

bool GaussianState::is_pure() const {
  const Vector nu = symplectic_eigenvalues(cm_);
  return (nu.array() - 1.0).abs().maxCoeff() <= kPurityTol;
}

Eigen::Matrix4d NormalFormCM::to_matrix() const {
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  v(0, 0) = v(1, 1) = a;
  v(2, 2) = v(3, 3) = b;
  v(0, 2) = v(2, 0) = c;
  v(1, 3) = v(3, 1) = -c;
  return v;
}

std::pair<double, double> SymplecticDecomposition::sorted() const {
  return {std::min(nu_minus, nu_plus), std::max(nu_minus, nu_plus)};
}

Matrix symplectic_form(int n_modes) {
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

GaussianState vacuum_state(int n_modes) {
  if (n_modes < 1) throw DomainError("n_modes must be positive");
  return GaussianState(Vector::Zero(2 * n_modes), Matrix::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState tmsv_state(double nbar) {
  if (!std::isfinite(nbar) || nbar < 0.0) {
    throw DomainError("mean photon number must be finite and non-negative");
  }
  const double mu = 2.0 * nbar + 1.0;
  NormalFormCM nf{mu, mu, 2.0 * std::sqrt(nbar * (nbar + 1.0))};  // sqrt(mu^2 - 1)
  return GaussianState(Vector::Zero(4), nf.to_matrix());
}

GaussianState coherent_state(std::complex<double> alpha) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("coherent amplitude must be finite");
  }
  Vector mean(2);
  mean << 2.0 * alpha.real(), 2.0 * alpha.imag();
  return GaussianState(mean, Matrix::Identity(2, 2));
}

GaussianChannelSpec lossy_channel(double tau) {
  require_tau(tau);
  return GaussianChannelSpec{std::sqrt(tau) * Eigen::Matrix2d::Identity(),
                             (1.0 - tau) * Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero()};
}

GaussianState apply_channel(const GaussianState& state, const GaussianChannelSpec& spec,
                            int target_mode) {
  const int n = state.n_modes();
  if (target_mode < 0 || target_mode >= n) {
    throw DomainError("target mode " + std::to_string(target_mode) + " out of range");
  }
  if ((spec.n_matrix - spec.n_matrix.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw DomainError("channel noise matrix must be symmetric");
  }
  Matrix k = Matrix::Identity(2 * n, 2 * n);
  Matrix noise = Matrix::Zero(2 * n, 2 * n);
  Vector d = Vector::Zero(2 * n);
  k.block<2, 2>(2 * target_mode, 2 * target_mode) = spec.k_matrix;
  noise.block<2, 2>(2 * target_mode, 2 * target_mode) = spec.n_matrix;
  d.segment<2>(2 * target_mode) = spec.d;

  Matrix cm = k * state.cm() * k.transpose() + noise;
  cm = 0.5 * (cm + cm.transpose()).eval();
  return GaussianState(k * state.mean() + d, cm);
}

GaussianState loss_on_signal(const GaussianState& tmsv, double tau) {
  if (tmsv.n_modes() != 2) throw DomainError("loss_on_signal expects a two-mode state");
  return apply_channel(tmsv, lossy_channel(tau), 0);
}

GaussianState loss_on_signal_dilated(const GaussianState& tmsv, double tau) {
  if (tmsv.n_modes() != 2) throw DomainError("loss_on_signal expects a two-mode state");
  require_tau(tau);
  // Modes (v, S, R) with the ancilla v in vacuum.
  Matrix v_in = Matrix::Identity(6, 6);
  v_in.bottomRightCorner<4, 4>() = tmsv.cm();
  Vector x_in = Vector::Zero(6);
  x_in.tail<4>() = tmsv.mean();

  const double t = std::sqrt(tau);
  const double r = std::sqrt(1.0 - tau);
  Matrix b = Matrix::Identity(6, 6);
  b.block<2, 2>(0, 0) = t * Eigen::Matrix2d::Identity();
  b.block<2, 2>(0, 2) = r * Eigen::Matrix2d::Identity();
  b.block<2, 2>(2, 0) = -r * Eigen::Matrix2d::Identity();
  b.block<2, 2>(2, 2) = t * Eigen::Matrix2d::Identity();

  const Matrix v_out = b * v_in * b.transpose();
  const Vector x_out = b * x_in;
  Matrix reduced = v_out.bottomRightCorner<4, 4>();
  reduced = 0.5 * (reduced + reduced.transpose()).eval();
  return GaussianState(x_out.tail<4>(), reduced);
}

NormalFormCM normal_form_of(const Matrix& cm) {
  if (cm.rows() != 4 || cm.cols() != 4) throw DomainError("normal form requires a 4x4 CM");
  const double tol = 1e-10 * scale_of(cm);
  const double a = cm(0, 0), b = cm(2, 2), c = cm(0, 2);
  const NormalFormCM nf{a, b, c};
  if ((cm - Matrix(nf.to_matrix())).cwiseAbs().maxCoeff() > tol) {
    throw DomainError("two-mode CM is not in the (aI, cZ; cZ, bI) normal form");
  }
  return nf;
}

SymplecticDecomposition normal_form_decompose(const NormalFormCM& nf) {
  if (nf.c < 0.0) throw DomainError("normal form with c < 0 is not supported");
  const double y = nf.y();
  if (!(y > 1e-12)) throw NumericError("degenerate symplectic spectrum (y <= 1e-12)");
  const double sy = std::sqrt(y);
  const double sum = nf.a + nf.b;
  if (sum - sy < -1e-12 * sum) throw DomainError("normal form violates a + b >= sqrt(y)");

  SymplecticDecomposition out{};
  out.nu_minus = 0.5 * (sy - (nf.b - nf.a));
  out.nu_plus = 0.5 * (sy + (nf.b - nf.a));
  const double wp = std::sqrt((sum + sy) / (2.0 * sy));
  const double wm = std::sqrt(std::max(0.0, (sum - sy) / (2.0 * sy)));
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s(0, 0) = s(1, 1) = s(2, 2) = s(3, 3) = wp;
  s(0, 2) = s(2, 0) = wm;
  s(1, 3) = s(3, 1) = -wm;
  out.s_matrix = s;
  return out;
}

Vector symplectic_eigenvalues(const Matrix& cm) {
  if (cm.rows() != cm.cols() || cm.rows() % 2 != 0) {
    throw DomainError("CM must be square with even dimension");
  }
  if ((cm - cm.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale_of(cm)) {
    throw DomainError("CM is not symmetric");
  }
  const int n = static_cast<int>(cm.rows() / 2);
  Eigen::EigenSolver<Matrix> solver(symplectic_form(n) * cm, false);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed");
  std::vector<double> moduli;
  moduli.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) moduli.push_back(std::abs(solver.eigenvalues()(i)));
  std::sort(moduli.begin(), moduli.end());
  Vector nu(n);
  for (int k = 0; k < n; ++k) nu(k) = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
  return nu;
}

std::pair<double, double> symplectic_spectrum_generic(const Eigen::Matrix4d& cm) {
  const Vector nu = symplectic_eigenvalues(cm);
  return {nu(0), nu(1)};
}

Williamson williamson(const GaussianState& state) {
  const Matrix& v = state.cm();
  if (state.n_modes() == 1) {
    const double det = v.determinant();
    if (!(det > 0.0)) throw NumericError("single-mode CM is not positive definite");
    const double nu = std::sqrt(det);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(Eigen::Matrix2d(v / nu));
    Williamson w{Vector::Constant(1, nu), es.operatorSqrt()};
    return w;
  }
  if (state.n_modes() == 2) {
    const SymplecticDecomposition d = normal_form_decompose(normal_form_of(v));
    Vector nu(2);
    nu << d.nu_minus, d.nu_plus;
    return Williamson{nu, Matrix(d.s_matrix)};
  }
  throw DomainError("Williamson decomposition is only available for one or two modes");
}

}  // namespace qdisc
