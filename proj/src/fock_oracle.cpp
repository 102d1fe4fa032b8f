#include "qdisc/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <span>
#include <string>

#include "qdisc/simd/kernels.hpp"

namespace qdisc::fock {
namespace {

std::span<const double> as_doubles(const std::complex<double>* p, std::size_t n) {
  return {reinterpret_cast<const double*>(p), 2 * n};
}

std::span<double> as_doubles(std::complex<double>* p, std::size_t n) {
  return {reinterpret_cast<double*>(p), 2 * n};
}

Eigen::Index ipow(int base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_cutoff(int cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
}

void require_tau(double tau) {
  if (!std::isfinite(tau) || tau < 0.0 || tau > 1.0) {
    throw DomainError("transmissivity must lie in [0, 1]");
  }
}

// Amplitude of A_k between |m + k> and |m>.
double loss_amplitude(int m, int k, double tau) {
  const int n = m + k;
  const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m + 1.0);
  return std::exp(0.5 * log_binom) * std::pow(tau, 0.5 * m) * std::pow(1.0 - tau, 0.5 * k);
}

struct DisjointSets {
  explicit DisjointSets(Eigen::Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Eigen::Index a, Eigen::Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Eigen::Index> parent;
};

ComplexMatrix submatrix(const ComplexMatrix& m, const std::vector<Eigen::Index>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = m(idx[i], idx[j]);
  return out;
}

}  // namespace

TruncatedDensityMatrix::TruncatedDensityMatrix(int cutoff, int n_modes, ComplexMatrix matrix)
    : cutoff_(cutoff), n_modes_(n_modes), matrix_(std::move(matrix)) {
  require_cutoff(cutoff);
  if (n_modes != 1 && n_modes != 2) throw DomainError("only one or two modes are supported");
  const Eigen::Index dim = ipow(cutoff, n_modes);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DomainError("density matrix dimension must be cutoff^n_modes");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("density matrix is not Hermitian");
  }
}

TruncatedDensityMatrix TruncatedDensityMatrix::from_pure(const ComplexVector& psi, int cutoff,
                                                         int n_modes) {
  return TruncatedDensityMatrix(cutoff, n_modes, psi * psi.adjoint());
}

double TruncatedDensityMatrix::trace() const { return matrix_.trace().real(); }

double TruncatedDensityMatrix::purity() const {
  const auto n = static_cast<std::size_t>(matrix_.size());
  const auto d = as_doubles(matrix_.data(), n);
  const double tr = trace();
  return simd::dot(d, d) / (tr * tr);
}

TruncatedDensityMatrix TruncatedDensityMatrix::normalized() const {
  const double tr = trace();
  if (!(tr > 0.0)) throw NumericError("cannot normalize a density matrix with zero trace");
  return TruncatedDensityMatrix(cutoff_, n_modes_, matrix_ / tr);
}

int tmsv_cutoff(double nbar, double tail_tol) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw DomainError("nbar must be finite and >= 0");
  if (nbar == 0.0) return 1;
  const double log_lam2 = std::log(nbar / (nbar + 1.0));
  return static_cast<int>(std::floor(std::log(tail_tol) / log_lam2)) + 1;
}

int coherent_cutoff(std::complex<double> alpha, double tail_tol) {
  const double mean = std::norm(alpha);
  double p = std::exp(-mean);
  double cumulative = p;
  int k = 0;
  while (1.0 - cumulative >= tail_tol && k < 100000) {
    ++k;
    p *= mean / k;
    cumulative += p;
    if (p < 1e-300 && k > mean) break;
  }
  return k + 1;
}

ComplexVector tmsv_fock(double nbar, int cutoff) {
  require_cutoff(cutoff);
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw DomainError("nbar must be finite and >= 0");
  const double lam2 = nbar / (nbar + 1.0);
  const double norm = std::sqrt(1.0 - lam2);
  ComplexVector psi = ComplexVector::Zero(ipow(cutoff, 2));
  for (int n = 0; n < cutoff; ++n) {
    psi(n + static_cast<Eigen::Index>(cutoff) * n) = norm * std::pow(lam2, 0.5 * n);
  }
  return psi;
}

ComplexVector coherent_fock(std::complex<double> alpha, int cutoff) {
  require_cutoff(cutoff);
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("coherent amplitude must be finite");
  }
  ComplexVector psi(cutoff);
  std::complex<double> c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < cutoff; ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    psi(n) = c;
  }
  return psi;
}

std::vector<Eigen::MatrixXd> loss_kraus_operators(double tau, int cutoff) {
  require_tau(tau);
  require_cutoff(cutoff);
  std::vector<Eigen::MatrixXd> ops;
  ops.reserve(cutoff);
  for (int k = 0; k < cutoff; ++k) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff, cutoff);
    for (int m = 0; m + k < cutoff; ++m) a(m, m + k) = loss_amplitude(m, k, tau);
    ops.push_back(std::move(a));
  }
  return ops;
}

TruncatedDensityMatrix apply_loss_kraus(const TruncatedDensityMatrix& rho, double tau, int mode) {
  require_tau(tau);
  if (mode < 0 || mode >= rho.n_modes()) throw DomainError("mode index out of range");
  const int cutoff = rho.cutoff();
  const Eigen::Index dim = rho.dim();
  const Eigen::Index stride = ipow(cutoff, mode);
  const auto digit = [cutoff, stride](Eigen::Index i) {
    return static_cast<int>((i / stride) % cutoff);
  };

  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  // Row weights for one k, duplicated so they line up with interleaved
  // (re, im) pairs.
  std::vector<double> weights(static_cast<std::size_t>(2 * dim));

  for (int k = 0; k < cutoff; ++k) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const int m = digit(i);
      const double w = (m + k < cutoff) ? loss_amplitude(m, k, tau) : 0.0;
      weights[2 * i] = weights[2 * i + 1] = w;
    }
    const Eigen::Index shift = k * stride;
    const auto len = static_cast<std::size_t>(dim - shift);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double alpha = weights[2 * j];
      if (alpha == 0.0 || j + shift >= dim) continue;
      const std::complex<double>* src = in.data() + (j + shift) * dim + shift;
      std::complex<double>* dst = out.data() + j * dim;
      simd::scaled_product_add(alpha, std::span<const double>(weights.data(), 2 * len),
                               as_doubles(src, len), as_doubles(dst, len));
    }
  }
  ComplexMatrix herm = 0.5 * (out + out.adjoint());
  return TruncatedDensityMatrix(cutoff, rho.n_modes(), std::move(herm));
}

std::vector<std::vector<Eigen::Index>> joint_blocks(const std::vector<const ComplexMatrix*>& mats) {
  if (mats.empty()) return {};
  const Eigen::Index dim = mats.front()->rows();
  DisjointSets sets(dim);
  for (const ComplexMatrix* m : mats) {
    if (m->rows() != dim || m->cols() != dim) throw DomainError("matrix dimensions differ");
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index i = j + 1; i < dim; ++i)
        if ((*m)(i, j) != std::complex<double>(0.0, 0.0)) sets.unite(i, j);
  }
  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(dim), -1);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<Eigen::Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[root]].push_back(i);
  }
  return blocks;
}

PairSpectra::PairSpectra(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) throw DomainError("density matrices have different dimensions");
  const auto floor_negative = [this](Eigen::VectorXd v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) < 0.0) max_clamped_ = std::max(max_clamped_, -v(i));
      // eigenvalues at round-off level are zero; s-powers would amplify them
      if (v(i) < kSpectralFloor) v(i) = 0.0;
    }
    return v;
  };
  for (const auto& idx : joint_blocks({&rho0.matrix(), &rho1.matrix()})) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es0(submatrix(rho0.matrix(), idx));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es1(submatrix(rho1.matrix(), idx));
    if (es0.info() != Eigen::Success || es1.info() != Eigen::Success) {
      throw NumericError("Hermitian eigensolver failed");
    }
    Block b;
    b.lambda0 = floor_negative(es0.eigenvalues());
    b.lambda1 = floor_negative(es1.eigenvalues());
    b.overlap = (es0.eigenvectors().adjoint() * es1.eigenvectors()).cwiseAbs2();
    blocks_.push_back(std::move(b));
  }
  if (max_clamped_ > 1e-10) {
    std::clog << "fock oracle: clamped negative eigenvalue of magnitude " << max_clamped_ << '\n';
  }
}

double PairSpectra::s_overlap(double s) const {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("s must lie in (0, 1)");
  double total = 0.0;
  Eigen::VectorXd q;
  for (const Block& b : blocks_) {
    q = b.lambda1.array().pow(1.0 - s);
    const auto n1 = static_cast<std::size_t>(q.size());
    for (Eigen::Index i = 0; i < b.lambda0.size(); ++i) {
      if (b.lambda0(i) == 0.0) continue;
      const std::span<const double> row(b.overlap.data() + i * b.overlap.cols(), n1);
      total += std::pow(b.lambda0(i), s) * simd::dot(row, std::span<const double>(q.data(), n1));
    }
  }
  return total;
}

double s_overlap_fock(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1,
                      double s) {
  return PairSpectra(rho0, rho1).s_overlap(s);
}

double helstrom_fock(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) throw DomainError("density matrices have different dimensions");
  const ComplexMatrix diff = rho0.matrix() - rho1.matrix();
  double trace_norm = 0.0;
  for (const auto& idx : joint_blocks({&diff})) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(submatrix(diff, idx), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
    const Eigen::VectorXd& ev = es.eigenvalues();
    trace_norm += simd::abs_sum(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
  }
  return 0.5 * (1.0 - 0.5 * trace_norm);
}

double fidelity_fock(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) throw DomainError("density matrices have different dimensions");
  if (rho0.purity() < 1.0 - 1e-9) throw DomainError("first argument must be a pure state");
  const auto n = static_cast<std::size_t>(rho0.matrix().size());
  // Re Tr(A B) = sum_ij Re(A_ij conj(B_ij)) for Hermitian B.
  const double tr01 = simd::dot(as_doubles(rho0.matrix().data(), n), as_doubles(rho1.matrix().data(), n));
  return tr01 / rho0.trace();
}

}  // namespace qdisc::fock
