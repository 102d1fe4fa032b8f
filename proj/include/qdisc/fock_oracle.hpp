#pragma once

// Brute-force reference in a truncated Fock basis. States are explicit vectors
// and density matrices, loss is applied through its Kraus operators, and
// overlaps, fidelities and Helstrom errors come from Hermitian
// eigendecompositions. Nothing here touches the Gaussian formulas, so the
// module serves as an independent check on them.
//
// Two-mode index layout: index = n_signal + cutoff * n_reference (signal
// index fastest). Truncation is not renormalized by the constructors; the
// discarded probability is reported as tail_mass().

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "qdisc/errors.hpp"

namespace qdisc::fock {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kDefaultCutoff = 40;
inline constexpr double kTailTol = 1e-12;
/// Eigenvalues below this are treated as exact zeros when forming rho^s.
inline constexpr double kSpectralFloor = 1e-14;

class TruncatedDensityMatrix {
 public:
  /// Validates dimension (cutoff^n_modes) and Hermiticity within 1e-12.
  TruncatedDensityMatrix(int cutoff, int n_modes, ComplexMatrix matrix);

  static TruncatedDensityMatrix from_pure(const ComplexVector& psi, int cutoff, int n_modes);

  int cutoff() const { return cutoff_; }
  int n_modes() const { return n_modes_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double trace() const;
  double tail_mass() const { return 1.0 - trace(); }
  /// Tr(rho^2) / Tr(rho)^2.
  double purity() const;
  TruncatedDensityMatrix normalized() const;

 private:
  int cutoff_;
  int n_modes_;
  ComplexMatrix matrix_;
};

/// Smallest cutoff K with lambda^(2K) < tail_tol, lambda^2 = nbar / (nbar + 1).
int tmsv_cutoff(double nbar, double tail_tol = kTailTol);
/// Smallest cutoff whose Poisson tail beyond K - 1 is below tail_tol.
int coherent_cutoff(std::complex<double> alpha, double tail_tol = kTailTol);

/// sum_n sqrt(1 - lambda^2) lambda^n |n, n>.
ComplexVector tmsv_fock(double nbar, int cutoff = kDefaultCutoff);

/// e^(-|alpha|^2 / 2) sum_n alpha^n / sqrt(n!) |n>.
ComplexVector coherent_fock(std::complex<double> alpha, int cutoff = kDefaultCutoff);

/// Kraus operators A_k of pure loss on one mode, as cutoff x cutoff matrices:
/// A_k |n> = sqrt(C(n, k) tau^(n-k) (1 - tau)^k) |n - k>.
std::vector<Eigen::MatrixXd> loss_kraus_operators(double tau, int cutoff);

/// sum_k A_k rho A_k^dagger with A_k acting on `mode`.
TruncatedDensityMatrix apply_loss_kraus(const TruncatedDensityMatrix& rho, double tau, int mode);

/// Eigendecompositions of a pair of density matrices restricted to the blocks
/// of their joint sparsity pattern, reusable for many values of s.
class PairSpectra {
 public:
  PairSpectra(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1);

  /// Tr(rho0^s rho1^(1-s)) for s in (0, 1).
  double s_overlap(double s) const;

  /// Largest magnitude of a negative eigenvalue that was floored to 0.
  double max_clamped() const { return max_clamped_; }
  std::size_t block_count() const { return blocks_.size(); }

 private:
  struct Block {
    Eigen::VectorXd lambda0;
    Eigen::VectorXd lambda1;
    // overlap(i, j) = |<u_i|v_j>|^2, row-major so rows are contiguous
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> overlap;
  };
  std::vector<Block> blocks_;
  double max_clamped_ = 0.0;
};

double s_overlap_fock(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1,
                      double s);

/// (1 - ||rho0 - rho1||_1 / 2) / 2.
double helstrom_fock(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1);

/// <phi|rho1|phi> where rho0 = |phi><phi| up to normalization. Throws
/// DomainError if rho0 is not pure.
double fidelity_fock(const TruncatedDensityMatrix& rho0, const TruncatedDensityMatrix& rho1);

/// Partition of {0, ..., dim-1} into connected components of the graph with an
/// edge wherever any of the matrices has a nonzero entry. Exposed for tests.
std::vector<std::vector<Eigen::Index>> joint_blocks(const std::vector<const ComplexMatrix*>& mats);

}  // namespace qdisc::fock
