#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qdisc/gaussian_core.hpp"

using namespace qdisc;

namespace {

Eigen::Matrix4d diag_nu(double nm, double np) {
  return Eigen::Vector4d(nm, nm, np, np).asDiagonal();
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(GaussianState, RejectsAsymmetricCovariance) {
  Matrix cm = Matrix::Identity(2, 2);
  cm(0, 1) = 0.1;
  EXPECT_THROW(GaussianState(Vector::Zero(2), cm), DomainError);
  EXPECT_THROW(GaussianState(Vector::Zero(3), Matrix::Identity(3, 3)), DomainError);
}

TEST(GaussianState, Physicality) {
  EXPECT_TRUE(vacuum_state(2).is_physical());
  EXPECT_TRUE(vacuum_state(2).is_pure());
  EXPECT_FALSE(GaussianState(Vector::Zero(2), 0.5 * Matrix::Identity(2, 2)).is_physical());
  EXPECT_FALSE(GaussianState(Vector::Zero(2), 3.0 * Matrix::Identity(2, 2)).is_pure());
}

TEST(Tmsv, ZeroPhotonsIsVacuum) {
  EXPECT_LT(max_abs(tmsv_state(0.0).cm() - Matrix::Identity(4, 4)), 1e-15);
}

TEST(Tmsv, OnePhotonBlocks) {
  const Matrix v = tmsv_state(1.0).cm();
  EXPECT_DOUBLE_EQ(v(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(v(3, 3), 3.0);
  EXPECT_NEAR(v(0, 2), std::sqrt(8.0), 1e-14);
  EXPECT_NEAR(v(1, 3), -std::sqrt(8.0), 1e-14);
  EXPECT_DOUBLE_EQ(v(0, 1), 0.0);
}

TEST(Tmsv, PureSpectrum) {
  for (double nbar : {0.1, 1.0, 5.0, 10.0}) {
    const Vector nu = symplectic_eigenvalues(tmsv_state(nbar).cm());
    EXPECT_NEAR(nu(0), 1.0, 1e-10) << nbar;
    EXPECT_NEAR(nu(1), 1.0, 1e-10) << nbar;
  }
}

TEST(Coherent, MeanConvention) {
  const GaussianState a = coherent_state(1.0);
  EXPECT_DOUBLE_EQ(a.mean()(0), 2.0);
  EXPECT_DOUBLE_EQ(a.mean()(1), 0.0);
  const GaussianState b = coherent_state({0.0, 1.0});
  EXPECT_DOUBLE_EQ(b.mean()(0), 0.0);
  EXPECT_DOUBLE_EQ(b.mean()(1), 2.0);
  EXPECT_LT(max_abs(b.cm() - Matrix::Identity(2, 2)), 1e-15);
}

TEST(Channel, LossyChannelBlocks) {
  const auto one = lossy_channel(1.0);
  EXPECT_TRUE(one.k_matrix.isIdentity());
  EXPECT_TRUE(one.n_matrix.isZero());
  const auto zero = lossy_channel(0.0);
  EXPECT_TRUE(zero.k_matrix.isZero());
  EXPECT_TRUE(zero.n_matrix.isIdentity());
  const auto q = lossy_channel(0.25);
  EXPECT_DOUBLE_EQ(q.k_matrix(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(q.n_matrix(1, 1), 0.75);
  EXPECT_THROW(lossy_channel(1.5), DomainError);
}

TEST(Channel, LossOnCoherent) {
  const GaussianState in = coherent_state(1.0);
  const GaussianState dark = apply_channel(in, lossy_channel(0.0), 0);
  EXPECT_LT(dark.mean().norm(), 1e-15);
  EXPECT_LT(max_abs(dark.cm() - Matrix::Identity(2, 2)), 1e-15);
  const GaussianState out = apply_channel(in, lossy_channel(0.25), 0);
  EXPECT_DOUBLE_EQ(out.mean()(0), 1.0);
  EXPECT_LT(max_abs(out.cm() - Matrix::Identity(2, 2)), 1e-15);
}

TEST(Channel, IdentitySpecLeavesStateUnchanged) {
  GaussianChannelSpec id{Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Zero(), Eigen::Vector2d::Zero()};
  const GaussianState s = tmsv_state(2.0);
  EXPECT_LT(max_abs(apply_channel(s, id, 1).cm() - s.cm()), 1e-15);
}

TEST(LossOnSignal, CovarianceBlocks) {
  const Matrix v = loss_on_signal(tmsv_state(1.0), 0.25).cm();
  EXPECT_NEAR(v(0, 0), 1.5, 1e-14);
  EXPECT_NEAR(v(0, 2), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(v(2, 2), 3.0, 1e-14);
  const Matrix dark = loss_on_signal(tmsv_state(1.0), 0.0).cm();
  EXPECT_NEAR(dark(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(dark(0, 2), 0.0, 1e-14);
  EXPECT_NEAR(dark(3, 3), 3.0, 1e-14);
  EXPECT_LT(max_abs(loss_on_signal(tmsv_state(1.0), 1.0).cm() - tmsv_state(1.0).cm()), 1e-14);
}

TEST(LossOnSignal, DilationAgrees) {
  for (double nbar : {0.0, 0.5, 3.0})
    for (double tau : {0.0, 0.3, 0.9, 1.0}) {
      const GaussianState t = tmsv_state(nbar);
      EXPECT_LT(max_abs(loss_on_signal(t, tau).cm() - loss_on_signal_dilated(t, tau).cm()), 1e-12);
    }
}

TEST(NormalForm, Vacuum) {
  const auto d = normal_form_decompose({1.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(d.nu_minus, 1.0);
  EXPECT_DOUBLE_EQ(d.nu_plus, 1.0);
  EXPECT_LT((d.s_matrix - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(NormalForm, LossyTmsv) {
  const NormalFormCM nf{1.5, 3.0, std::sqrt(2.0)};
  const auto d = normal_form_decompose(nf);
  EXPECT_NEAR(d.nu_minus, 1.0, 1e-12);
  EXPECT_NEAR(d.nu_plus, 2.5, 1e-12);
  EXPECT_NEAR(d.s_matrix(0, 0), std::sqrt(8.0 / 7.0), 1e-12);
  EXPECT_NEAR(d.s_matrix(0, 2), std::sqrt(1.0 / 7.0), 1e-12);
  const Eigen::Matrix4d rec = d.s_matrix * diag_nu(d.nu_minus, d.nu_plus) * d.s_matrix.transpose();
  EXPECT_LT((rec - nf.to_matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(NormalForm, TmsvIsPure) {
  for (double mu : {1.0, 3.0, 21.0}) {
    const auto d = normal_form_decompose({mu, mu, std::sqrt(mu * mu - 1.0)});
    EXPECT_NEAR(d.nu_minus, 1.0, 1e-10);
    EXPECT_NEAR(d.nu_plus, 1.0, 1e-10);
  }
}

TEST(NormalForm, ReadBack) {
  const NormalFormCM nf = normal_form_of(loss_on_signal(tmsv_state(1.0), 0.25).cm());
  EXPECT_NEAR(nf.a, 1.5, 1e-14);
  EXPECT_NEAR(nf.b, 3.0, 1e-14);
  EXPECT_NEAR(nf.c, std::sqrt(2.0), 1e-14);
  Matrix bad = Matrix::Identity(4, 4);
  bad(0, 1) = bad(1, 0) = 0.2;
  EXPECT_THROW(normal_form_of(bad), DomainError);
}

TEST(NormalForm, NegativeCorrelationRejected) {
  EXPECT_THROW(normal_form_decompose({2.0, 2.0, -1.0}), DomainError);
}

TEST(NormalForm, RandomReconstructionAndSymplecticity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ab(1.0, 20.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Matrix omega = symplectic_form(2);
  for (int i = 0; i < 500; ++i) {
    const double a = ab(rng), b = ab(rng);
    const double cmax2 = a * b - std::max(a, b) + 1.0;
    const NormalFormCM nf{a, b, std::sqrt(u(rng) * cmax2)};
    const auto d = normal_form_decompose(nf);
    const Eigen::Matrix4d v = nf.to_matrix();
    const Eigen::Matrix4d rec = d.s_matrix * diag_nu(d.nu_minus, d.nu_plus) * d.s_matrix.transpose();
    const double scale = v.cwiseAbs().maxCoeff();
    EXPECT_LT((rec - v).cwiseAbs().maxCoeff(), 1e-10 * scale);
    EXPECT_LT(max_abs(d.s_matrix * omega * d.s_matrix.transpose() - omega), 1e-10);
    const auto [lo, hi] = symplectic_spectrum_generic(v);
    const auto [slo, shi] = d.sorted();
    EXPECT_NEAR(lo, slo, 1e-9 * scale);
    EXPECT_NEAR(hi, shi, 1e-9 * scale);
  }
}

TEST(SymplecticSpectrum, Examples) {
  auto [a, b] = symplectic_spectrum_generic(Eigen::Matrix4d::Identity());
  EXPECT_NEAR(a, 1.0, 1e-14);
  EXPECT_NEAR(b, 1.0, 1e-14);
  std::tie(a, b) = symplectic_spectrum_generic(2.0 * Eigen::Matrix4d::Identity());
  EXPECT_NEAR(a, 2.0, 1e-14);
  EXPECT_NEAR(b, 2.0, 1e-14);
  const Eigen::Matrix4d v = loss_on_signal(tmsv_state(1.0), 0.25).cm();
  std::tie(a, b) = symplectic_spectrum_generic(v);
  EXPECT_NEAR(a, 1.0, 1e-12);
  EXPECT_NEAR(b, 2.5, 1e-12);
}

TEST(Williamson, SingleModeThermal) {
  Matrix v(2, 2);
  v << 5.0, 1.0, 1.0, 2.0;
  const Williamson w = williamson(GaussianState(Vector::Zero(2), v));
  EXPECT_NEAR(w.nu(0), 3.0, 1e-12);
  const Matrix rec = w.s * (w.nu(0) * Matrix::Identity(2, 2)) * w.s.transpose();
  EXPECT_LT(max_abs(rec - v), 1e-12);
}
