#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qdisc/biophoto.hpp"

using namespace qdisc;

TEST(Growth, Concentration) {
  const GrowthParams p{};
  EXPECT_DOUBLE_EQ(concentration_growth(0.0, p), 0.0);
  EXPECT_NEAR(concentration_growth(1.0, p), 0.181269, 1e-6);
  EXPECT_NEAR(concentration_growth(1e3, p), 1.0, 1e-12);
}

TEST(Growth, Degraded) {
  GrowthParams p{};
  EXPECT_DOUBLE_EQ(concentration_degraded(0.7, 100.0, p), concentration_growth(0.7, p));
  p = GrowthParams{1.0, 10.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(concentration_degraded(0.0, 100.0, p), 0.0);
  EXPECT_NEAR(concentration_degraded(0.01, 100.0, p), -std::expm1(-0.1) * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(concentration_degraded(0.01, 100.0, p), 0.035008, 1e-6);
  EXPECT_LT(concentration_degraded(5.0, 100.0, p), 1e-100);
}

TEST(Growth, BeerLambert) {
  EXPECT_DOUBLE_EQ(beer_lambert(0.0), 1.0);
  EXPECT_NEAR(beer_lambert(1.0), 0.1, 1e-15);
  EXPECT_NEAR(beer_lambert(0.181269), std::pow(10.0, -0.181269), 1e-15);
  EXPECT_NEAR(beer_lambert(0.181269), 0.658766, 1e-6);
  EXPECT_THROW(beer_lambert(-1.0), DomainError);
}

TEST(Growth, ErrorVsTime) {
  const std::vector<double> ts{0.0, 0.05, 0.5};
  const TransmitterConfig coh{TransmitterKind::coherent, CopyCount::finite(1)};
  const TransmitterConfig wide{TransmitterKind::epr, CopyCount::broadband()};
  const auto c = error_vs_time(ts, 500.0, coh, GrowthParams{}, false);
  const auto q = error_vs_time(ts, 500.0, wide, GrowthParams{}, false);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_DOUBLE_EQ(c[0].p_error, 0.5);
  EXPECT_DOUBLE_EQ(q[0].p_error, 0.5);
  EXPECT_NEAR(c[1].p_error, 0.3747, 1e-4);
  EXPECT_NEAR(q[1].p_error, 5.6e-6, 0.1e-6);
  EXPECT_GT(c[1].p_error, c[2].p_error);
}

TEST(Memory, Transmissivity) {
  const SaturationParams sp{0.05, 0.007};
  EXPECT_DOUBLE_EQ(memory_transmissivity(0.0, sp), 0.95);
  EXPECT_NEAR(memory_transmissivity(100.0, sp), 0.975171, 1e-6);
  EXPECT_NEAR(memory_transmissivity(1e9, sp), 1.0, 1e-9);
}

TEST(Memory, Information) {
  EXPECT_DOUBLE_EQ(info_per_cell(0.5), 0.0);
  EXPECT_DOUBLE_EQ(info_per_cell(0.0), 1.0);
  EXPECT_NEAR(info_per_cell(0.264841), 0.166036, 1e-6);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
}

TEST(Memory, Readout) {
  const SaturationParams sp{5e-3, 1e-4};
  const TransmitterConfig coh{TransmitterKind::coherent, CopyCount::finite(1)};
  const TransmitterConfig m1{TransmitterKind::epr, CopyCount::finite(1)};
  const TransmitterConfig wide{TransmitterKind::epr, CopyCount::broadband()};
  EXPECT_DOUBLE_EQ(memory_readout(0.0, sp, coh), 0.0);
  EXPECT_DOUBLE_EQ(memory_readout(0.0, sp, wide), 0.0);
  EXPECT_GE(memory_readout(5000.0, sp, wide), 0.99);
  EXPECT_LE(memory_readout(5000.0, sp, coh), 0.02);
  for (double n : {1.0, 10.0, 100.0, 1e3, 1e4})
    EXPECT_GE(memory_readout(n, sp, wide), memory_readout(n, sp, m1));
}
