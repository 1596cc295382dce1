#include "demigod/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <thread>
#include <vector>

namespace demigod {
namespace {

TEST(Sampler, UniformBelowStaysInRangeAndIsBalanced) {
  std::mt19937_64 rng(1);
  std::array<int, 7> counts{};
  const int n = 70000;
  for (int i = 0; i < n; ++i) {
    const auto x = uniform_below(rng, 7);
    ASSERT_LT(x, 7u);
    ++counts[x];
  }
  const double sigma = std::sqrt(n * (1.0 / 7) * (6.0 / 7));
  for (int c : counts) EXPECT_NEAR(c, n / 7.0, 5 * sigma);
  EXPECT_EQ(uniform_below(rng, 1), 0u);
}

TEST(Sampler, FixSchemeOutputsAreValid) {
  const SamplerConfig cfg{42, SamplerScheme::fix};
  for (std::uint64_t i = 0; i < 20000; ++i) ASSERT_TRUE(is_valid(sample_uniform(cfg, i))) << i;
}

TEST(Sampler, RejectSchemeOutputsAreValid) {
  const SamplerConfig cfg{42, SamplerScheme::reject};
  for (std::uint64_t i = 0; i < 2000; ++i) ASSERT_TRUE(is_valid(sample_uniform(cfg, i))) << i;
}

TEST(Sampler, ParitySwapIsAnInvolutionThatTogglesParity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const CubieState raw = draw_raw(rng);
    CubieState once = raw;
    parity_swap(once);
    EXPECT_NE(edge_parity(once), edge_parity(raw));
    EXPECT_EQ(corner_parity(once), corner_parity(raw));
    CubieState twice = once;
    parity_swap(twice);
    EXPECT_EQ(twice, raw);
  }
}

TEST(Sampler, CornerSlotOccupancyIsUniform) {
  const SamplerConfig cfg{7, SamplerScheme::fix};
  const int n = 100000;
  std::array<std::array<int, 8>, 8> occupancy{};
  std::array<std::array<int, 3>, 8> twists{};
  for (int i = 0; i < n; ++i) {
    const CubieState c = sample_uniform(cfg, i);
    for (int s = 0; s < 8; ++s) {
      ++occupancy[s][c.corner_perm[s]];
      ++twists[s][c.corner_ori[s]];
    }
  }
  const double sigma8 = std::sqrt(n * (1.0 / 8) * (7.0 / 8));
  const double sigma3 = std::sqrt(n * (1.0 / 3) * (2.0 / 3));
  for (int s = 0; s < 8; ++s) {
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(occupancy[s][k], n / 8.0, 5 * sigma8);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(twists[s][k], n / 3.0, 5 * sigma3);
  }
}

TEST(Sampler, RejectSchemeNeedsTwelveReassembliesOnAverage) {
  const SamplerConfig cfg{2024, SamplerScheme::reject};
  const int n = 100000;
  double total = 0;
  for (int i = 0; i < n; ++i) total += sample_with_count(cfg, i).reassemblies;
  EXPECT_NEAR(total / n, 12.0, 0.5);
}

TEST(Sampler, ValidFraction) {
  const auto f = count_valid_fraction(100000, 9);
  EXPECT_NEAR(boost::rational_cast<double>(f), 1.0 / 12, 0.003);

  // Single-trial fractions are exactly 1 or 0 depending on the draw.
  std::uint64_t valid_seed = 0, invalid_seed = 0;
  while (true) {
    auto rng = sample_engine(valid_seed, 0);
    if (is_valid(draw_raw(rng))) break;
    ++valid_seed;
  }
  while (true) {
    auto rng = sample_engine(invalid_seed, 0);
    if (!is_valid(draw_raw(rng))) break;
    ++invalid_seed;
  }
  EXPECT_EQ(count_valid_fraction(1, valid_seed).numerator(), 1);
  EXPECT_EQ(count_valid_fraction(1, invalid_seed).numerator(), 0);
}

TEST(Sampler, ReplayIsIndependentOfThreads) {
  const SamplerConfig cfg{99, SamplerScheme::reject};
  std::vector<CubieState> serial(64), threaded(64);
  for (int i = 0; i < 64; ++i) serial[i] = sample_uniform(cfg, i);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (int i = 63 - t; i >= 0; i -= 4) threaded[i] = sample_uniform(cfg, i);
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(serial, threaded);
  EXPECT_NE(sample_uniform(cfg, 0), sample_uniform({100, SamplerScheme::reject}, 0));
}

TEST(Sampler, SchemeNames) {
  EXPECT_EQ(parse_scheme("fix"), SamplerScheme::fix);
  EXPECT_EQ(to_string(parse_scheme("reject")), "reject");
  EXPECT_ANY_THROW(parse_scheme("other"));
}

}  // namespace
}  // namespace demigod
