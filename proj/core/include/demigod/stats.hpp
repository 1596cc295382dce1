#pragma once

#include <cstdint>
#include <span>

namespace demigod {

inline constexpr int kHumanNumber = 205;

// A probability kept alongside its base-10 logarithm so tiny values survive.
struct Probability {
  long double value = 0;
  long double log10 = 0;
};

// 2 exp(-2 s t^2 / C^2), clamped to [0, 1]. DomainError unless s >= 1, t > 0, C > 0.
Probability hoeffding_tail(std::uint64_t s, double t, double c);

// (1 - p)^s. DomainError unless s >= 1 and 0 < p < 1.
Probability far_apart_evidence(std::uint64_t s, double p);

// Largest integer strictly below x.
std::int64_t strict_floor(long double x);

struct DemigodInput {
  double mean_close = 0;
  std::uint64_t samples = 1;
  double p_far = 0;
  int human_number = kHumanNumber;
  double t = 0.1;
  int threshold = 20;
};

struct DemigodResult {
  long double mean_upper_bound = 0;
  std::int64_t diameter_bound = 0;
  Probability hoeffding;
  Probability far_evidence;  // value 0 when p_far == 0
  Probability error_probability;
};

DemigodResult demigod_bound(const DemigodInput& in);

// Both the closed form with the published constant and the one re-derived
// from C = 205, t = 0.1 (denominator 205^2 / (2 * 0.1^2) = 2,101,250).
struct Theorem1Bound {
  static constexpr double kStatedConstant = 1541939.0;
  static constexpr double kRederivedConstant = 2101250.0;
  Probability stated;
  Probability rederived;
};

Theorem1Bound theorem1_bound(std::uint64_t samples);

struct MeanDecomposition {
  std::uint64_t close_count = 0;
  std::uint64_t far_count = 0;
  long double mean_close = 0;
  long double mean_overall_bound = 0;  // mean_close + p_far * human_number
};

// EmptyInput on an empty list.
MeanDecomposition mean_decomposition(std::span<const int> lengths, int threshold, double p_far,
                                     int human_number = kHumanNumber);

std::uint64_t count_far_apart(std::span<const int> lengths, int threshold);

}  // namespace demigod
