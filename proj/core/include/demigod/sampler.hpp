#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include <boost/rational.hpp>

#include "demigod/cube.hpp"

namespace demigod {

enum class SamplerScheme { fix, reject };

SamplerScheme parse_scheme(std::string_view name);
std::string_view to_string(SamplerScheme s);

struct SamplerConfig {
  std::uint64_t master_seed = 0;
  SamplerScheme scheme = SamplerScheme::fix;
};

// Independent engine for sample `index`; depends on nothing but the pair.
std::mt19937_64 sample_engine(std::uint64_t master_seed, std::uint64_t index);

// Unbiased draw from [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform permutation, orientations drawn independently, no validity fix-up.
CubieState draw_raw(std::mt19937_64& rng);

// Swaps the contents of the UR and UF edge slots. An involution that flips
// edge parity, so it maps mismatched-parity states onto matched ones.
void parity_swap(CubieState& c);

struct SampleDraw {
  CubieState state;
  int reassemblies = 1;  // raw draws consumed; always 1 for the fix scheme
};

SampleDraw sample_with_count(const SamplerConfig& cfg, std::uint64_t index);
CubieState sample_uniform(const SamplerConfig& cfg, std::uint64_t index);

// Fraction of raw draws (indices 0..trials-1 under `seed`) that are valid.
boost::rational<std::int64_t> count_valid_fraction(std::uint64_t trials, std::uint64_t seed);

}  // namespace demigod
