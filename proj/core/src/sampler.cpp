#include "demigod/sampler.hpp"

#include <limits>
#include <string>

#include "demigod/errors.hpp"

namespace demigod {
namespace {

template <std::size_t N>
void shuffle(std::mt19937_64& rng, std::array<std::uint8_t, N>& a) {
  for (std::size_t i = N - 1; i > 0; --i) std::swap(a[i], a[uniform_below(rng, i + 1)]);
}

CubieState draw_fixed(std::mt19937_64& rng) {
  CubieState c;
  shuffle(rng, c.corner_perm);
  shuffle(rng, c.edge_perm);
  if (corner_parity(c) != edge_parity(c)) parity_swap(c);
  int twist = 0;
  for (int i = 0; i < kCornerCount - 1; ++i) {
    c.corner_ori[i] = static_cast<std::uint8_t>(uniform_below(rng, 3));
    twist += c.corner_ori[i];
  }
  c.corner_ori[kCornerCount - 1] = static_cast<std::uint8_t>((3 - twist % 3) % 3);
  int flip = 0;
  for (int i = 0; i < kEdgeCount - 1; ++i) {
    c.edge_ori[i] = static_cast<std::uint8_t>(uniform_below(rng, 2));
    flip += c.edge_ori[i];
  }
  c.edge_ori[kEdgeCount - 1] = static_cast<std::uint8_t>(flip % 2);
  return c;
}

}  // namespace

SamplerScheme parse_scheme(std::string_view name) {
  if (name == "fix") return SamplerScheme::fix;
  if (name == "reject") return SamplerScheme::reject;
  throw DomainError("unknown sampler scheme '" + std::string(name) + "'");
}

std::string_view to_string(SamplerScheme s) { return s == SamplerScheme::fix ? "fix" : "reject"; }

std::mt19937_64 sample_engine(std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

CubieState draw_raw(std::mt19937_64& rng) {
  CubieState c;
  shuffle(rng, c.corner_perm);
  shuffle(rng, c.edge_perm);
  for (auto& o : c.corner_ori) o = static_cast<std::uint8_t>(uniform_below(rng, 3));
  for (auto& o : c.edge_ori) o = static_cast<std::uint8_t>(uniform_below(rng, 2));
  return c;
}

void parity_swap(CubieState& c) {
  std::swap(c.edge_perm[UR], c.edge_perm[UF]);
  std::swap(c.edge_ori[UR], c.edge_ori[UF]);
}

SampleDraw sample_with_count(const SamplerConfig& cfg, std::uint64_t index) {
  auto rng = sample_engine(cfg.master_seed, index);
  if (cfg.scheme == SamplerScheme::fix) return {draw_fixed(rng), 1};
  SampleDraw out;
  out.reassemblies = 1;
  for (out.state = draw_raw(rng); !is_valid(out.state); out.state = draw_raw(rng)) ++out.reassemblies;
  return out;
}

CubieState sample_uniform(const SamplerConfig& cfg, std::uint64_t index) {
  return sample_with_count(cfg, index).state;
}

boost::rational<std::int64_t> count_valid_fraction(std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("trials must be at least 1");
  std::int64_t valid = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto rng = sample_engine(seed, i);
    valid += is_valid(draw_raw(rng));
  }
  return {valid, static_cast<std::int64_t>(trials)};
}

}  // namespace demigod
