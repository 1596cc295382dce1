#include "demigod/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "demigod/errors.hpp"

namespace demigod {
namespace {

Probability from_ln(long double ln) {
  ln = std::min(ln, 0.0L);
  return {std::exp(ln), ln / std::numbers::ln10_v<long double>};
}

}  // namespace

Probability hoeffding_tail(std::uint64_t s, double t, double c) {
  if (s == 0) throw DomainError("hoeffding_tail: s must be at least 1");
  if (!(t > 0) || !(c > 0)) throw DomainError("hoeffding_tail: t and C must be positive");
  const long double tt = t, cc = c;
  return from_ln(std::numbers::ln2_v<long double> - 2.0L * static_cast<long double>(s) * tt * tt / (cc * cc));
}

Probability far_apart_evidence(std::uint64_t s, double p) {
  if (s == 0) throw DomainError("far_apart_evidence: s must be at least 1");
  if (!(p > 0 && p < 1)) throw DomainError("far_apart_evidence: p must lie in (0, 1)");
  return from_ln(static_cast<long double>(s) * std::log1p(-static_cast<long double>(p)));
}

std::int64_t strict_floor(long double x) {
  const long double f = std::floor(x);
  return static_cast<std::int64_t>(f == x ? f - 1 : f);
}

DemigodResult demigod_bound(const DemigodInput& in) {
  if (!(in.p_far >= 0 && in.p_far <= 1)) throw DomainError("p_far must lie in [0, 1]");
  if (in.mean_close < 0 || in.mean_close > in.threshold)
    throw DomainError("mean_close must lie in [0, threshold]");
  if (in.human_number < in.threshold) throw DomainError("human_number must be at least threshold");
  DemigodResult r;
  r.mean_upper_bound = static_cast<long double>(in.mean_close) + in.t +
                       static_cast<long double>(in.p_far) * in.human_number;
  r.diameter_bound = strict_floor(2 * r.mean_upper_bound);
  r.hoeffding = hoeffding_tail(in.samples, in.t, in.threshold);
  if (in.p_far > 0 && in.p_far < 1) {
    r.far_evidence = far_apart_evidence(in.samples, in.p_far);
  } else {
    // p_far = 0 asserts nothing about far states; p_far = 1 is vacuous.
    r.far_evidence = in.p_far == 0 ? Probability{1, 0} : Probability{0, -INFINITY};
  }
  const long double total = r.hoeffding.value + r.far_evidence.value;
  if (total > 0 && std::isfinite(std::log10(total))) {
    r.error_probability = {std::min(total, 1.0L), std::min(std::log10(total), 0.0L)};
  } else {
    // Both terms underflowed; log-add the exponents.
    const long double a = r.hoeffding.log10, b = r.far_evidence.log10;
    const long double hi = std::max(a, b), lo = std::min(a, b);
    r.error_probability = {total, hi + std::log10(1 + std::pow(10.0L, lo - hi))};
  }
  return r;
}

Theorem1Bound theorem1_bound(std::uint64_t samples) {
  if (samples == 0) throw DomainError("theorem1_bound: samples must be at least 1");
  const long double n = static_cast<long double>(samples);
  Theorem1Bound b;
  b.stated = from_ln(std::numbers::ln2_v<long double> - n / Theorem1Bound::kStatedConstant);
  b.rederived = from_ln(std::numbers::ln2_v<long double> - 2.0L * n * 0.01L / (205.0L * 205.0L));
  return b;
}

MeanDecomposition mean_decomposition(std::span<const int> lengths, int threshold, double p_far,
                                     int human_number) {
  if (lengths.empty()) throw EmptyInput("mean_decomposition: no records");
  MeanDecomposition m;
  long double sum = 0;
  for (int len : lengths) {
    if (len > threshold) {
      ++m.far_count;
    } else {
      ++m.close_count;
      sum += len;
    }
  }
  m.mean_close = m.close_count ? sum / m.close_count : 0;
  m.mean_overall_bound = m.mean_close + static_cast<long double>(p_far) * human_number;
  return m;
}

std::uint64_t count_far_apart(std::span<const int> lengths, int threshold) {
  return static_cast<std::uint64_t>(std::count_if(lengths.begin(), lengths.end(), [&](int l) { return l > threshold; }));
}

}  // namespace demigod
