// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Pass criterion numbers as arguments to run a subset.
//
// Runtime is dominated by criterion 6 (10^4 two-phase solves at the default
// 200 ms node budget, about 35 minutes on one core).

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "demigod/beginner.hpp"
#include "demigod/campaign.hpp"
#include "demigod/cayley.hpp"
#include "demigod/certify.hpp"
#include "demigod/errors.hpp"
#include "demigod/sampler.hpp"
#include "demigod/stats.hpp"
#include "demigod/tables.hpp"
#include "demigod/twophase.hpp"

#ifndef DEMIGOD_TEST_TABLES_DIR
#define DEMIGOD_TEST_TABLES_DIR "tables"
#endif

using namespace demigod;

namespace {

// Criterion 1
constexpr int kCycleMaxN = 50;
constexpr int kHypercubeMaxN = 12;
constexpr double kClosedFormSeconds = 10;
// Criterion 4
constexpr std::uint64_t kPocketStates = 3674160;  // 7! * 3^6
constexpr std::uint32_t kPocketDepth = 11;
constexpr double kPocketSeconds = 300;
constexpr long kPocketMaxRssKb = 1024 * 1024;
// Criterion 5
constexpr std::uint64_t kFixSamples = 1'000'000;
constexpr std::uint64_t kRejectDraws = 100'000;
constexpr double kRedrawMean = 12, kRedrawTolerance = 0.5;
constexpr std::uint64_t kKsSamples = 100'000;
constexpr int kKsTimeCapMs = 1;
constexpr double kKsAlpha = 1e-3;
// Criterion 6
constexpr std::uint64_t kDeskSamples = 10'000;
constexpr unsigned kDeskThreads = 8;
constexpr double kMeanLow = 18.0, kMeanHigh = 18.8;
constexpr int kExpectedMode = 18;
constexpr double kMinFractionAtMost20 = 0.95;
constexpr std::size_t kMaxLength = 24;
constexpr double kDeskMinutes = 45;
// Criterion 7
constexpr std::uint64_t kBeginnerSamples = 1000;
// Criterion 8
constexpr double kHoeffdingRelTol = 1e-12;
constexpr double kFarEvidenceCeiling = 7.02e-66;
constexpr double kMeanBound = 18.4804, kMeanBoundTol = 1e-9;
constexpr std::int64_t kDiameterBound = 36;
constexpr double kErrorCeiling = 1e-10;
// Criterion 10
constexpr std::uint64_t kDeterminismSamples = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long max_rss_kb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [not met]");
  }
};

std::string fmt(double v, int prec = 4) {
  std::ostringstream s;
  s.precision(prec);
  s << std::fixed << v;
  return s.str();
}

std::string text(const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

const PhaseTables& tables() {
  static const PhaseTables t = PhaseTables::load_or_build(resolve_tables_dir(DEMIGOD_TEST_TABLES_DIR));
  return t;
}

Outcome closed_forms() {
  Outcome o;
  const auto t0 = Clock::now();
  int bad = 0;
  for (std::int64_t n = 2; n <= kCycleMaxN; ++n)
    if (mean_distance(cycle_graph(static_cast<std::uint32_t>(2 * n))) != Rational(n * n, 2 * n - 1)) ++bad;
  o.require(bad == 0, "C_2n mean == n^2/(2n-1) for n=2.." + std::to_string(kCycleMaxN) + " (" +
                          std::to_string(bad) + " mismatches)");
  bad = 0;
  for (std::int64_t n = 2; n <= kHypercubeMaxN; ++n) {
    const std::int64_t p = std::int64_t{1} << n;
    if (mean_distance(hypercube_graph(static_cast<std::uint32_t>(n))) != Rational(n * p / 2, p - 1)) ++bad;
  }
  o.require(bad == 0, "Q_n mean == n 2^(n-1)/(2^n-1) for n=2.." + std::to_string(kHypercubeMaxN) + " (" +
                          std::to_string(bad) + " mismatches)");
  const double dt = seconds_since(t0);
  o.require(dt < kClosedFormSeconds, "runtime " + fmt(dt, 2) + " s < 10 s");
  return o;
}

Outcome theorem_check() {
  Outcome o;
  int checked = 0, failed = 0;
  auto check = [&](const SmallGraph& g) {
    ++checked;
    if (!verify_demigod_theorem(g).holds) ++failed;
  };
  for (std::uint32_t n = 3; n <= 100; ++n) check(build_cayley(cyclic_presentation(n), n));
  for (std::uint32_t n = 2; n <= 12; ++n) check(build_cayley(hypercube_presentation(n), 1u << n));
  for (std::uint32_t n = 3; n <= 12; ++n) check(build_cayley(dihedral_presentation(n), 2 * n));
  check(build_cayley(transposition_presentation(4), 24));
  o.require(failed == 0, std::to_string(checked) + " cycle/hypercube/dihedral/S_4 Cayley graphs satisfy D < 2mu");
  const SmallGraph pocket = build_cayley(pocket_cube_presentation(), kPocketStates);
  const TheoremCheck t = verify_demigod_theorem(pocket);
  o.require(pocket.size() == kPocketStates && t.holds,
            "pocket cube |V|=" + std::to_string(pocket.size()) + " D=" + std::to_string(t.diameter) +
                " mu=" + text(t.mean) + " holds=" + (t.holds ? "true" : "false"));
  return o;
}

Outcome counterexample() {
  Outcome o;
  const auto r9 = clique_path_ratio(9);
  o.require(r9.diameter == 4, "clique_path(9) D=" + std::to_string(r9.diameter));
  Rational prev(0);
  bool increasing = true;
  std::string seq;
  for (std::uint32_t n : {9u, 16u, 25u, 36u, 49u, 64u}) {
    const auto r = clique_path_ratio(n);
    increasing = increasing && r.ratio > prev;
    prev = r.ratio;
    seq += (seq.empty() ? "" : " < ") + fmt(static_cast<double>(r.ratio.numerator()) / r.ratio.denominator(), 4);
  }
  o.require(increasing, "D/mu strictly increasing: " + seq);
  return o;
}

Outcome pocket_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  const PocketCubeOracle p = pocket_cube_bfs();
  const double dt = seconds_since(t0);
  const long rss = max_rss_kb();
  o.require(p.states == kPocketStates && kPocketStates == 5040ull * 729ull,
            "states " + std::to_string(p.states) + " == 7! 3^6");
  o.require(p.max_depth == kPocketDepth, "max depth " + std::to_string(p.max_depth));
  o.require(dt < kPocketSeconds, "runtime " + fmt(dt, 2) + " s < 300 s");
  o.require(rss < kPocketMaxRssKb, "peak RSS " + std::to_string(rss / 1024) + " MB < 1 GB");
  return o;
}

// Two-sample Kolmogorov-Smirnov statistic and its asymptotic p-value.
double ks_statistic(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const int v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

double ks_pvalue(double d, std::size_t n, std::size_t m) {
  const double ne = static_cast<double>(n) * m / (n + m);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  if (lambda < 1e-3) return 1;
  double sum = 0;
  for (int k = 1; k <= 100; ++k) sum += (k % 2 ? 2 : -2) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(sum, 0.0, 1.0);
}

std::vector<int> solver_depths(SamplerScheme scheme, std::uint64_t seed, bool& all_verified) {
  std::vector<int> out;
  out.reserve(kKsSamples);
  const SolveBudget budget{24, kKsTimeCapMs, true};
  for (std::uint64_t i = 0; i < kKsSamples; ++i) {
    const CubieState s = sample_uniform({seed, scheme}, i);
    MoveSequence sol;
    try {
      sol = solve_twophase(s, budget, tables());
    } catch (const BudgetExceeded&) {
      sol = solve_beginner(s);
    }
    all_verified = all_verified && verify_certificate(s, sol).valid;
    out.push_back(static_cast<int>(sol.length()));
  }
  return out;
}

Outcome sampler_uniformity() {
  Outcome o;
  std::uint64_t invalid = 0;
  for (std::uint64_t i = 0; i < kFixSamples; ++i) {
    const CubieState c = sample_uniform({101, SamplerScheme::fix}, i);
    int twist = 0, flip = 0;
    for (auto t : c.corner_ori) twist += t;
    for (auto f : c.edge_ori) flip += f;
    if (corner_parity(c) != edge_parity(c) || twist % 3 || flip % 2 || !is_valid(c)) ++invalid;
  }
  o.require(invalid == 0, std::to_string(kFixSamples) + " fix samples valid (" + std::to_string(invalid) + " invalid)");

  std::uint64_t draws = 0;
  for (std::uint64_t i = 0; i < kRejectDraws; ++i)
    draws += static_cast<std::uint64_t>(sample_with_count({202, SamplerScheme::reject}, i).reassemblies);
  const double mean = static_cast<double>(draws) / kRejectDraws;
  o.require(std::abs(mean - kRedrawMean) <= kRedrawTolerance, "reject mean redraws " + fmt(mean, 3) + " in 12 +- 0.5");

  bool verified = true;
  const auto fix = solver_depths(SamplerScheme::fix, 303, verified);
  const auto reject = solver_depths(SamplerScheme::reject, 404, verified);
  const double d = ks_statistic(fix, reject);
  const double p = ks_pvalue(d, fix.size(), reject.size());
  o.require(verified, "all KS-sample certificates verified");
  o.require(p >= kKsAlpha, "KS fix vs reject over " + std::to_string(kKsSamples) + " each at " +
                               std::to_string(kKsTimeCapMs) + " ms: D=" + fmt(d, 5) + " p=" + fmt(p, 4) +
                               " >= 1e-3");
  return o;
}

// Shared by criteria 6 and 9.
std::vector<CampaignRecord> desk_records;
double desk_seconds = 0;

Outcome empirical_mean() {
  Outcome o;
  CampaignConfig cfg;
  cfg.samples = kDeskSamples;
  cfg.seed = 2024;
  cfg.threads = kDeskThreads;
  const auto t0 = Clock::now();
  bool verified = true;
  try {
    desk_records = run_campaign(cfg, &tables());
  } catch (const VerificationFailure& e) {
    verified = false;
    o.require(false, e.what());
    return o;
  }
  desk_seconds = seconds_since(t0);

  std::vector<int> lengths;
  std::uint64_t fallbacks = 0;
  for (const auto& r : desk_records) {
    lengths.push_back(static_cast<int>(r.solution.length()));
    verified = verified && verify_certificate(r.state, r.solution).valid;
    if (r.solver != SolverKind::twophase) ++fallbacks;
  }
  const Histogram h = histogram(lengths);
  double sum = 0;
  std::uint64_t at_most_20 = 0;
  for (int l : lengths) {
    sum += l;
    if (l <= 20) ++at_most_20;
  }
  const double mean = sum / lengths.size();
  const int mode = std::max_element(h.begin(), h.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
  const double frac20 = static_cast<double>(at_most_20) / lengths.size();
  const int longest = h.rbegin()->first;

  std::string hist;
  for (const auto& [l, c] : h) hist += (hist.empty() ? "" : " ") + std::to_string(l) + ":" + std::to_string(c);
  std::cout << "  criterion 6 histogram: " << hist << "\n";

  o.require(mean >= kMeanLow && mean <= kMeanHigh, "mean " + fmt(mean, 4) + " in [18.0, 18.8]");
  o.require(mode == kExpectedMode, "mode " + std::to_string(mode) + " == 18");
  o.require(frac20 >= kMinFractionAtMost20, "fraction <= 20: " + fmt(frac20, 4) + " >= 0.95");
  o.require(static_cast<std::size_t>(longest) <= kMaxLength && fallbacks == 0,
            "longest " + std::to_string(longest) + " <= 24, beginner fallbacks " + std::to_string(fallbacks));
  o.require(verified, "all " + std::to_string(lengths.size()) + " certificates verified");
  o.require(desk_seconds <= kDeskMinutes * 60, "runtime " + fmt(desk_seconds / 60, 1) + " min <= 45 min");
  return o;
}

Outcome human_number() {
  Outcome o;
  std::uint64_t bad_cert = 0, over_total = 0, over_step = 0;
  std::size_t longest = 0;
  for (std::uint64_t i = 0; i < kBeginnerSamples; ++i) {
    const CubieState s = sample_uniform({707, SamplerScheme::fix}, i);
    MoveSequence all;
    const auto trace = step_trace(s);
    for (std::size_t k = 0; k < trace.size(); ++k) {
      if (static_cast<int>(trace[k].moves.length()) > kStepBudgets[k].cap) ++over_step;
      for (const Move& m : trace[k].moves) all.push_back(m);
    }
    if (!verify_certificate(s, all).valid) ++bad_cert;
    if (static_cast<int>(all.length()) > kHumanNumber) ++over_total;
    longest = std::max(longest, all.length());
  }
  o.require(bad_cert == 0, std::to_string(kBeginnerSamples) + " certificates verified");
  o.require(over_total == 0, "longest total " + std::to_string(longest) + " <= 205");
  o.require(over_step == 0, std::to_string(over_step) + " steps over their cap");
  return o;
}

Outcome bound_arithmetic() {
  Outcome o;
  const auto h = hoeffding_tail(500000, 0.1, 20);
  const double expected = 2 * std::exp(-25.0);
  const double rel = std::abs(static_cast<double>(h.value) - expected) / expected;
  o.require(rel <= kHoeffdingRelTol, "hoeffding rel error " + fmt(rel * 1e12, 3) + "e-12");
  const auto f = far_apart_evidence(500000, 0.0003);
  o.require(f.log10 <= std::log10(kFarEvidenceCeiling), "far evidence log10 " + fmt(static_cast<double>(f.log10), 4) +
                                                            " <= log10(7.02e-66)");
  const auto r = demigod_bound({18.3189, 500000, 0.0003, 205, 0.1, 20});
  const double mb = static_cast<double>(r.mean_upper_bound);
  o.require(std::abs(mb - kMeanBound) <= kMeanBoundTol, "mean bound " + fmt(mb, 6));
  o.require(r.diameter_bound == kDiameterBound, "diameter bound " + std::to_string(r.diameter_bound));
  o.require(r.error_probability.value < kErrorCeiling,
            "error probability log10 " + fmt(static_cast<double>(r.error_probability.log10), 3) + " < -10");
  return o;
}

std::string csv_of(const std::vector<CampaignRecord>& records, bool embed) {
  std::ostringstream out;
  write_campaign_csv(out, records, embed);
  return out.str();
}

CampaignSummary verify_text(const std::string& csv) {
  std::istringstream in(csv);
  return verify_campaign(in);
}

Outcome trust_chain() {
  Outcome o;
  if (desk_records.empty()) {
    CampaignConfig cfg;
    cfg.samples = 500;
    cfg.seed = 2024;
    desk_records = run_campaign(cfg, &tables());
  }
  const std::string csv = csv_of(desk_records, false);
  double recorded = 0;
  for (const auto& r : desk_records) recorded += static_cast<double>(r.solution.length());
  recorded /= static_cast<double>(desk_records.size());
  const auto s = verify_text(csv);
  o.require(s.failures.empty() && s.verified == desk_records.size(),
            std::to_string(s.verified) + "/" + std::to_string(s.total) + " records verified");
  o.require(s.mean == recorded, "recomputed mean " + fmt(s.mean, 6) + " == recorded " + fmt(recorded, 6));

  // One byte in a move token, one in a length, one in a seed.
  const std::size_t line_no = desk_records.size() / 2 + 2;
  std::size_t start = 0;
  for (std::size_t l = 1; l < line_no; ++l) start = csv.find('\n', start) + 1;
  const std::size_t end = csv.find('\n', start);
  std::vector<std::pair<std::string, std::size_t>> tampers;
  {
    std::string t = csv;
    const std::size_t p = csv.rfind(',', end) + 1;
    t[p] = t[p] == 'U' ? 'D' : 'U';
    tampers.emplace_back(std::move(t), line_no);
  }
  {
    std::string t = csv;
    const std::size_t p = csv.find(',', csv.find(',', start) + 1) + 1;
    t[p] = t[p] == '9' ? '8' : static_cast<char>(t[p] + 1);
    tampers.emplace_back(std::move(t), line_no);
  }
  {
    std::string t = csv;
    const std::size_t p = csv.find(',', start) + 1;
    t[p] = t[p] == '9' ? '8' : static_cast<char>(t[p] + 1);
    tampers.emplace_back(std::move(t), line_no);
  }
  int detected = 0;
  for (const auto& [t, line] : tampers) {
    const auto ts = verify_text(t);
    if (ts.failures.size() == 1 && ts.failures[0].line == line) ++detected;
  }
  o.require(detected == static_cast<int>(tampers.size()),
            std::to_string(detected) + "/" + std::to_string(tampers.size()) + " single-byte tampers detected at line " +
                std::to_string(line_no));
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string reference;
  bool same = true;
  for (unsigned threads : {1u, 4u, 8u}) {
    CampaignConfig cfg;
    cfg.samples = kDeterminismSamples;
    cfg.seed = 99;
    cfg.threads = threads;
    const std::string csv = csv_of(run_campaign(cfg, &tables()), true);
    if (reference.empty())
      reference = csv;
    else
      same = same && csv == reference;
  }
  o.require(same, std::to_string(kDeterminismSamples) + "-sample two-phase campaign bytes identical for threads 1, 4, 8");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  // Criterion 4 first so its peak RSS is not inflated by later work.
  const std::vector<std::pair<int, std::pair<std::string, std::function<Outcome()>>>> criteria{
      {4, {"pocket-cube oracle", pocket_oracle}},
      {1, {"closed forms", closed_forms}},
      {2, {"theorem check", theorem_check}},
      {3, {"clique-path counterexample", counterexample}},
      {8, {"bound arithmetic", bound_arithmetic}},
      {7, {"human's number", human_number}},
      {5, {"sampler uniformity", sampler_uniformity}},
      {6, {"empirical mean at desk scale", empirical_mean}},
      {9, {"trust chain", trust_chain}},
      {10, {"determinism across threads", determinism}},
  };

  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& [id, c] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    const std::string line = std::string(o.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + " (" +
                             c.first + ", " + fmt(seconds_since(t0), 1) + " s): " + o.detail;
    std::cout << line << std::endl;
    lines[id] = line;
  }
  std::cout << "\nsummary\n";
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  return all ? 0 : 1;
}
