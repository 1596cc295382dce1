#include "demigod/campaign.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "demigod/beginner.hpp"
#include "demigod/certify.hpp"
#include "demigod/errors.hpp"
#include "demigod/sampler.hpp"

namespace demigod {
namespace {

constexpr std::string_view kHeader = "index,seed,length,solver,millis,solution";
constexpr std::string_view kHeaderWithState = "index,seed,length,solver,millis,solution,state";

CampaignRecord solve_one(const CampaignConfig& cfg, const PhaseTables* tables, std::uint64_t index) {
  CampaignRecord r;
  r.index = index;
  r.seed = cfg.seed;
  r.state = sample_uniform({cfg.seed, SamplerScheme::fix}, index);
  r.solver = cfg.solver;
  if (cfg.solver == SolverKind::twophase) {
    SolveStats stats;
    try {
      r.solution = solve_twophase(r.state, cfg.budget, *tables, &stats);
    } catch (const BudgetExceeded&) {
      r.solver = SolverKind::beginner;
      r.solution = solve_beginner(r.state);
    }
    r.millis = stats.nodes / kNodesPerMs;
  } else {
    r.solution = solve_beginner(r.state);
  }
  if (!verify_certificate(r.state, r.solution).valid)
    throw VerificationFailure("sample " + std::to_string(index) + ": certificate does not verify");
  return r;
}

template <class T>
T parse_number(std::string_view s, std::size_t line, const char* field) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw ParseFailure(std::string("bad ") + field + " '" + std::string(s) + "'", line);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (std::size_t start = 0;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

std::string_view to_string(SolverKind k) { return k == SolverKind::twophase ? "twophase" : "beginner"; }

SolverKind parse_solver(std::string_view name) {
  if (name == "twophase") return SolverKind::twophase;
  if (name == "beginner") return SolverKind::beginner;
  throw ParseFailure("unknown solver '" + std::string(name) + "'");
}

std::vector<CampaignRecord> run_campaign(const CampaignConfig& cfg, const PhaseTables* tables,
                                         const std::function<void(std::uint64_t)>& progress) {
  if (cfg.solver == SolverKind::twophase && !tables) throw DomainError("two-phase campaign needs tables");
  std::vector<CampaignRecord> out(cfg.samples);
  std::atomic<std::uint64_t> next{0}, done{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;

  auto worker = [&] {
    for (std::uint64_t i; !failed && (i = next++) < cfg.samples;) {
      try {
        out[i] = solve_one(cfg, tables, i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
      const auto d = ++done;
      if (progress) {
        std::lock_guard lock(mu);
        progress(d);
      }
    }
  };
  const unsigned n = std::max(1u, cfg.threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

void write_campaign_csv(std::ostream& out, std::span<const CampaignRecord> records, bool embed_states) {
  out << (embed_states ? kHeaderWithState : kHeader) << '\n';
  for (const auto& r : records) {
    out << r.index << ',' << r.seed << ',' << r.solution.length() << ',' << to_string(r.solver) << ',' << r.millis
        << ',' << r.solution.to_string();
    if (embed_states) out << ',' << to_facelets(r.state);
    out << '\n';
  }
}

std::vector<CampaignRow> read_campaign_rows(std::istream& in) {
  std::string text;
  if (!std::getline(in, text)) throw ParseFailure("empty campaign file", 1);
  if (!text.empty() && text.back() == '\r') text.pop_back();
  bool with_state;
  if (text == kHeader)
    with_state = false;
  else if (text == kHeaderWithState)
    with_state = true;
  else
    throw ParseFailure("unexpected header '" + text + "'", 1);

  std::vector<CampaignRow> rows;
  for (std::size_t line = 2; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    const auto f = split(text, ',');
    if (f.size() != (with_state ? 7u : 6u))
      throw ParseFailure("expected " + std::to_string(with_state ? 7 : 6) + " fields", line);
    CampaignRow r;
    r.line = line;
    r.index = parse_number<std::uint64_t>(f[0], line, "index");
    r.seed = parse_number<std::uint64_t>(f[1], line, "seed");
    r.length = parse_number<std::size_t>(f[2], line, "length");
    r.solver = std::string(f[3]);
    r.millis = parse_number<std::uint64_t>(f[4], line, "millis");
    r.solution = std::string(f[5]);
    if (with_state) r.state = std::string(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

Histogram histogram(std::span<const int> lengths) {
  Histogram h;
  for (int l : lengths) ++h[l];
  return h;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "length,count\n";
  for (const auto& [length, count] : h) out << length << ',' << count << '\n';
}

CampaignReport make_report(std::span<const int> lengths, const ReportParams& params) {
  const MeanDecomposition md = mean_decomposition(lengths, params.threshold, params.p_far, params.human_number);
  std::uint64_t sum = 0;
  for (int l : lengths) sum += static_cast<std::uint64_t>(l);

  CampaignReport r;
  r.samples = lengths.size();
  r.mean = static_cast<double>(sum) / static_cast<double>(lengths.size());
  r.mean_close = static_cast<double>(md.mean_close);
  r.far_count = md.far_count;
  r.threshold = params.threshold;
  r.t_deviation = params.t_deviation;
  r.p_far = params.p_far;
  r.human_number = params.human_number;
  const DemigodResult b = demigod_bound({r.mean_close, r.samples, params.p_far, params.human_number,
                                         params.t_deviation, params.threshold});
  r.mean_upper_bound = static_cast<double>(b.mean_upper_bound);
  r.diameter_bound = b.diameter_bound;
  r.error_probability_log10 = static_cast<double>(b.error_probability.log10);
  r.histogram = histogram(lengths);
  return r;
}

std::string report_to_json(const CampaignReport& r) {
  nlohmann::ordered_json j;
  j["samples"] = r.samples;
  j["mean"] = r.mean;
  j["mean_close"] = r.mean_close;
  j["far_count"] = r.far_count;
  j["threshold"] = r.threshold;
  j["t_deviation"] = r.t_deviation;
  j["p_far"] = r.p_far;
  j["human_number"] = r.human_number;
  j["mean_upper_bound"] = r.mean_upper_bound;
  j["diameter_bound"] = r.diameter_bound;
  j["error_probability_log10"] = r.error_probability_log10;
  auto& h = j["histogram"] = nlohmann::ordered_json::array();
  for (const auto& [length, count] : r.histogram) h.push_back({{"length", length}, {"count", count}});
  return j.dump(2) + "\n";
}

CampaignReport report_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CampaignReport r;
    r.samples = j.at("samples").get<std::uint64_t>();
    r.mean = j.at("mean").get<double>();
    r.mean_close = j.at("mean_close").get<double>();
    r.far_count = j.at("far_count").get<std::uint64_t>();
    r.threshold = j.at("threshold").get<int>();
    r.t_deviation = j.at("t_deviation").get<double>();
    r.p_far = j.at("p_far").get<double>();
    r.human_number = j.at("human_number").get<int>();
    r.mean_upper_bound = j.at("mean_upper_bound").get<double>();
    r.diameter_bound = j.at("diameter_bound").get<std::int64_t>();
    r.error_probability_log10 = j.at("error_probability_log10").get<double>();
    for (const auto& e : j.at("histogram")) r.histogram[e.at("length").get<int>()] = e.at("count").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("report: ") + e.what());
  }
}

}  // namespace demigod
