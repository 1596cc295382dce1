#pragma once

// Sampling campaigns: solve samples 0..N-1 of a seed, write them as CSV,
// read them back, and summarise them as a histogram and a report.
//
// CSV header: index,seed,length,solver,millis,solution[,state]
// `solution` is space-separated Singmaster text and `state` the 54 facelets.

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "demigod/cube.hpp"
#include "demigod/stats.hpp"
#include "demigod/tables.hpp"
#include "demigod/twophase.hpp"

namespace demigod {

enum class SolverKind { twophase, beginner };

std::string_view to_string(SolverKind k);
SolverKind parse_solver(std::string_view name);  // ParseFailure

struct CampaignRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::twophase;
  // Search effort in milliseconds at kNodesPerMs; 0 for the beginner solver.
  // Derived from node counts so campaign files are reproducible.
  std::uint64_t millis = 0;
  MoveSequence solution;
  CubieState state;
};

struct CampaignConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  SolverKind solver = SolverKind::twophase;
  SolveBudget budget;
};

// Records come back ordered by index and identical for any thread count.
// States the two-phase search cannot finish within budget are solved by the
// beginner solver instead. Every certificate is replayed before it is
// returned; VerificationFailure if one does not solve its state.
std::vector<CampaignRecord> run_campaign(const CampaignConfig& cfg, const PhaseTables* tables,
                                         const std::function<void(std::uint64_t done)>& progress = {});

void write_campaign_csv(std::ostream& out, std::span<const CampaignRecord> records, bool embed_states);

// A CSV line as written, with the solution left as text.
struct CampaignRow {
  std::size_t line = 0;
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::size_t length = 0;
  std::string solver;
  std::uint64_t millis = 0;
  std::string solution;
  std::optional<std::string> state;
};

// ParseFailure (with line number) on a bad header, field count or number.
std::vector<CampaignRow> read_campaign_rows(std::istream& in);

using Histogram = std::map<int, std::uint64_t>;

Histogram histogram(std::span<const int> lengths);
void write_histogram_csv(std::ostream& out, const Histogram& h);

struct ReportParams {
  int threshold = 20;
  double t_deviation = 0.1;
  double p_far = 0.0003;
  int human_number = kHumanNumber;
};

struct CampaignReport {
  std::uint64_t samples = 0;
  double mean = 0;
  double mean_close = 0;
  std::uint64_t far_count = 0;
  int threshold = 20;
  double t_deviation = 0.1;
  double p_far = 0.0003;
  int human_number = kHumanNumber;
  double mean_upper_bound = 0;
  std::int64_t diameter_bound = 0;
  double error_probability_log10 = 0;
  Histogram histogram;
};

// EmptyInput for no lengths; DomainError from the bound arithmetic.
CampaignReport make_report(std::span<const int> lengths, const ReportParams& params);

std::string report_to_json(const CampaignReport& r);
CampaignReport report_from_json(std::string_view json);  // ParseFailure

}  // namespace demigod
