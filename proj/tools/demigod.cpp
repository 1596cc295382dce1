// demigod: sampling campaigns, solving, verification, bounds and the Cayley
// laboratory from the command line.
//
// Exit codes: 0 success, 1 usage or bad input, 2 verification failure, 3 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "demigod/beginner.hpp"
#include "demigod/campaign.hpp"
#include "demigod/cayley.hpp"
#include "demigod/certify.hpp"
#include "demigod/errors.hpp"
#include "demigod/stats.hpp"
#include "demigod/tables.hpp"
#include "demigod/twophase.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace demigod;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

json rational_json(const Rational& r) { return {{"exact", rational_text(r)}, {"value", to_double(r)}}; }

json probability_json(const Probability& p) {
  return {{"value", static_cast<double>(p.value)}, {"log10", static_cast<double>(p.log10)}};
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw IoFailure("cannot open " + p.string());
  return in;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot write " + p.string());
  return out;
}

void close_out(std::ofstream& out, const fs::path& p) {
  out.close();
  if (!out) throw IoFailure("error writing " + p.string());
}

PhaseTables load_tables(const fs::path& dir, bool quiet) {
  const auto resolved = resolve_tables_dir(dir);
  const auto t0 = std::chrono::steady_clock::now();
  PhaseTables::Progress progress;
  if (!quiet)
    progress = [t0](const std::string& msg) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::cerr << "[" << dt.count() << "s] " << msg << '\n';
    };
  if (!quiet && !fs::exists(PhaseTables::cache_path(resolved)))
    std::cerr << "building two-phase tables in " << resolved << " (about a minute)\n";
  return PhaseTables::load_or_build(resolved, progress);
}

json theorem_json(const TheoremCheck& t) {
  return {{"diameter", t.diameter}, {"mu", rational_json(t.mean)}, {"holds", t.holds}};
}

// sample-solve

struct SampleSolveOpts {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string solver = "twophase";
  int max_length = 24;
  int time_cap_ms = 200;
  ReportParams report;
  fs::path out = "campaign.csv";
  fs::path report_path;
  fs::path tables_dir = "tables";
  bool embed_states = false;
  bool quiet = false;
};

int run_sample_solve(const SampleSolveOpts& o) {
  CampaignConfig cfg;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.solver = parse_solver(o.solver);
  cfg.budget = {o.max_length, o.time_cap_ms, true};
  if (cfg.budget.max_length < 1 || cfg.budget.time_cap_ms < 1) throw DomainError("max-length and time-cap-ms must be >= 1");

  std::optional<PhaseTables> tables;
  if (cfg.solver == SolverKind::twophase) tables = load_tables(o.tables_dir, o.quiet);

  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t step = std::max<std::uint64_t>(1, o.samples / 100);
  std::function<void(std::uint64_t)> progress;
  if (!o.quiet)
    progress = [&](std::uint64_t done) {
      if (done % step && done != o.samples) return;
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::cerr << "\r" << done << "/" << o.samples << " solved (" << static_cast<int>(dt.count()) << "s)" << std::flush;
    };
  const auto records = run_campaign(cfg, tables ? &*tables : nullptr, progress);
  if (!o.quiet) std::cerr << '\n';

  auto csv = open_out(o.out);
  write_campaign_csv(csv, records, o.embed_states);
  close_out(csv, o.out);

  std::vector<int> lengths;
  lengths.reserve(records.size());
  for (const auto& r : records) lengths.push_back(static_cast<int>(r.solution.length()));
  const CampaignReport report = make_report(lengths, o.report);
  const fs::path report_path = o.report_path.empty() ? fs::path(o.out).replace_extension(".json") : o.report_path;
  auto rj = open_out(report_path);
  rj << report_to_json(report);
  close_out(rj, report_path);
  std::cout << report_to_json(report);
  return 0;
}

// bound

struct BoundOpts {
  fs::path report;
  double mean_close = 18.3189;
  std::uint64_t samples = 500000;
  ReportParams params;
};

int run_bound(const BoundOpts& o) {
  DemigodInput in{o.mean_close, o.samples, o.params.p_far, o.params.human_number, o.params.t_deviation,
                  o.params.threshold};
  if (!o.report.empty()) {
    auto f = open_in(o.report);
    std::stringstream ss;
    ss << f.rdbuf();
    const CampaignReport r = report_from_json(ss.str());
    in = {r.mean_close, r.samples, r.p_far, r.human_number, r.t_deviation, r.threshold};
  }
  const DemigodResult r = demigod_bound(in);
  const Theorem1Bound t1 = theorem1_bound(in.samples);
  print({{"input",
          {{"mean_close", in.mean_close},
           {"samples", in.samples},
           {"p_far", in.p_far},
           {"human_number", in.human_number},
           {"t_deviation", in.t},
           {"threshold", in.threshold}}},
         {"mean_upper_bound", static_cast<double>(r.mean_upper_bound)},
         {"diameter_bound", r.diameter_bound},
         {"hoeffding", probability_json(r.hoeffding)},
         {"far_apart_evidence", probability_json(r.far_evidence)},
         {"error_probability", probability_json(r.error_probability)},
         {"theorem1",
          {{"stated_constant", Theorem1Bound::kStatedConstant},
           {"stated", probability_json(t1.stated)},
           {"rederived_constant", Theorem1Bound::kRederivedConstant},
           {"rederived", probability_json(t1.rederived)}}}});
  return 0;
}

// verify

int run_verify(const fs::path& csv) {
  const CampaignSummary s = verify_campaign(csv);
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back({{"line", f.line}, {"index", f.index}, {"reason", f.reason}});
  print({{"total", s.total},
         {"verified", s.verified},
         {"length_sum", s.length_sum},
         {"mean", s.mean},
         {"failures", failures}});
  return s.failures.empty() ? 0 : kExitVerification;
}

int run_histogram(const fs::path& csv, const fs::path& out) {
  auto in = open_in(csv);
  std::vector<int> lengths;
  for (const auto& r : read_campaign_rows(in)) lengths.push_back(static_cast<int>(r.length));
  const Histogram h = histogram(lengths);
  if (out.empty()) {
    write_histogram_csv(std::cout, h);
  } else {
    auto f = open_out(out);
    write_histogram_csv(f, h);
    close_out(f, out);
  }
  return 0;
}

// solve

struct SolveOpts {
  std::string state;
  std::string scramble;
  std::string solver = "twophase";
  int max_length = 24;
  int time_cap_ms = 200;
  fs::path tables_dir = "tables";
  bool quiet = false;
};

int run_solve(const SolveOpts& o) {
  if (o.state.empty() == o.scramble.empty()) throw DomainError("give exactly one of --state or --scramble");
  const CubieState s = o.state.empty() ? apply_sequence({}, MoveSequence::parse(o.scramble)) : from_facelets(o.state);
  if (!is_valid(s)) throw InvalidState("state is not reachable");
  json out{{"state", to_facelets(s)}, {"solver", o.solver}};
  MoveSequence sol;
  if (parse_solver(o.solver) == SolverKind::beginner) {
    json steps = json::array();
    for (const auto& st : step_trace(s)) {
      steps.push_back({{"step", to_string(st.step)}, {"moves", st.moves.to_string()}, {"length", st.moves.length()}});
      for (const Move& m : st.moves) sol.push_back(m);
    }
    out["steps"] = steps;
  } else {
    const PhaseTables t = load_tables(o.tables_dir, o.quiet);
    SolveStats stats;
    sol = solve_twophase(s, {o.max_length, o.time_cap_ms, true}, t, &stats);
    out["nodes"] = stats.nodes;
  }
  const CertificateCheck check = verify_certificate(s, sol);
  out["solution"] = sol.to_string();
  out["length"] = check.length;
  out["verified"] = check.valid;
  print(out);
  return check.valid ? 0 : kExitVerification;
}

// cayley

void add_cayley(CLI::App& app, int& rc) {
  auto* cay = app.add_subcommand("cayley", "Exact diameter and mean distance of small graphs")->require_subcommand(1);

  static std::uint32_t n = 0;
  auto* cycle = cay->add_subcommand("cycle", "Cycle C_N");
  cycle->add_option("N", n, "Vertices")->required()->check(CLI::Range(3u, 1u << 20));
  cycle->callback([&] {
    const SmallGraph g = cycle_graph(n);
    print({{"graph", "cycle"}, {"n", n}, {"vertices", g.size()}, {"theorem", theorem_json(verify_demigod_theorem(g))}});
    rc = 0;
  });

  auto* cube = cay->add_subcommand("hypercube", "Hypercube Q_N");
  cube->add_option("N", n, "Dimension")->required()->check(CLI::Range(1u, 20u));
  cube->callback([&] {
    const SmallGraph g = hypercube_graph(n);
    print({{"graph", "hypercube"}, {"n", n}, {"vertices", g.size()}, {"theorem", theorem_json(verify_demigod_theorem(g))}});
    rc = 0;
  });

  auto* cp = cay->add_subcommand("clique-path", "Clique on N vertices with a pendant path of sqrt(N)");
  cp->add_option("N", n, "Clique size (perfect square)")->required();
  cp->callback([&] {
    const CliquePathResult r = clique_path_ratio(n);
    const SmallGraph g = clique_path_graph(n);
    print({{"graph", "clique-path"},
           {"n", n},
           {"vertices", g.size()},
           {"diameter", r.diameter},
           {"mu", rational_json(r.mean)},
           {"ratio", rational_json(r.ratio)},
           {"vertex_transitive_consistent", check_vertex_transitive_consistency(g)}});
    rc = 0;
  });

  auto* pocket = cay->add_subcommand("pocket-cube", "Full BFS of the 2x2x2 cube with one corner fixed");
  pocket->callback([&] {
    const PocketCubeOracle o = pocket_cube_bfs();
    print({{"graph", "pocket-cube"},
           {"vertices", o.states},
           {"diameter", o.max_depth},
           {"mu", rational_json(o.mean)},
           {"holds", Rational(o.max_depth) < 2 * o.mean},
           {"level_counts", o.level_counts}});
    rc = 0;
  });

  static fs::path file;
  static std::uint64_t cap = 5'000'000;
  static bool add_inverses = false;
  auto* custom = cay->add_subcommand("custom", "Graph from an edge list (\"u v\" per line, 0-indexed)");
  custom->add_option("--edges", file, "Edge-list file")->required();
  custom->callback([&] {
    auto in = open_in(file);
    const SmallGraph g = parse_edge_list(in);
    json out{{"graph", "custom"},
             {"vertices", g.size()},
             {"edges", g.edge_count()},
             {"diameter", diameter(g)},
             {"mu", rational_json(mean_distance(g))}};
    const bool vt = check_vertex_transitive_consistency(g);
    out["vertex_transitive_consistent"] = vt;
    if (vt) out["theorem"] = theorem_json(verify_demigod_theorem(g));
    print(out);
    rc = 0;
  });

  auto* pres = cay->add_subcommand("presentation", "Cayley graph of a permutation group");
  pres->add_option("--perms", file, "One generator per line, 1-based one-line notation")->required();
  pres->add_option("--cap", cap, "Maximum group order");
  pres->add_flag("--add-inverses", add_inverses, "Append missing inverse generators");
  pres->callback([&] {
    auto in = open_in(file);
    const SmallGraph g = build_cayley(parse_presentation(in, add_inverses), cap);
    print({{"graph", "cayley"}, {"vertices", g.size()}, {"theorem", theorem_json(verify_demigod_theorem(g))}});
    rc = 0;
  });
}

int classify(const std::exception& e) {
  if (dynamic_cast<const VerificationFailure*>(&e)) return kExitVerification;
  if (dynamic_cast<const IoFailure*>(&e) || dynamic_cast<const CorruptCache*>(&e)) return kExitIo;
  if (dynamic_cast<const std::ios_base::failure*>(&e) || dynamic_cast<const fs::filesystem_error*>(&e)) return kExitIo;
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample, solve and certify Rubik's cube states; exact Cayley-graph checks."};
  app.require_subcommand(1);
  int rc = 0;

  SampleSolveOpts ss;
  auto* sample = app.add_subcommand("sample-solve", "Solve N uniform samples and write a campaign and report");
  sample->add_option("--samples", ss.samples, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", ss.seed, "Master seed");
  sample->add_option("--threads", ss.threads, "Worker threads")->check(CLI::PositiveNumber);
  sample->add_option("--solver", ss.solver, "twophase or beginner")->check(CLI::IsMember({"twophase", "beginner"}));
  sample->add_option("--max-length", ss.max_length, "Longest acceptable two-phase solution");
  sample->add_option("--time-cap-ms", ss.time_cap_ms, "Two-phase effort per state, as a node budget");
  sample->add_option("--threshold", ss.report.threshold, "Far-apart threshold");
  sample->add_option("--t-deviation", ss.report.t_deviation, "Hoeffding deviation t");
  sample->add_option("--p-far", ss.report.p_far, "Bound on the far-apart fraction");
  sample->add_option("--out", ss.out, "Campaign CSV path");
  sample->add_option("--report", ss.report_path, "Report JSON path (default: --out with .json)");
  sample->add_option("--tables-dir", ss.tables_dir, "Table cache directory (DEMIGOD_TABLES_DIR overrides)");
  sample->add_flag("--embed-states", ss.embed_states, "Add a facelet column to the CSV");
  sample->add_flag("-q,--quiet", ss.quiet, "No progress output");
  sample->callback([&] { rc = run_sample_solve(ss); });

  fs::path csv, hist_out;
  auto* hist = app.add_subcommand("histogram", "Per-length counts of a campaign");
  hist->add_option("campaign", csv, "Campaign CSV")->required();
  hist->add_option("--out", hist_out, "Histogram CSV path (default: stdout)");
  hist->callback([&] { rc = run_histogram(csv, hist_out); });

  BoundOpts bo;
  auto* bound = app.add_subcommand("bound", "Diameter bound from a report or explicit numbers");
  bound->add_option("--report", bo.report, "Report JSON from sample-solve");
  bound->add_option("--mean-close", bo.mean_close, "Empirical mean over close samples");
  bound->add_option("--samples", bo.samples, "Number of samples");
  bound->add_option("--p-far", bo.params.p_far, "Bound on the far-apart fraction");
  bound->add_option("--human-number", bo.params.human_number, "Unconditional distance bound");
  bound->add_option("--t-deviation", bo.params.t_deviation, "Hoeffding deviation t");
  bound->add_option("--threshold", bo.params.threshold, "Far-apart threshold");
  bound->callback([&] { rc = run_bound(bo); });

  auto* verify = app.add_subcommand("verify", "Replay every certificate of a campaign");
  verify->add_option("campaign", csv, "Campaign CSV")->required();
  verify->callback([&] { rc = run_verify(csv); });

  add_cayley(app, rc);

  fs::path tables_dir = "tables";
  bool force = false;
  auto* build = app.add_subcommand("build-tables", "Build or check the two-phase table cache");
  build->add_option("--tables-dir", tables_dir, "Table cache directory (DEMIGOD_TABLES_DIR overrides)");
  build->add_flag("--force", force, "Rebuild even if a valid cache exists");
  build->callback([&] {
    const auto dir = resolve_tables_dir(tables_dir);
    if (force) fs::remove(PhaseTables::cache_path(dir));
    load_tables(dir, false);
    std::cout << PhaseTables::cache_path(dir).string() << '\n';
    rc = 0;
  });

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "Solve one state and verify the certificate");
  solve->add_option("--state", so.state, "54 facelets, U L F R B D order");
  solve->add_option("--scramble", so.scramble, "Scramble applied to the solved cube");
  solve->add_option("--solver", so.solver, "twophase or beginner")->check(CLI::IsMember({"twophase", "beginner"}));
  solve->add_option("--max-length", so.max_length, "Longest acceptable solution");
  solve->add_option("--time-cap-ms", so.time_cap_ms, "Effort, as a node budget");
  solve->add_option("--tables-dir", so.tables_dir, "Table cache directory (DEMIGOD_TABLES_DIR overrides)");
  solve->add_flag("-q,--quiet", so.quiet, "No progress output");
  solve->callback([&] { rc = run_solve(so); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "demigod: " << e.what() << '\n';
    return classify(e);
  }
  return rc;
}
