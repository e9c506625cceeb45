#include "mebf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mebf/factorize.hpp"
#include "mebf/matrix_io.hpp"
#include "mebf/oracle.hpp"

namespace mebf::cli {

namespace {

// Bad arguments detected after CLI11 parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string shortest(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, p) : std::string("nan");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

void check_threshold(double t) {
  if (!(t > 0.0 && t < 1.0)) throw UsageError("--t must lie in (0,1), got " + shortest(t));
}

void check_k(std::size_t k) {
  if (k < 1) throw UsageError("--k must be at least 1");
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// report serialization

std::string report_to_json(const MetricsReport& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (r.reconstruction_error) j["reconstruction_error"] = *r.reconstruction_error;
  if (r.density) j["density"] = *r.density;
  if (r.coverage_rate) j["coverage_rate"] = *r.coverage_rate;
  j["final_cost"] = r.final_cost;
  j["pattern_count"] = r.pattern_count;
  if (r.wall_time) j["wall_time_s"] = *r.wall_time;
  j["cost_history"] = r.cost_history;
  j["per_column_coverage"] = r.per_column_coverage;
  return j.dump() + "\n";
}

// ---------------------------------------------------------------------------
// scenarios

std::vector<BenchScenario> paper_grid() {
  std::vector<BenchScenario> out;
  for (std::size_t scale : {100, 1000})
    for (double p0 : {0.2, 0.4})
      for (double p : {0.0, 0.01}) {
        BenchScenario s;
        s.name = "n" + std::to_string(scale) + "_p" + shortest(p0) + "_noise" + shortest(p);
        s.sim.n = s.sim.m = scale;
        s.sim.k = 5;
        s.sim.p0 = p0;
        s.sim.p = p;
        out.push_back(std::move(s));
      }
  return out;
}

std::vector<BenchScenario> expand_scenarios(const std::string& list) {
  const auto grid = paper_grid();
  std::vector<BenchScenario> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (name == "paper") {
      out.insert(out.end(), grid.begin(), grid.end());
    } else if (name == "paper-100" || name == "paper-1000") {
      const std::size_t scale = name == "paper-100" ? 100 : 1000;
      for (const auto& s : grid)
        if (s.sim.n == scale) out.push_back(s);
    } else {
      auto it = std::find_if(grid.begin(), grid.end(),
                             [&](const BenchScenario& s) { return s.name == name; });
      if (it == grid.end()) throw std::invalid_argument("unknown scenario '" + name + "'");
      out.push_back(*it);
    }
  }
  if (out.empty()) throw std::invalid_argument("no scenarios selected");
  return out;
}

// ---------------------------------------------------------------------------
// bench

std::vector<BenchRow> run_bench(const std::vector<BenchScenario>& scenarios,
                                std::uint64_t master_seed, std::size_t jobs) {
  struct Task {
    const BenchScenario* scenario;
    std::size_t replicate;
  };
  std::vector<Task> tasks;
  for (const auto& s : scenarios)
    for (std::size_t r = 0; r < s.replicates; ++r) tasks.push_back({&s, r});

  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t idx = next++; idx < tasks.size(); idx = next++) {
      const Task& task = tasks[idx];
      SimulationSpec spec = task.scenario->sim;
      spec.seed = replicate_seed(master_seed, task.replicate);
      const SimulatedInstance inst = simulate(spec);

      MebfConfig cfg;
      cfg.t = task.scenario->t;
      cfg.k_max = task.scenario->k_max;
      const auto t0 = std::chrono::steady_clock::now();
      const FactorResult res = mebf_factorize(inst.X, cfg);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

      const MetricsReport rep =
          build_report(inst.X, res, GroundTruth{inst.U, inst.V}, dt.count());
      BenchRow& row = rows[idx];
      row.scenario = task.scenario->name;
      row.replicate = task.replicate;
      row.seed = spec.seed;
      row.reconstruction_error = rep.reconstruction_error;
      row.density = rep.density;
      row.coverage = rep.coverage_rate;
      row.patterns = rep.pattern_count;
      row.seconds = dt.count();
    }
  };

  jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

std::string bench_csv_header() {
  return "scenario,replicate,seed,reconstruction_error,density,coverage,patterns,seconds\n";
}

std::string bench_csv_row(const BenchRow& row) {
  auto opt = [](const std::optional<double>& v) { return v ? shortest(*v) : std::string(); };
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.6f", row.seconds);
  return row.scenario + "," + std::to_string(row.replicate) + "," + std::to_string(row.seed) +
         "," + opt(row.reconstruction_error) + "," + opt(row.density) + "," +
         opt(row.coverage) + "," + std::to_string(row.patterns) + "," + secs + "\n";
}

// ---------------------------------------------------------------------------
// commands

namespace {

struct FactorizeArgs {
  std::string input, format = "dense01", factor_format = "dense01";
  std::string out_a, out_b, report, truth_u, truth_v;
  double t = kDefaultT, threshold = 0.0;
  std::size_t k = kDefaultK;
  bool timing = false;
};

struct SimulateArgs {
  std::size_t n = 100, m = 100, k = 5;
  double p0 = 0.2, p = 0.0;
  std::uint64_t seed = 0;
  std::string scenario, out, out_a, out_b, format = "dense01";
};

struct BenchArgs {
  std::string scenarios = "paper", out;
  std::optional<std::size_t> replicates, k;
  std::optional<double> t;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;
};

struct DenoiseArgs {
  std::string input, out, out_a, out_b, report;
  double t = kDenoiseT, threshold = 0.0;
  std::size_t k = kDenoiseK;
};

struct MetricsArgs {
  std::string input, format = "dense01", factor_format = "dense01";
  std::string a, b, truth_u, truth_v, report;
  double threshold = 0.0;
};

struct OracleArgs {
  std::string input, format = "dense01";
  std::size_t k = 1;
};

std::optional<GroundTruth> read_truth(const std::string& u, const std::string& v,
                                      MatrixFormat fmt) {
  if (u.empty() && v.empty()) return std::nullopt;
  if (u.empty() || v.empty()) throw UsageError("--u and --v must be given together");
  return GroundTruth{read_binary(u, fmt), read_binary(v, fmt)};
}

void emit_report(const MetricsReport& rep, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
  const std::string json = report_to_json(rep);
  if (path.empty())
    out << json;
  else
    write_text(path, json);
}

int cmd_factorize(const FactorizeArgs& a, std::ostream& out, std::ostream& err) {
  check_threshold(a.t);
  check_k(a.k);
  const MatrixFormat fmt = parse_format(a.format);
  const MatrixFormat ffmt = parse_format(a.factor_format);

  const BinaryMatrix x = read_binary(a.input, fmt, a.threshold);
  const auto truth = read_truth(a.truth_u, a.truth_v, fmt);

  MebfConfig cfg;
  cfg.t = a.t;
  cfg.k_max = a.k;
  const auto t0 = std::chrono::steady_clock::now();
  const FactorResult res = mebf_factorize(x, cfg);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  err << "factorized " << x.rows() << "x" << x.cols() << " into " << res.k << " patterns in "
      << dt.count() << " s (" << res.weak_signal_uses << " from weak-signal detection)\n";

  if (!a.out_a.empty()) write_matrix(res.A, a.out_a, ffmt);
  if (!a.out_b.empty()) write_matrix(res.B, a.out_b, ffmt);

  const MetricsReport rep =
      build_report(x, res, truth, a.timing ? std::optional<double>(dt.count()) : std::nullopt);
  out << "cost_history: " << join_counts(res.cost_history) << "\n";
  if (!a.report.empty()) emit_report(rep, a.report, out, err);
  return kExitOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& err) {
  SimulationSpec spec;
  if (!a.scenario.empty()) {
    const auto sc = expand_scenarios(a.scenario);
    if (sc.size() != 1) throw UsageError("simulate takes exactly one scenario");
    spec = sc.front().sim;
  } else {
    spec.n = a.n;
    spec.m = a.m;
    spec.k = a.k;
    spec.p0 = a.p0;
    spec.p = a.p;
  }
  spec.seed = a.seed;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const MatrixFormat fmt = parse_format(a.format);
  const SimulatedInstance inst = simulate(spec);
  write_matrix(inst.X, a.out, fmt);
  if (!a.out_a.empty()) write_matrix(inst.U, a.out_a, fmt);
  if (!a.out_b.empty()) write_matrix(inst.V, a.out_b, fmt);
  err << "simulated " << spec.n << "x" << spec.m << " (k=" << spec.k << ", p0=" << spec.p0
      << ", p=" << spec.p << ", seed=" << spec.seed << "), |X|=" << inst.X.count() << "\n";
  return kExitOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<BenchScenario> scenarios;
  try {
    scenarios = expand_scenarios(a.scenarios);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.t) check_threshold(*a.t);
  if (a.k) check_k(*a.k);
  for (auto& s : scenarios) {
    if (a.replicates) s.replicates = *a.replicates;
    if (a.t) s.t = *a.t;
    if (a.k) s.k_max = *a.k;
  }
  const std::size_t jobs =
      a.jobs > 0 ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  err << "bench: " << scenarios.size() << " scenarios, " << jobs << " workers\n";

  const auto rows = run_bench(scenarios, a.seed, jobs);
  std::string csv = bench_csv_header();
  for (const auto& r : rows) csv += bench_csv_row(r);
  if (a.out.empty())
    out << csv;
  else
    write_text(a.out, csv);
  return kExitOk;
}

int cmd_denoise(const DenoiseArgs& a, std::ostream& out, std::ostream& err) {
  check_threshold(a.t);
  check_k(a.k);
  const auto raw = read_matrix(a.input, MatrixFormat::Csv);
  const RealMatrix& r = std::get<RealMatrix>(raw);
  const BinaryMatrix x = binarize(r, a.threshold);

  MebfConfig cfg;
  cfg.t = a.t;
  cfg.k_max = a.k;
  const FactorResult res = mebf_factorize(x, cfg);
  const RealMatrix cleaned = mask_denoise(r, res.A, res.B);
  write_matrix(cleaned, a.out);
  if (!a.out_a.empty()) write_matrix(res.A, a.out_a, MatrixFormat::Dense01);
  if (!a.out_b.empty()) write_matrix(res.B, a.out_b, MatrixFormat::Dense01);
  err << "denoise: " << r.rows() << "x" << r.cols() << ", " << x.count()
      << " positive entries, " << res.k << " patterns\n";
  if (!a.report.empty()) emit_report(build_report(x, res, std::nullopt, std::nullopt), a.report, out, err);
  return kExitOk;
}

int cmd_metrics(const MetricsArgs& a, std::ostream& out, std::ostream& err) {
  const MatrixFormat fmt = parse_format(a.format);
  const MatrixFormat ffmt = parse_format(a.factor_format);
  const BinaryMatrix x = read_binary(a.input, fmt, a.threshold);
  const BinaryMatrix fa = read_binary(a.a, ffmt);
  const BinaryMatrix fb = read_binary(a.b, ffmt);
  // An empty factor file reads as 0x0; treat that as k = 0 for this X.
  const BinaryMatrix A = fa.rows() == 0 && fa.cols() == 0 ? BinaryMatrix(x.rows(), 0) : fa;
  const BinaryMatrix B = fb.rows() == 0 && fb.cols() == 0 ? BinaryMatrix(0, x.cols()) : fb;
  if (A.rows() != x.rows() || B.cols() != x.cols() || A.cols() != B.rows())
    throw ShapeError("factor shapes " + std::to_string(A.rows()) + "x" +
                     std::to_string(A.cols()) + " and " + std::to_string(B.rows()) + "x" +
                     std::to_string(B.cols()) + " do not fit X " + std::to_string(x.rows()) +
                     "x" + std::to_string(x.cols()));
  const auto truth = read_truth(a.truth_u, a.truth_v, fmt);
  const MetricsReport rep = build_report(x, A, B, prefix_costs(A, B, x), truth, std::nullopt);
  emit_report(rep, a.report, out, err);
  return kExitOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const BinaryMatrix x = read_binary(a.input, parse_format(a.format));
  ExactFactorization best;
  try {
    best = exhaustive_bmf(x, a.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "min_cost: " << best.min_cost << "\nA:\n"
      << best.A.to_string() << "B:\n"
      << best.B.to_string();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Median-expansion Boolean matrix factorization toolkit", "mebf"};
  app.require_subcommand(1);

  FactorizeArgs fa;
  auto* factorize = app.add_subcommand("factorize", "Factorize a binary matrix");
  factorize->add_option("--input", fa.input, "Input matrix")->required();
  factorize->add_option("--format", fa.format, "Input format: dense01, coo or csv");
  factorize->add_option("--threshold", fa.threshold, "Binarization threshold for csv input");
  factorize->add_option("--t", fa.t, "Similarity threshold in (0,1)");
  factorize->add_option("--k", fa.k, "Maximum number of patterns");
  factorize->add_option("--out-a", fa.out_a, "Where to write A (n x k)");
  factorize->add_option("--out-b", fa.out_b, "Where to write B (k x m)");
  factorize->add_option("--factor-format", fa.factor_format, "Format of A and B files");
  factorize->add_option("--report", fa.report, "Where to write the JSON metrics report");
  factorize->add_option("--u", fa.truth_u, "Ground-truth U for reconstruction error");
  factorize->add_option("--v", fa.truth_v, "Ground-truth V for reconstruction error");
  factorize->add_flag("--timing", fa.timing, "Include wall_time_s in the report");

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Generate a planted-pattern matrix");
  sim->add_option("--n", sa.n, "Rows");
  sim->add_option("--m", sa.m, "Columns");
  sim->add_option("--k", sa.k, "Planted patterns");
  sim->add_option("--p0", sa.p0, "Pattern density");
  sim->add_option("--p", sa.p, "Flip-noise rate");
  sim->add_option("--seed", sa.seed, "Generator seed");
  sim->add_option("--scenarios", sa.scenario, "Named scenario (overrides n, m, k, p0, p)");
  sim->add_option("--out", sa.out, "Where to write X")->required();
  sim->add_option("--out-a", sa.out_a, "Where to write U");
  sim->add_option("--out-b", sa.out_b, "Where to write V");
  sim->add_option("--format", sa.format, "Output format: dense01, coo or csv");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run simulation scenarios and emit CSV rows");
  bench->add_option("--scenarios", ba.scenarios, "Comma-separated grids or scenario names");
  bench->add_option("--replicates", ba.replicates, "Replicates per scenario");
  bench->add_option("--seed", ba.seed, "Master seed; replicate r uses seed + r");
  bench->add_option("--t", ba.t, "Override the similarity threshold");
  bench->add_option("--k", ba.k, "Override the pattern budget");
  bench->add_option("--jobs", ba.jobs, "Worker threads (default: hardware concurrency)");
  bench->add_option("--out", ba.out, "CSV output path (default: stdout)");

  DenoiseArgs da;
  auto* denoise = app.add_subcommand("denoise", "Mask a continuous matrix to its BMF support");
  denoise->add_option("--input", da.input, "Input csv matrix")->required();
  denoise->add_option("--out", da.out, "Output csv matrix")->required();
  denoise->add_option("--t", da.t, "Similarity threshold in (0,1)");
  denoise->add_option("--k", da.k, "Maximum number of patterns");
  denoise->add_option("--threshold", da.threshold, "Binarization threshold");
  denoise->add_option("--out-a", da.out_a, "Where to write A");
  denoise->add_option("--out-b", da.out_b, "Where to write B");
  denoise->add_option("--report", da.report, "Where to write the JSON metrics report");

  MetricsArgs ma;
  auto* metrics = app.add_subcommand("metrics", "Compute the metrics report for given factors");
  metrics->add_option("--input", ma.input, "X")->required();
  metrics->add_option("--format", ma.format, "Format of X, U and V");
  metrics->add_option("--threshold", ma.threshold, "Binarization threshold for csv input");
  metrics->add_option("--a,--out-a", ma.a, "A (n x k)")->required();
  metrics->add_option("--b,--out-b", ma.b, "B (k x m)")->required();
  metrics->add_option("--factor-format", ma.factor_format, "Format of A and B files");
  metrics->add_option("--u", ma.truth_u, "Ground-truth U");
  metrics->add_option("--v", ma.truth_v, "Ground-truth V");
  metrics->add_option("--report", ma.report, "Output path (default: stdout)");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "");  // empty description hides it from help
  oracle->add_option("--input", oa.input)->required();
  oracle->add_option("--format", oa.format);
  oracle->add_option("--k", oa.k);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*factorize) return cmd_factorize(fa, out, err);
    if (*sim) return cmd_simulate(sa, err);
    if (*bench) return cmd_bench(ba, out, err);
    if (*denoise) return cmd_denoise(da, out, err);
    if (*metrics) return cmd_metrics(ma, out, err);
    if (*oracle) return cmd_oracle(oa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace mebf::cli
