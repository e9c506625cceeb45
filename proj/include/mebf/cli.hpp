#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mebf/metrics.hpp"
#include "mebf/simulate.hpp"

namespace mebf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kDefaultT = 0.8;
inline constexpr std::size_t kDefaultK = 5;
// denoise defaults
inline constexpr double kDenoiseT = 0.6;
inline constexpr std::size_t kDenoiseK = 5;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Serializes a report as a JSON object with keys, in order:
/// reconstruction_error, density, coverage_rate, final_cost, pattern_count,
/// wall_time_s, cost_history, per_column_coverage. Absent fields are omitted.
std::string report_to_json(const MetricsReport& report);

struct BenchScenario {
  std::string name;
  SimulationSpec sim;
  double t = 0.8;
  std::size_t k_max = 10;
  std::size_t replicates = 50;
};

/// The simulation grid: scales {100, 1000} x p0 {0.2, 0.4} x p {0, 0.01},
/// k = 5, 50 replicates, t = 0.8, k_max = 10.
std::vector<BenchScenario> paper_grid();

/// Expands a comma-separated list of grid names ("paper", "paper-100",
/// "paper-1000") and scenario names (e.g. "n100_p0.2_noise0.01").
/// Throws std::invalid_argument for an unknown name.
std::vector<BenchScenario> expand_scenarios(const std::string& list);

struct BenchRow {
  std::string scenario;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  std::optional<double> reconstruction_error;
  std::optional<double> density;
  std::optional<double> coverage;
  std::size_t patterns = 0;
  double seconds = 0;
};

/// Runs every scenario x replicate. Replicate r of any scenario uses seed
/// master_seed + r. Rows come back in (scenario, replicate) order whatever
/// the number of worker threads.
std::vector<BenchRow> run_bench(const std::vector<BenchScenario>& scenarios,
                                std::uint64_t master_seed, std::size_t jobs);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace mebf::cli
