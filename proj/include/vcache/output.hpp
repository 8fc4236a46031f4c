#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vcache/simulation.hpp"

namespace vcache {

/// Final values of a run, taken from the last row of each CSV series.
struct Summary {
  std::optional<double> final_avg_cdt_s;
  std::uint64_t server_requests = 0;
  std::uint64_t rsu_requests = 0;
  std::optional<double> final_chr;
  std::size_t satisfied = 0;
  std::size_t spawned = 0;
};

struct CsvTables {
  std::string cdt;
  std::string requests_server;
  std::string requests_rsu;
  std::optional<std::string> chr;  // only for caching runs
  std::string deliveries;
};

inline constexpr double kDefaultSampleIntervalS = 5.0;

CsvTables render_csv(const RunResult& result, SimTime sample_interval);
Summary summarize(const RunResult& result, SimTime sample_interval);

std::string variant_name(bool caching);

struct RunOutput {
  std::string scenario;
  std::uint64_t seed = 0;
  bool caching = true;
  std::filesystem::path dir;
  std::vector<std::filesystem::path> files;
  Summary summary;
};

/// Writes the CSV files (and trace.log when the run was traced) into `dir`.
RunOutput write_run(const RunResult& result, const std::filesystem::path& dir,
                    SimTime sample_interval);

std::string format_summary(const RunOutput& output);

using ConfigFactory = std::function<ScenarioConfig(bool caching, std::uint64_t seed)>;

struct SweepFailure {
  bool caching = true;
  std::uint64_t seed = 0;
  std::string message;
};

struct SweepReport {
  std::vector<RunOutput> runs;  // ordered by variant, then seed
  std::vector<SweepFailure> failures;
  std::string table;
  std::optional<double> cached_mean_cdt_s;
  std::optional<double> uncached_mean_cdt_s;
  std::optional<double> reduction;  // 1 - cached / uncached
};

/// One run per (variant, seed), executed concurrently. Each run writes to
/// out_dir/<scenario>_<variant>_seed<N>/; the comparison table goes to
/// out_dir/<scenario>_comparison.csv. Failed runs are reported without
/// stopping the others.
SweepReport sweep(const std::string& scenario, const ConfigFactory& factory,
                  const std::vector<std::uint64_t>& seeds, const std::vector<bool>& variants,
                  const std::filesystem::path& out_dir, SimTime sample_interval, bool trace);

}  // namespace vcache
