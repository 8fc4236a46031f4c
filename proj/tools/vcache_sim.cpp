// Command line front end: run one scenario or sweep seeds and caching
// variants, writing CSV series per run.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vcache/errors.hpp"
#include "vcache/output.hpp"
#include "vcache/scenario.hpp"
#include "vcache/simulation.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct Common {
  std::string scenario;
  std::string config_path;
  std::uint32_t count = 0;
  std::optional<bool> caching;
  std::string out = "out";
  double sample_interval = vcache::kDefaultSampleIntervalS;
  bool trace = false;
};

void add_common(CLI::App* cmd, Common& c) {
  auto* scenario = cmd->add_option("--scenario", c.scenario, "Builtin scenario name")
                       ->check(CLI::IsMember(vcache::scenario_names()));
  auto* config = cmd->add_option("--config", c.config_path, "Scenario config file")
                     ->check(CLI::ExistingFile);
  scenario->excludes(config);
  cmd->add_option("--count", c.count, "Vehicle count for the builtin scenario");
  cmd->add_flag_function(
      "--caching{true},!--no-caching{false}",
      [&c](std::int64_t v) { c.caching = v > 0; }, "Enable or disable caching");
  cmd->add_option("--out", c.out, "Output directory")->capture_default_str();
  cmd->add_option("--sample-interval", c.sample_interval, "CSV sample interval in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--trace", c.trace, "Write a protocol trace log");
}

vcache::ScenarioConfig resolve(const Common& c, bool caching, std::uint64_t seed,
                               bool seed_given) {
  if (!c.config_path.empty()) {
    vcache::ScenarioConfig config = vcache::load_config(c.config_path);
    if (c.caching && *c.caching != config.caching_enabled) {
      throw vcache::ValidationError("--caching flags cannot override a config file; edit it");
    }
    if (seed_given) config.seed = seed;
    return config;
  }
  return vcache::build_scenario(c.scenario, c.count, caching, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vehicular content caching simulator"};
  app.require_subcommand(1);

  Common run_opts;
  std::uint64_t seed = 1;
  auto* run = app.add_subcommand("run", "Run one simulation");
  add_common(run, run_opts);
  auto* seed_opt = run->add_option("--seed", seed, "Random seed")->capture_default_str();

  Common sweep_opts;
  std::vector<std::uint64_t> seeds;
  auto* sweep = app.add_subcommand("sweep", "Run several seeds with and without caching");
  add_common(sweep, sweep_opts);
  sweep->add_option("--seeds", seeds, "Seeds to run, e.g. --seeds 1 2 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  const Common& opts = run->parsed() ? run_opts : sweep_opts;
  if (opts.scenario.empty() && opts.config_path.empty()) {
    std::cerr << "error: one of --scenario or --config is required\n";
    return kUsageError;
  }
  const auto interval = vcache::SimTime::seconds(opts.sample_interval);

  vcache::ScenarioConfig probe;
  try {
    probe = resolve(opts, opts.caching.value_or(true), seed, seed_opt->count() > 0);
  } catch (const vcache::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const vcache::ValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (run->parsed()) {
      const vcache::RunResult result = vcache::run_simulation(probe, {opts.trace});
      const auto dir = std::filesystem::path(opts.out) /
                       (probe.name + "_" + vcache::variant_name(probe.caching_enabled) + "_seed" +
                        std::to_string(probe.seed));
      std::cout << vcache::format_summary(vcache::write_run(result, dir, interval));
      return 0;
    }

    std::vector<bool> variants;
    if (opts.caching) {
      variants = {*opts.caching};
    } else if (!opts.config_path.empty() || opts.scenario == "highway_multi") {
      variants = {probe.caching_enabled};
    } else {
      variants = {false, true};
    }
    const vcache::ConfigFactory factory = [&](bool caching, std::uint64_t s) {
      return resolve(opts, caching, s, true);
    };
    const auto report =
        vcache::sweep(probe.name, factory, seeds, variants, opts.out, interval, opts.trace);
    for (const auto& r : report.runs) std::cout << vcache::format_summary(r);
    std::cout << '\n' << report.table;
    for (const auto& f : report.failures) {
      std::cerr << "run failed: " << vcache::variant_name(f.caching) << " seed " << f.seed << ": "
                << f.message << '\n';
    }
    return report.failures.empty() ? 0 : kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
}
