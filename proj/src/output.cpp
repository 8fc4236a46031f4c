#include "vcache/output.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "vcache/errors.hpp"

namespace vcache {

namespace {

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string scope_label(const CacheOwner& owner) {
  return (owner.kind == CacheOwnerKind::Rsu ? "rsu/" : "vehicle/") + std::to_string(owner.index);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

std::string variant_name(bool caching) { return caching ? "cached" : "nocache"; }

CsvTables render_csv(const RunResult& result, SimTime sample_interval) {
  const MetricsLedger& ledger = result.ledger;
  const SimTime end = result.end;
  CsvTables t;

  std::ostringstream cdt;
  cdt << "time_s,avg_cdt_s,deliveries\n";
  for (const auto& p : ledger.avg_cdt_series(sample_interval, end)) {
    cdt << format_seconds(p.time) << ',' << fixed9(p.avg_cdt_s) << ',' << p.deliveries << '\n';
  }
  t.cdt = cdt.str();

  std::ostringstream server;
  server << "time_s,cumulative\n";
  for (const auto& p : ledger.request_count_series(ServerTarget{}, sample_interval, end)) {
    server << format_seconds(p.time) << ',' << p.cumulative << '\n';
  }
  t.requests_server = server.str();

  std::vector<std::vector<CountPoint>> per_rsu;
  for (std::uint32_t r = 0; r < ledger.rsu_count(); ++r) {
    per_rsu.push_back(ledger.request_count_series(RsuTarget{r}, sample_interval, end));
  }
  std::ostringstream rsu;
  rsu << "time_s,rsu_id,cumulative\n";
  const auto times = sample_times(sample_interval, end);
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (std::uint32_t r = 0; r < per_rsu.size(); ++r) {
      rsu << format_seconds(times[i]) << ',' << r << ',' << per_rsu[r][i].cumulative << '\n';
    }
  }
  t.requests_rsu = rsu.str();

  if (result.config.caching_enabled) {
    struct Scoped {
      std::string label;
      std::vector<ChrPoint> points;
      std::size_t next = 0;
    };
    std::vector<Scoped> scopes;
    scopes.push_back({"aggregate", ledger.chr_series(AggregateScope{}, sample_interval, end)});
    for (std::uint32_t r = 0; r < ledger.rsu_count(); ++r) {
      const CacheOwner owner{CacheOwnerKind::Rsu, r};
      scopes.push_back({scope_label(owner), ledger.chr_series(owner, sample_interval, end)});
    }
    std::ostringstream chr;
    chr << "time_s,scope,hits,misses,chr\n";
    for (SimTime time : times) {
      for (auto& s : scopes) {
        if (s.next < s.points.size() && s.points[s.next].time == time) {
          const ChrPoint& p = s.points[s.next++];
          chr << format_seconds(p.time) << ',' << s.label << ',' << p.hits << ',' << p.misses << ','
              << fixed9(p.ratio) << '\n';
        }
      }
    }
    t.chr = chr.str();
  }

  std::ostringstream deliveries;
  deliveries << "vehicle,name,first_request_s,delivered_s,cdt_s,source\n";
  for (const auto& d : ledger.deliveries()) {
    deliveries << d.vehicle << ',' << d.name.str() << ','
               << (d.first_request_at ? format_seconds(*d.first_request_at) : std::string()) << ','
               << format_seconds(d.delivered_at) << ',' << format_seconds(d.cdt) << ','
               << to_string(d.source) << '\n';
  }
  t.deliveries = deliveries.str();
  return t;
}

Summary summarize(const RunResult& result, SimTime sample_interval) {
  const MetricsLedger& ledger = result.ledger;
  const SimTime end = result.end;
  Summary s;
  if (const auto cdt = ledger.avg_cdt_series(sample_interval, end); !cdt.empty()) {
    s.final_avg_cdt_s = cdt.back().avg_cdt_s;
  }
  s.server_requests =
      ledger.request_count_series(ServerTarget{}, sample_interval, end).back().cumulative;
  s.rsu_requests =
      ledger.request_count_series(AllRsusTarget{}, sample_interval, end).back().cumulative;
  if (result.config.caching_enabled) {
    if (const auto chr = ledger.chr_series(AggregateScope{}, sample_interval, end); !chr.empty()) {
      s.final_chr = chr.back().ratio;
    }
  }
  s.satisfied = result.satisfied;
  s.spawned = result.spawned;
  return s;
}

RunOutput write_run(const RunResult& result, const std::filesystem::path& dir,
                    SimTime sample_interval) {
  std::filesystem::create_directories(dir);
  const CsvTables tables = render_csv(result, sample_interval);
  RunOutput out;
  out.scenario = result.config.name;
  out.seed = result.config.seed;
  out.caching = result.config.caching_enabled;
  out.dir = dir;

  auto emit = [&](const char* file, const std::string& text) {
    const auto path = dir / file;
    write_file(path, text);
    out.files.push_back(path);
  };
  emit("cdt.csv", tables.cdt);
  emit("requests_server.csv", tables.requests_server);
  emit("requests_rsu.csv", tables.requests_rsu);
  if (tables.chr) emit("chr.csv", *tables.chr);
  emit("deliveries.csv", tables.deliveries);
  if (!result.trace.empty()) emit("trace.log", result.trace);

  out.summary = summarize(result, sample_interval);
  return out;
}

std::string format_summary(const RunOutput& o) {
  std::ostringstream s;
  s << "scenario " << o.scenario << " seed " << o.seed << " (" << variant_name(o.caching) << ")\n";
  s << "  final avg CDT s:   "
    << (o.summary.final_avg_cdt_s ? fixed9(*o.summary.final_avg_cdt_s) : "undefined") << '\n';
  s << "  server requests:   " << o.summary.server_requests << '\n';
  s << "  RSU requests:      " << o.summary.rsu_requests << '\n';
  s << "  final CHR:         " << (o.summary.final_chr ? fixed9(*o.summary.final_chr) : "undefined")
    << '\n';
  s << "  satisfied/spawned: " << o.summary.satisfied << '/' << o.summary.spawned << '\n';
  s << "  output:            " << o.dir.string() << '\n';
  return s.str();
}

SweepReport sweep(const std::string& scenario, const ConfigFactory& factory,
                  const std::vector<std::uint64_t>& seeds, const std::vector<bool>& variants,
                  const std::filesystem::path& out_dir, SimTime sample_interval, bool trace) {
  if (seeds.empty()) throw ValidationError("sweep needs at least one seed");

  struct Job {
    bool caching;
    std::uint64_t seed;
    std::future<RunOutput> result;
  };
  std::vector<Job> jobs;
  for (bool caching : variants) {
    for (std::uint64_t seed : seeds) {
      const auto dir = out_dir / (scenario + "_" + variant_name(caching) + "_seed" +
                                  std::to_string(seed));
      jobs.push_back({caching, seed, std::async(std::launch::async, [=, &factory] {
                        const ScenarioConfig config = factory(caching, seed);
                        return write_run(run_simulation(config, RunOptions{trace}), dir,
                                         sample_interval);
                      })});
    }
  }

  SweepReport report;
  for (auto& job : jobs) {
    try {
      report.runs.push_back(job.result.get());
    } catch (const std::exception& e) {
      report.failures.push_back({job.caching, job.seed, e.what()});
    }
  }

  std::ostringstream table;
  table << "variant,runs,mean_final_avg_cdt_s,mean_server_requests,mean_rsu_requests\n";
  for (bool caching : variants) {
    double cdt_sum = 0.0;
    std::size_t cdt_n = 0;
    double server = 0.0;
    double rsu = 0.0;
    std::size_t n = 0;
    for (const auto& run : report.runs) {
      if (run.caching != caching) continue;
      ++n;
      server += static_cast<double>(run.summary.server_requests);
      rsu += static_cast<double>(run.summary.rsu_requests);
      if (run.summary.final_avg_cdt_s) {
        cdt_sum += *run.summary.final_avg_cdt_s;
        ++cdt_n;
      }
    }
    std::optional<double> mean;
    if (cdt_n > 0) mean = cdt_sum / static_cast<double>(cdt_n);
    (caching ? report.cached_mean_cdt_s : report.uncached_mean_cdt_s) = mean;
    table << variant_name(caching) << ',' << n << ',' << (mean ? fixed9(*mean) : "") << ','
          << (n ? fixed9(server / static_cast<double>(n)) : "") << ','
          << (n ? fixed9(rsu / static_cast<double>(n)) : "") << '\n';
  }
  if (report.cached_mean_cdt_s && report.uncached_mean_cdt_s && *report.uncached_mean_cdt_s > 0) {
    report.reduction = 1.0 - *report.cached_mean_cdt_s / *report.uncached_mean_cdt_s;
    table << "reduction,," << fixed9(*report.reduction) << ",,\n";
  }
  report.table = table.str();

  std::filesystem::create_directories(out_dir);
  write_file(out_dir / (scenario + "_comparison.csv"), report.table);
  return report;
}

}  // namespace vcache
