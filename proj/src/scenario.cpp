#include "vcache/scenario.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "vcache/errors.hpp"

namespace vcache {

namespace {

std::vector<RoadSegment> urban_roads() {
  // Second road runs the opposite way, 200 m north of the first.
  return {
      RoadSegment{0, 800.0, Point{0.0, 0.0}, Point{1.0, 0.0}},
      RoadSegment{1, 800.0, Point{800.0, 200.0}, Point{-1.0, 0.0}},
  };
}

double urban_window(std::uint32_t count, bool& reference) {
  switch (count) {
    case 20:
      return 144.0;
    case 40:
      return 230.0;
    case 60:
      return 430.0;
    default:
      reference = false;
      return 5.75 * count;  // 40 vehicles / 230 s arrival rate
  }
}

ScenarioConfig urban_base(std::uint32_t count, bool caching, std::uint64_t seed) {
  ScenarioConfig c;
  c.roads = urban_roads();
  c.arrivals.pattern = ArrivalPattern::UrbanRandom;
  c.arrivals.count = count;
  c.arrivals.window_s = urban_window(count, c.reference_load);
  c.caching_enabled = caching;
  c.duration_s = c.arrivals.window_s + kDrainMarginS;
  c.seed = seed;
  return c;
}

ScenarioConfig highway_base(bool caching, std::uint64_t seed) {
  ScenarioConfig c;
  c.roads = {RoadSegment{0, 2000.0, Point{0.0, 0.0}, Point{1.0, 0.0}}};
  c.arrivals.pattern = ArrivalPattern::HighwayUniform;
  c.arrivals.count = 300;
  c.arrivals.window_s = 300.0;
  c.caching_enabled = caching;
  // One vehicle per second only fits the minimum gap when vehicles join
  // the platoon at cruising speed.
  c.entry_speed_mps = c.kinematics.max_speed;
  c.duration_s = c.arrivals.window_s + kDrainMarginS;
  c.seed = seed;
  return c;
}

RsuRole gateway_role(bool caching) {
  return caching ? RsuRole::CachingGateway : RsuRole::PlainGateway;
}

}  // namespace

ScenarioConfig urban_single(std::uint32_t count, bool caching, std::uint64_t seed) {
  ScenarioConfig c = urban_base(count, caching, seed);
  c.name = "urban_single";
  if (count != 20 && count != 40) c.reference_load = false;
  c.rsus = {RsuSpec{Point{400.0, 100.0}, 400.0, gateway_role(caching)}};
  return c;
}

ScenarioConfig urban_multi(std::uint32_t count, bool caching, std::uint64_t seed) {
  ScenarioConfig c = urban_base(count, caching, seed);
  c.name = "urban_multi";
  if (count != 40 && count != 60) c.reference_load = false;
  // Each RSU sits 100 m outside its road near the road's entry, 300 m from
  // the other road; centres are 566 m apart so the 270 m zones are disjoint.
  c.rsus = {
      RsuSpec{Point{200.0, -100.0}, 270.0, gateway_role(caching)},
      RsuSpec{Point{600.0, 300.0}, 270.0, gateway_role(caching)},
  };
  return c;
}

ScenarioConfig highway_single(bool caching, std::uint64_t seed) {
  ScenarioConfig c = highway_base(caching, seed);
  c.name = "highway_single";
  c.rsus = {RsuSpec{Point{1000.0, 0.0}, 400.0, gateway_role(caching)}};
  return c;
}

ScenarioConfig highway_multi(bool caching, std::uint64_t seed) {
  if (!caching) throw ValidationError("highway_multi relays require caching");
  ScenarioConfig c = highway_base(true, seed);
  c.name = "highway_multi";
  c.rsus = {
      RsuSpec{Point{800.0, 0.0}, 200.0, RsuRole::CachingGateway},
      RsuSpec{Point{1000.0, 0.0}, 200.0, RsuRole::Relay},
      RsuSpec{Point{1200.0, 0.0}, 200.0, RsuRole::Relay},
  };
  return c;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"urban_single", "urban_multi", "highway_single",
                                                 "highway_multi"};
  return names;
}

ScenarioConfig build_scenario(std::string_view name, std::uint32_t count, bool caching,
                              std::uint64_t seed) {
  if (name == "urban_single") return urban_single(count == 0 ? 40 : count, caching, seed);
  if (name == "urban_multi") return urban_multi(count == 0 ? 40 : count, caching, seed);
  if (name == "highway_single" || name == "highway_multi") {
    ScenarioConfig c = name == "highway_single" ? highway_single(caching, seed)
                                                : highway_multi(caching, seed);
    if (count != 0 && count != c.arrivals.count) {
      c.arrivals.count = count;
      c.arrivals.window_s = count;
      c.duration_s = count + kDrainMarginS;
      c.reference_load = false;
    }
    return c;
  }
  throw ValidationError("unknown scenario '" + std::string(name) + "'");
}

std::vector<std::optional<RsuIndex>> relay_routes(const ScenarioConfig& config) {
  const std::size_t n = config.rsus.size();
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(n, kUnreached);
  std::vector<std::optional<RsuIndex>> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (config.rsus[i].role != RsuRole::Relay) hops[i] = 0;
  }
  for (std::size_t level = 0; level < n; ++level) {
    for (std::size_t r = 0; r < n; ++r) {
      if (hops[r] != kUnreached) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (hops[k] != level) continue;
        if (in_range(config.zone(k), config.rsus[r].position)) {
          hops[r] = level + 1;
          next[r] = static_cast<RsuIndex>(k);
          break;
        }
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (hops[r] == kUnreached) {
      throw ValidationError("relay RSU " + std::to_string(r) +
                            " is not inside the zone of any RSU leading to a gateway");
    }
  }
  return next;
}

void validate(const ScenarioConfig& c) {
  std::vector<std::string> problems;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  check(!c.roads.empty(), "at least one road is required");
  std::set<RoadId> road_ids;
  for (const auto& road : c.roads) {
    check(road.length > 0.0, "road " + std::to_string(road.id) + " length must be positive");
    check(road_ids.insert(road.id).second, "duplicate road id " + std::to_string(road.id));
    check(std::abs(std::hypot(road.heading.x, road.heading.y) - 1.0) < 1e-9,
          "road " + std::to_string(road.id) + " heading must be a unit vector");
  }

  check(!c.rsus.empty(), "at least one RSU is required");
  bool has_gateway = false;
  for (std::size_t i = 0; i < c.rsus.size(); ++i) {
    const auto& rsu = c.rsus[i];
    check(rsu.coverage_m > 0.0, "RSU " + std::to_string(i) + " coverage must be positive");
    if (rsu.role != RsuRole::Relay) has_gateway = true;
    if (!c.caching_enabled) {
      check(rsu.role == RsuRole::PlainGateway,
            "RSU " + std::to_string(i) + " caches but caching is disabled");
    }
  }
  check(has_gateway, "at least one RSU needs a backhaul to the edge server");

  check(c.arrivals.count >= 1, "arrival count must be at least 1");
  const double arrival_span = c.arrivals.pattern == ArrivalPattern::HighwayUniform
                                  ? static_cast<double>(c.arrivals.count)
                                  : c.arrivals.window_s;
  if (c.arrivals.pattern == ArrivalPattern::UrbanRandom) {
    check(c.arrivals.window_s > 0.0, "arrival window must be positive");
  }
  check(c.duration_s >= arrival_span, "duration must cover the arrival window");

  check(c.catalog_size >= 1, "catalog needs at least one item");
  check(c.payload_bits > 0, "payload_bits must be positive");
  check(c.backhaul_latency_s >= 0.0, "backhaul latency must be non-negative");
  check(c.server_processing_s >= 0.0, "server processing delay must be non-negative");
  check(c.rsu_processing_s >= 0.0, "RSU processing delay must be non-negative");
  check(c.rsu_cache_capacity >= 1, "RSU cache capacity must be at least 1");
  check(c.request_interval_s > 0.0, "request interval must be positive");
  check(c.tick_s > 0.0, "kinematics tick must be positive");
  check(c.entry_speed_mps >= 0.0 && c.entry_speed_mps <= c.kinematics.max_speed,
        "entry speed must lie in [0, max_speed]");

  try {
    c.kinematics.validate();
  } catch (const ValidationError& e) {
    problems.push_back(e.what());
  }
  try {
    c.radio.validate();
  } catch (const ValidationError& e) {
    problems.push_back(e.what());
  }
  if (problems.empty()) {
    try {
      relay_routes(c);
    } catch (const ValidationError& e) {
      problems.push_back(e.what());
    }
  }

  if (!problems.empty()) {
    std::string message = "invalid scenario '" + c.name + "':";
    for (const auto& p : problems) message += "\n  - " + p;
    throw ValidationError(message);
  }
}

// ---------------------------------------------------------------------------
// Config file format

namespace {

struct Entry {
  int line;
  std::string section;
  std::size_t instance;  // index of the section occurrence
  std::string key;
  std::string value;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const Entry& e) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(e.value.c_str(), &end);
  if (e.value.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError(e.line, e.key, "field '" + e.key + "': expected a number, got '" + e.value + "'");
  }
  return v;
}

std::uint64_t to_uint(const Entry& e) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(e.value.c_str(), &end, 10);
  if (e.value.empty() || e.value.front() == '-' || *end != '\0' || errno == ERANGE) {
    throw ParseError(e.line, e.key,
                     "field '" + e.key + "': expected a non-negative integer, got '" + e.value + "'");
  }
  return v;
}

std::uint32_t to_u32(const Entry& e) {
  const std::uint64_t v = to_uint(e);
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(e.line, e.key, "field '" + e.key + "': value out of range");
  }
  return static_cast<std::uint32_t>(v);
}

bool to_bool(const Entry& e) {
  const std::string& v = e.value;
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw ParseError(e.line, e.key, "field '" + e.key + "': expected a boolean, got '" + v + "'");
}

RsuRole to_role(const Entry& e) {
  if (e.value == "caching-gateway") return RsuRole::CachingGateway;
  if (e.value == "plain-gateway") return RsuRole::PlainGateway;
  if (e.value == "relay") return RsuRole::Relay;
  throw ParseError(e.line, e.key, "field 'role': unknown RSU role '" + e.value + "'");
}

ArrivalPattern to_pattern(const Entry& e) {
  if (e.value == "urban-random") return ArrivalPattern::UrbanRandom;
  if (e.value == "highway-uniform") return ArrivalPattern::HighwayUniform;
  throw ParseError(e.line, e.key, "field 'pattern': unknown arrival pattern '" + e.value + "'");
}

CoverageMode to_coverage_mode(const Entry& e) {
  if (e.value == "radius") return CoverageMode::Radius;
  if (e.value == "diameter") return CoverageMode::Diameter;
  throw ParseError(e.line, e.key, "field 'coverage_mode': expected radius or diameter");
}

std::vector<Entry> tokenize(std::string_view text) {
  static const std::set<std::string> kSections = {"", "radio", "kinematics", "arrivals", "road",
                                                  "rsu"};
  std::vector<Entry> entries;
  std::string section;
  std::map<std::string, std::size_t> occurrences;
  std::size_t instance = 0;
  std::set<std::pair<std::string, std::size_t>> open_keys;  // (section#instance/key)
  std::set<std::string> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "", "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!kSections.contains(section) || section.empty()) {
        throw ParseError(line_no, section, "unknown section '" + section + "'");
      }
      instance = occurrences[section]++;
      if (instance > 0 && section != "road" && section != "rsu") {
        throw ParseError(line_no, section, "section '" + section + "' may appear only once");
      }
      seen.clear();
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "", "expected 'key = value', got '" + line + "'");
    }
    Entry e{line_no, section, instance, trim(std::string_view(line).substr(0, eq)),
            trim(std::string_view(line).substr(eq + 1))};
    if (e.key.empty()) throw ParseError(line_no, "", "missing key before '='");
    if (!seen.insert(e.key).second) {
      throw ParseError(line_no, e.key, "field '" + e.key + "' set twice");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

using Setter = std::function<void(ScenarioConfig&, const Entry&)>;

const std::map<std::string, Setter>& top_level_setters() {
  static const std::map<std::string, Setter> setters = {
      {"name", [](ScenarioConfig& c, const Entry& e) { c.name = e.value; }},
      {"duration_s", [](ScenarioConfig& c, const Entry& e) { c.duration_s = to_double(e); }},
      {"catalog_size", [](ScenarioConfig& c, const Entry& e) { c.catalog_size = to_u32(e); }},
      {"payload_bits", [](ScenarioConfig& c, const Entry& e) { c.payload_bits = to_uint(e); }},
      {"backhaul_latency_s",
       [](ScenarioConfig& c, const Entry& e) { c.backhaul_latency_s = to_double(e); }},
      {"server_processing_s",
       [](ScenarioConfig& c, const Entry& e) { c.server_processing_s = to_double(e); }},
      {"rsu_processing_s",
       [](ScenarioConfig& c, const Entry& e) { c.rsu_processing_s = to_double(e); }},
      {"rsu_cache_capacity",
       [](ScenarioConfig& c, const Entry& e) { c.rsu_cache_capacity = to_u32(e); }},
      {"vehicle_cache_capacity",
       [](ScenarioConfig& c, const Entry& e) { c.vehicle_cache_capacity = to_u32(e); }},
      {"request_interval_s",
       [](ScenarioConfig& c, const Entry& e) { c.request_interval_s = to_double(e); }},
      {"tick_s", [](ScenarioConfig& c, const Entry& e) { c.tick_s = to_double(e); }},
      {"entry_speed_mps",
       [](ScenarioConfig& c, const Entry& e) { c.entry_speed_mps = to_double(e); }},
      {"coverage_mode",
       [](ScenarioConfig& c, const Entry& e) { c.coverage_mode = to_coverage_mode(e); }},
      {"include_vehicle_chr",
       [](ScenarioConfig& c, const Entry& e) { c.include_vehicle_chr = to_bool(e); }},
      {"reference_load",
       [](ScenarioConfig& c, const Entry& e) { c.reference_load = to_bool(e); }},
  };
  return setters;
}

const std::map<std::string, Setter>& section_setters(const std::string& section) {
  static const std::map<std::string, std::map<std::string, Setter>> setters = {
      {"radio",
       {
           {"header_bits", [](ScenarioConfig& c, const Entry& e) { c.radio.header_bits = to_uint(e); }},
           {"bitrate_bps", [](ScenarioConfig& c, const Entry& e) { c.radio.bitrate_bps = to_double(e); }},
           {"tx_power_mw", [](ScenarioConfig& c, const Entry& e) { c.radio.tx_power_mw = to_double(e); }},
           {"noise_floor_dbm",
            [](ScenarioConfig& c, const Entry& e) { c.radio.noise_floor_dbm = to_double(e); }},
           {"min_power_dbm",
            [](ScenarioConfig& c, const Entry& e) { c.radio.min_power_dbm = to_double(e); }},
           {"antenna_height_m",
            [](ScenarioConfig& c, const Entry& e) { c.radio.antenna_height_m = to_double(e); }},
           {"center_freq_ghz",
            [](ScenarioConfig& c, const Entry& e) { c.radio.center_freq_ghz = to_double(e); }},
           {"beacon_interval_s",
            [](ScenarioConfig& c, const Entry& e) { c.radio.beacon_interval_s = to_double(e); }},
           {"beacon_payload_bits",
            [](ScenarioConfig& c, const Entry& e) { c.radio.beacon_payload_bits = to_uint(e); }},
       }},
      {"kinematics",
       {
           {"accel", [](ScenarioConfig& c, const Entry& e) { c.kinematics.accel = to_double(e); }},
           {"decel", [](ScenarioConfig& c, const Entry& e) { c.kinematics.decel = to_double(e); }},
           {"max_speed", [](ScenarioConfig& c, const Entry& e) { c.kinematics.max_speed = to_double(e); }},
           {"min_gap", [](ScenarioConfig& c, const Entry& e) { c.kinematics.min_gap = to_double(e); }},
       }},
      {"arrivals",
       {
           {"pattern", [](ScenarioConfig& c, const Entry& e) { c.arrivals.pattern = to_pattern(e); }},
           {"count", [](ScenarioConfig& c, const Entry& e) { c.arrivals.count = to_u32(e); }},
           {"window_s", [](ScenarioConfig& c, const Entry& e) { c.arrivals.window_s = to_double(e); }},
       }},
      {"road",
       {
           {"id", [](ScenarioConfig& c, const Entry& e) { c.roads.back().id = to_u32(e); }},
           {"length_m", [](ScenarioConfig& c, const Entry& e) { c.roads.back().length = to_double(e); }},
           {"origin_x", [](ScenarioConfig& c, const Entry& e) { c.roads.back().origin.x = to_double(e); }},
           {"origin_y", [](ScenarioConfig& c, const Entry& e) { c.roads.back().origin.y = to_double(e); }},
           {"heading_x",
            [](ScenarioConfig& c, const Entry& e) { c.roads.back().heading.x = to_double(e); }},
           {"heading_y",
            [](ScenarioConfig& c, const Entry& e) { c.roads.back().heading.y = to_double(e); }},
       }},
      {"rsu",
       {
           {"x", [](ScenarioConfig& c, const Entry& e) { c.rsus.back().position.x = to_double(e); }},
           {"y", [](ScenarioConfig& c, const Entry& e) { c.rsus.back().position.y = to_double(e); }},
           {"coverage_m",
            [](ScenarioConfig& c, const Entry& e) { c.rsus.back().coverage_m = to_double(e); }},
           {"role", [](ScenarioConfig& c, const Entry& e) { c.rsus.back().role = to_role(e); }},
       }},
  };
  return setters.at(section);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* pattern_name(ArrivalPattern p) {
  return p == ArrivalPattern::HighwayUniform ? "highway-uniform" : "urban-random";
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  const std::vector<Entry> entries = tokenize(text);

  // Builder selection keys are read first so that every other key can
  // override the builder's output regardless of its position in the file.
  const Entry* scenario = nullptr;
  std::optional<std::uint32_t> count;
  std::optional<bool> caching;
  std::optional<std::uint64_t> seed;
  for (const auto& e : entries) {
    if (!e.section.empty()) continue;
    if (e.key == "scenario") scenario = &e;
    if (e.key == "count") count = to_u32(e);
    if (e.key == "caching") caching = to_bool(e);
    if (e.key == "seed") seed = to_uint(e);
  }

  ScenarioConfig config;
  if (scenario != nullptr) {
    try {
      config = build_scenario(scenario->value, count.value_or(0), caching.value_or(true),
                              seed.value_or(1));
    } catch (const ValidationError& err) {
      throw ParseError(scenario->line, "scenario", err.what());
    }
  } else {
    if (count) config.arrivals.count = *count;
    if (caching) config.caching_enabled = *caching;
    if (seed) config.seed = *seed;
  }

  std::size_t roads_seen = 0;
  std::size_t rsus_seen = 0;
  for (const auto& e : entries) {
    if (e.section.empty()) {
      if (e.key == "scenario" || e.key == "count" || e.key == "caching" || e.key == "seed") continue;
      const auto& setters = top_level_setters();
      auto it = setters.find(e.key);
      if (it == setters.end()) throw ParseError(e.line, e.key, "unknown field '" + e.key + "'");
      it->second(config, e);
      continue;
    }
    if (e.section == "road" && e.instance >= roads_seen) {
      if (roads_seen == 0) config.roads.clear();
      for (; roads_seen <= e.instance; ++roads_seen) {
        config.roads.push_back(RoadSegment{static_cast<RoadId>(roads_seen), 0.0, {}, {1.0, 0.0}});
      }
    }
    if (e.section == "rsu" && e.instance >= rsus_seen) {
      if (rsus_seen == 0) config.rsus.clear();
      for (; rsus_seen <= e.instance; ++rsus_seen) config.rsus.push_back(RsuSpec{});
    }
    const auto& setters = section_setters(e.section);
    auto it = setters.find(e.key);
    if (it == setters.end()) {
      throw ParseError(e.line, e.key,
                       "unknown field '" + e.key + "' in section [" + e.section + "]");
    }
    it->second(config, e);
  }

  validate(config);
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string to_config_text(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "name = " << c.name << "\n"
      << "seed = " << c.seed << "\n"
      << "caching = " << (c.caching_enabled ? "true" : "false") << "\n"
      << "duration_s = " << fmt_double(c.duration_s) << "\n"
      << "catalog_size = " << c.catalog_size << "\n"
      << "payload_bits = " << c.payload_bits << "\n"
      << "backhaul_latency_s = " << fmt_double(c.backhaul_latency_s) << "\n"
      << "server_processing_s = " << fmt_double(c.server_processing_s) << "\n"
      << "rsu_processing_s = " << fmt_double(c.rsu_processing_s) << "\n"
      << "rsu_cache_capacity = " << c.rsu_cache_capacity << "\n"
      << "vehicle_cache_capacity = " << c.vehicle_cache_capacity << "\n"
      << "request_interval_s = " << fmt_double(c.request_interval_s) << "\n"
      << "tick_s = " << fmt_double(c.tick_s) << "\n"
      << "entry_speed_mps = " << fmt_double(c.entry_speed_mps) << "\n"
      << "coverage_mode = " << (c.coverage_mode == CoverageMode::Diameter ? "diameter" : "radius")
      << "\n"
      << "include_vehicle_chr = " << (c.include_vehicle_chr ? "true" : "false") << "\n"
      << "reference_load = " << (c.reference_load ? "true" : "false") << "\n";

  out << "\n[radio]\n"
      << "header_bits = " << c.radio.header_bits << "\n"
      << "bitrate_bps = " << fmt_double(c.radio.bitrate_bps) << "\n"
      << "tx_power_mw = " << fmt_double(c.radio.tx_power_mw) << "\n"
      << "noise_floor_dbm = " << fmt_double(c.radio.noise_floor_dbm) << "\n"
      << "min_power_dbm = " << fmt_double(c.radio.min_power_dbm) << "\n"
      << "antenna_height_m = " << fmt_double(c.radio.antenna_height_m) << "\n"
      << "center_freq_ghz = " << fmt_double(c.radio.center_freq_ghz) << "\n"
      << "beacon_interval_s = " << fmt_double(c.radio.beacon_interval_s) << "\n"
      << "beacon_payload_bits = " << c.radio.beacon_payload_bits << "\n";

  out << "\n[kinematics]\n"
      << "accel = " << fmt_double(c.kinematics.accel) << "\n"
      << "decel = " << fmt_double(c.kinematics.decel) << "\n"
      << "max_speed = " << fmt_double(c.kinematics.max_speed) << "\n"
      << "min_gap = " << fmt_double(c.kinematics.min_gap) << "\n";

  out << "\n[arrivals]\n"
      << "pattern = " << pattern_name(c.arrivals.pattern) << "\n"
      << "count = " << c.arrivals.count << "\n"
      << "window_s = " << fmt_double(c.arrivals.window_s) << "\n";

  for (const auto& road : c.roads) {
    out << "\n[road]\n"
        << "id = " << road.id << "\n"
        << "length_m = " << fmt_double(road.length) << "\n"
        << "origin_x = " << fmt_double(road.origin.x) << "\n"
        << "origin_y = " << fmt_double(road.origin.y) << "\n"
        << "heading_x = " << fmt_double(road.heading.x) << "\n"
        << "heading_y = " << fmt_double(road.heading.y) << "\n";
  }
  for (const auto& rsu : c.rsus) {
    out << "\n[rsu]\n"
        << "x = " << fmt_double(rsu.position.x) << "\n"
        << "y = " << fmt_double(rsu.position.y) << "\n"
        << "coverage_m = " << fmt_double(rsu.coverage_m) << "\n"
        << "role = " << to_string(rsu.role) << "\n";
  }
  return out.str();
}

}  // namespace vcache
