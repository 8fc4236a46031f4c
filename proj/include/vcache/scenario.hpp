#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vcache/mobility.hpp"
#include "vcache/protocol.hpp"
#include "vcache/radio.hpp"

namespace vcache {

enum class CoverageMode { Radius, Diameter };

struct RsuSpec {
  Point position;
  double coverage_m = 0.0;
  RsuRole role = RsuRole::CachingGateway;

  bool operator==(const RsuSpec&) const = default;
};

struct ArrivalSpec {
  ArrivalPattern pattern = ArrivalPattern::UrbanRandom;
  std::uint32_t count = 1;
  double window_s = 1.0;

  bool operator==(const ArrivalSpec&) const = default;
};

/// Everything needed to run one simulation.
struct ScenarioConfig {
  std::string name = "custom";
  std::vector<RoadSegment> roads;
  std::vector<RsuSpec> rsus;
  ArrivalSpec arrivals;
  bool caching_enabled = true;
  std::uint32_t catalog_size = 10;
  std::uint64_t payload_bits = 2000;
  double backhaul_latency_s = 0.3e-3;
  double server_processing_s = 10e-6;
  double rsu_processing_s = 10e-6;
  std::uint32_t rsu_cache_capacity = 64;
  std::uint32_t vehicle_cache_capacity = 0;  // 0 = unbounded
  double request_interval_s = 10.0;
  double tick_s = 0.1;
  double entry_speed_mps = 0.0;
  CoverageMode coverage_mode = CoverageMode::Radius;
  bool include_vehicle_chr = false;
  RadioParams radio;
  KinematicParams kinematics;
  double duration_s = 120.0;
  std::uint64_t seed = 1;
  // False when a builder was asked for a traffic load outside the set the
  // reference experiments use.
  bool reference_load = true;

  /// Coverage radius of RSU `i` after applying coverage_mode.
  double radius(std::size_t i) const {
    return coverage_mode == CoverageMode::Diameter ? rsus[i].coverage_m / 2.0 : rsus[i].coverage_m;
  }
  CoverageZone zone(std::size_t i) const {
    return {static_cast<std::uint32_t>(i), rsus[i].position, radius(i)};
  }

  bool operator==(const ScenarioConfig&) const = default;
};

/// Extra simulated time after the last scheduled arrival.
inline constexpr double kDrainMarginS = 120.0;

/// Two parallel 800 m roads 200 m apart under one RSU (radius 400 m) at
/// their midpoint. 20 vehicles arrive over 144 s or 40 over 230 s.
ScenarioConfig urban_single(std::uint32_t count, bool caching, std::uint64_t seed);

/// The same two roads, one RSU per road (radius 270 m) with disjoint zones,
/// each with its own backhaul. 40 vehicles over 230 s or 60 over 430 s.
ScenarioConfig urban_multi(std::uint32_t count, bool caching, std::uint64_t seed);

/// One 2000 m road, one RSU (radius 400 m) at the midpoint, 300 vehicles
/// entering one per second.
ScenarioConfig highway_single(bool caching, std::uint64_t seed);

/// One 2000 m road and a chain of three RSUs (radius 200 m, 200 m apart)
/// centred on the midpoint. The first RSU along the direction of travel is
/// the only one with a backhaul; the other two are relays. Requires caching.
ScenarioConfig highway_multi(bool caching, std::uint64_t seed);

/// Looks up a builder by name ("urban_single", "urban_multi",
/// "highway_single", "highway_multi"). `count` of 0 selects the builder's
/// default load. Throws ValidationError for an unknown name.
ScenarioConfig build_scenario(std::string_view name, std::uint32_t count, bool caching,
                              std::uint64_t seed);

const std::vector<std::string>& scenario_names();

/// Throws ValidationError listing every violated invariant.
void validate(const ScenarioConfig& config);

/// Next-hop RSU toward the nearest gateway for every relay, following
/// links where the relay lies inside the neighbour's zone. Gateways map to
/// nullopt. Throws ValidationError when a relay cannot reach a gateway.
std::vector<std::optional<RsuIndex>> relay_routes(const ScenarioConfig& config);

/// Parses the key-value config format (see README). Throws ParseError or
/// ValidationError.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Emits a config file that parse_config maps back to `config`.
std::string to_config_text(const ScenarioConfig& config);

}  // namespace vcache
