#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcache/metrics.hpp"
#include "vcache/protocol.hpp"
#include "vcache/scenario.hpp"

namespace vcache {

struct RunOptions {
  bool trace = false;
};

struct VehicleOutcome {
  VehicleId id = 0;
  ContentName wanted = ContentName({"unset"});
  RoadId road = 0;
  SimTime arrival;
  std::optional<SimTime> entered_at;
  std::optional<SimTime> first_request_at;
  std::optional<SimTime> delivered_at;
  std::optional<DeliverySource> source;
  VehicleStatus status = VehicleStatus::Idle;
  std::uint32_t requests_sent = 0;
  bool ever_covered = false;  // inside some zone at one of its check instants
};

struct RsuReport {
  RsuIndex index = 0;
  RsuRole role = RsuRole::CachingGateway;
  std::uint64_t requests_received = 0;
  std::uint64_t forwarded_received = 0;
  std::uint64_t rebroadcasts = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::size_t cache_size = 0;
  std::size_t pending_at_end = 0;
};

struct ChannelReport {
  std::uint64_t frames = 0;
  SimTime total_wait;
  SimTime max_wait;
};

struct MobilityReport {
  double min_gap_m = 0.0;  // smallest bumper gap seen between neighbours
  double max_speed_mps = 0.0;
  bool order_preserved = true;
};

struct RunResult {
  ScenarioConfig config;
  MetricsLedger ledger{0};
  std::vector<VehicleOutcome> vehicles;
  std::vector<RsuReport> rsus;
  std::vector<ChannelReport> channels;
  MobilityReport mobility;
  std::string trace;
  std::uint64_t server_requests = 0;
  std::uint64_t vehicle_requests_sent = 0;
  std::size_t spawned = 0;
  std::size_t satisfied = 0;
  SimTime end;
};

/// Runs one scenario to completion. Throws ValidationError for an invalid
/// config; protocol errors (OrphanResponse, UnknownContent) propagate.
RunResult run_simulation(const ScenarioConfig& config, const RunOptions& options = {});

}  // namespace vcache
