#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vcache/content.hpp"
#include "vcache/mobility.hpp"
#include "vcache/sim_time.hpp"

namespace vcache {

enum class DeliverySource { RsuHit, ServerFetch, LocalPrecache, RelayHit };

const char* to_string(DeliverySource source);

struct DeliveryRecord {
  VehicleId vehicle = 0;
  ContentName name = ContentName({"unset"});
  std::optional<SimTime> first_request_at;  // empty when no request was ever sent
  SimTime delivered_at;
  SimTime cdt;
  DeliverySource source = DeliverySource::RsuHit;
};

struct CdtPoint {
  SimTime time;
  double avg_cdt_s = 0.0;
  std::uint64_t deliveries = 0;
};

struct CountPoint {
  SimTime time;
  std::uint64_t cumulative = 0;
};

struct ChrPoint {
  SimTime time;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  double ratio = 0.0;
};

struct ServerTarget {};
struct RsuTarget {
  std::uint32_t rsu = 0;
};
struct AllRsusTarget {};
using RequestTarget = std::variant<ServerTarget, RsuTarget, AllRsusTarget>;

enum class CacheOwnerKind { Rsu, Vehicle };

struct CacheOwner {
  CacheOwnerKind kind = CacheOwnerKind::Rsu;
  std::uint32_t index = 0;

  bool operator==(const CacheOwner&) const = default;
};

/// Sums RSU caches (and vehicle caches when the ledger is configured to
/// include them) before dividing.
struct AggregateScope {};
using ChrScope = std::variant<AggregateScope, CacheOwner>;

/// Sample instants 0, interval, 2*interval, ... up to `end`, with `end`
/// appended when it is not itself a multiple of the interval.
std::vector<SimTime> sample_times(SimTime interval, SimTime end);

/// Per-run accumulator for delivery times, request counts and cache
/// lookups. Every record carries its simulation timestamp; series are
/// reconstructed from those records on demand. Records must arrive in
/// non-decreasing time order.
class MetricsLedger {
 public:
  explicit MetricsLedger(std::size_t rsu_count, bool include_vehicle_caches = false);

  /// Throws NegativeCdt for a negative cdt, a delivery before the first
  /// request, or a cdt that disagrees with the timestamps.
  void record_delivery(DeliveryRecord record);
  void record_server_request(SimTime at);
  void record_rsu_request(std::uint32_t rsu, SimTime at);
  void record_cache_lookup(CacheOwner owner, SimTime at, bool hit);

  /// Running average over every delivery so far, in seconds.
  std::optional<double> average_cdt_s() const;

  std::vector<CdtPoint> avg_cdt_series(SimTime interval, SimTime end) const;
  /// Throws UnknownRsu for an out-of-range RSU index.
  std::vector<CountPoint> request_count_series(const RequestTarget& target, SimTime interval,
                                               SimTime end) const;
  std::vector<ChrPoint> chr_series(const ChrScope& scope, SimTime interval, SimTime end) const;

  const std::vector<DeliveryRecord>& deliveries() const { return deliveries_; }
  std::uint64_t server_requests() const { return server_requests_.size(); }
  std::uint64_t rsu_requests(std::uint32_t rsu) const;
  std::uint64_t total_rsu_requests() const;
  std::size_t rsu_count() const { return rsu_requests_.size(); }
  bool includes_vehicle_caches() const { return include_vehicle_caches_; }
  SimTime max_cdt() const { return max_cdt_; }

 private:
  struct Lookup {
    SimTime at;
    CacheOwner owner;
    bool hit;
  };

  bool in_scope(const ChrScope& scope, const CacheOwner& owner) const;

  bool include_vehicle_caches_;
  std::vector<DeliveryRecord> deliveries_;
  std::int64_t cdt_sum_us_ = 0;
  SimTime max_cdt_;
  std::vector<SimTime> server_requests_;
  std::vector<std::vector<SimTime>> rsu_requests_;
  std::vector<Lookup> lookups_;
};

}  // namespace vcache
