#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "vcache/content.hpp"
#include "vcache/metrics.hpp"
#include "vcache/mobility.hpp"
#include "vcache/radio.hpp"
#include "vcache/sim_time.hpp"

namespace vcache {

using RsuIndex = std::uint32_t;

struct RequestId {
  VehicleId vehicle = 0;
  std::uint32_t attempt = 0;

  auto operator<=>(const RequestId&) const = default;
};

struct RequestMsg {
  ContentName name;
  VehicleId requester = 0;
  RequestId id;
};

/// Content frame from an RSU. Always broadcast on the sender's channel;
/// `request` names the request it answers, empty for unsolicited frames.
struct ResponseMsg {
  ContentName name;
  std::uint64_t payload_bits = 0;
  std::optional<RequestId> request;
  DeliverySource source = DeliverySource::RsuHit;
};

struct BeaconMsg {
  VehicleId sender = 0;
};

struct RelayRebroadcastMsg {
  ContentName name;
  std::uint64_t payload_bits = 0;
};

using Message = std::variant<RequestMsg, ResponseMsg, BeaconMsg, RelayRebroadcastMsg>;

const char* kind_name(const Message& message);

/// Payload size on the air. Requests carry their name text (8 bits per
/// character); content frames carry the item; beacons use the configured
/// beacon payload.
std::uint64_t payload_bits(const Message& message, const RadioParams& radio);

// Effects returned by the node state machines. The simulation executes
// them; the state machines never touch the clock or the channels directly.

/// Put `frame` on the channel of RSU zone `zone`. `to` addresses a single
/// RSU receiver (requests); content frames are broadcast.
struct Transmit {
  RsuIndex zone = 0;
  Message frame;
  std::optional<RsuIndex> to;
};

/// Send a request to the edge server over the RSU's backhaul.
struct FetchFromServer {
  RequestMsg request;
};

/// Run the vehicle's next request attempt at `at`.
struct ScheduleCheck {
  SimTime at;
};

struct Delivered {
  DeliveryRecord record;
};

struct CacheLookup {
  bool hit = false;
};

using Effect = std::variant<Transmit, FetchFromServer, ScheduleCheck, Delivered, CacheLookup>;
using Effects = std::vector<Effect>;

enum class VehicleStatus { Idle, Waiting, Satisfied };

const char* to_string(VehicleStatus status);

/// Vehicle side of the pull protocol: one wanted item per lifetime,
/// requested every `retry_interval` while unsatisfied, plus pre-caching of
/// every content frame overheard when caching is enabled.
class VehicleAgent {
 public:
  VehicleAgent(VehicleId id, ContentName wanted, bool caching, SimTime retry_interval,
               std::optional<std::size_t> cache_capacity = std::nullopt);

  /// One request attempt. `zone` is the RSU zone currently serving the
  /// vehicle, if any.
  Effects on_tick(SimTime now, std::optional<RsuIndex> zone);

  /// A content frame (Response or RelayRebroadcast) delivered by the radio.
  Effects on_broadcast(const ContentName& name, std::uint64_t payload_bits,
                       DeliverySource source, SimTime now);

  VehicleId id() const { return id_; }
  const ContentName& wanted() const { return wanted_; }
  VehicleStatus status() const { return status_; }
  std::optional<SimTime> first_request_at() const { return first_request_at_; }
  std::optional<SimTime> delivered_at() const { return delivered_at_; }
  std::uint32_t requests_sent() const { return requests_sent_; }
  const LruStore& local_cache() const { return cache_; }

 private:
  Effects satisfy(SimTime now, DeliverySource source);

  VehicleId id_;
  ContentName wanted_;
  bool caching_;
  SimTime retry_interval_;
  LruStore cache_;
  VehicleStatus status_ = VehicleStatus::Idle;
  std::optional<SimTime> first_request_at_;
  std::optional<SimTime> delivered_at_;
  std::uint32_t requests_sent_ = 0;
};

enum class RsuRole { CachingGateway, PlainGateway, Relay };

const char* to_string(RsuRole role);

/// RSU side of the protocol.
///
/// CachingGateway answers from its LRU cache and fetches misses from the
/// edge server, coalescing concurrent misses for the same name into one
/// fetch. PlainGateway forwards every request to the server. Relay answers
/// from its cache, forwards misses over the air to `upstream`, and caches
/// and rebroadcasts content it overhears from neighbouring RSUs the first
/// time it sees each name.
class RsuAgent {
 public:
  RsuAgent(RsuIndex index, RsuRole role, std::size_t cache_capacity,
           std::optional<RsuIndex> upstream = std::nullopt);

  /// `forwarded` marks a request relayed by another RSU rather than sent by
  /// a vehicle; only vehicle requests count toward requests_received.
  Effects on_request(const RequestMsg& request, bool forwarded, SimTime now);

  /// Server response arriving over the backhaul. Throws OrphanResponse when
  /// no pending fetch matches.
  Effects on_backhaul_response(const ResponseMsg& response, SimTime now);

  /// Content frame overheard from another RSU. Only relays react.
  Effects on_overheard(const ContentName& name, std::uint64_t payload_bits, SimTime now);

  RsuIndex index() const { return index_; }
  RsuRole role() const { return role_; }
  bool has_backhaul() const { return role_ != RsuRole::Relay; }
  std::optional<RsuIndex> upstream() const { return upstream_; }
  const LruStore& cache() const { return cache_; }
  std::uint64_t requests_received() const { return requests_received_; }
  std::uint64_t forwarded_received() const { return forwarded_received_; }
  std::uint64_t rebroadcasts() const { return rebroadcasts_; }
  std::size_t pending() const { return pending_.size(); }

 private:
  struct Pending {
    ContentName name;
    std::vector<RequestId> waiting;
  };

  Effects broadcast(const ContentItem& item, std::optional<RequestId> request,
                    DeliverySource source) const;

  RsuIndex index_;
  RsuRole role_;
  LruStore cache_;
  std::optional<RsuIndex> upstream_;
  // Keyed by the id of the request that triggered the fetch or forward.
  std::map<RequestId, Pending> pending_;
  std::uint64_t requests_received_ = 0;
  std::uint64_t forwarded_received_ = 0;
  std::uint64_t rebroadcasts_ = 0;
};

/// Mobile edge server holding the full catalog.
class EdgeServer {
 public:
  EdgeServer(Catalog catalog, SimTime processing_delay)
      : catalog_(std::move(catalog)), processing_delay_(processing_delay) {}

  /// Throws UnknownContent.
  ResponseMsg on_request(const RequestMsg& request);

  const Catalog& catalog() const { return catalog_; }
  SimTime processing_delay() const { return processing_delay_; }
  std::uint64_t requests_received() const { return requests_received_; }

 private:
  Catalog catalog_;
  SimTime processing_delay_;
  std::uint64_t requests_received_ = 0;
};

}  // namespace vcache
