#include "vcache/protocol.hpp"

#include <algorithm>

#include "vcache/errors.hpp"

namespace vcache {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

const char* kind_name(const Message& message) {
  return std::visit(Overloaded{
                        [](const RequestMsg&) { return "request"; },
                        [](const ResponseMsg&) { return "response"; },
                        [](const BeaconMsg&) { return "beacon"; },
                        [](const RelayRebroadcastMsg&) { return "relay-rebroadcast"; },
                    },
                    message);
}

std::uint64_t payload_bits(const Message& message, const RadioParams& radio) {
  return std::visit(
      Overloaded{
          [](const RequestMsg& m) { return static_cast<std::uint64_t>(m.name.str().size()) * 8; },
          [](const ResponseMsg& m) { return m.payload_bits; },
          [&](const BeaconMsg&) { return radio.beacon_payload_bits; },
          [](const RelayRebroadcastMsg& m) { return m.payload_bits; },
      },
      message);
}

const char* to_string(VehicleStatus status) {
  switch (status) {
    case VehicleStatus::Idle:
      return "idle";
    case VehicleStatus::Waiting:
      return "waiting";
    case VehicleStatus::Satisfied:
      return "satisfied";
  }
  return "unknown";
}

const char* to_string(RsuRole role) {
  switch (role) {
    case RsuRole::CachingGateway:
      return "caching-gateway";
    case RsuRole::PlainGateway:
      return "plain-gateway";
    case RsuRole::Relay:
      return "relay";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Vehicle

VehicleAgent::VehicleAgent(VehicleId id, ContentName wanted, bool caching, SimTime retry_interval,
                           std::optional<std::size_t> cache_capacity)
    : id_(id),
      wanted_(std::move(wanted)),
      caching_(caching),
      retry_interval_(retry_interval),
      cache_(cache_capacity ? LruStore(*cache_capacity) : LruStore::unbounded()) {}

Effects VehicleAgent::satisfy(SimTime now, DeliverySource source) {
  status_ = VehicleStatus::Satisfied;
  delivered_at_ = now;
  DeliveryRecord record;
  record.vehicle = id_;
  record.name = wanted_;
  record.first_request_at = first_request_at_;
  record.delivered_at = now;
  record.cdt = first_request_at_ ? now - *first_request_at_ : SimTime{};
  record.source = source;
  return {Delivered{std::move(record)}};
}

Effects VehicleAgent::on_tick(SimTime now, std::optional<RsuIndex> zone) {
  if (status_ == VehicleStatus::Satisfied) return {};

  Effects effects;
  if (caching_) {
    const bool hit = cache_.get(wanted_).has_value();
    effects.push_back(CacheLookup{hit});
    if (hit) {
      auto done = satisfy(now, DeliverySource::LocalPrecache);
      effects.insert(effects.end(), done.begin(), done.end());
      return effects;
    }
  }

  if (zone) {
    if (!first_request_at_) first_request_at_ = now;
    status_ = VehicleStatus::Waiting;
    RequestMsg request{wanted_, id_, RequestId{id_, requests_sent_}};
    ++requests_sent_;
    effects.push_back(Transmit{*zone, std::move(request), *zone});
  }
  effects.push_back(ScheduleCheck{now + retry_interval_});
  return effects;
}

Effects VehicleAgent::on_broadcast(const ContentName& name, std::uint64_t payload_bits,
                                   DeliverySource source, SimTime now) {
  if (caching_) cache_.put(ContentItem{name, payload_bits});
  if (status_ == VehicleStatus::Waiting && name == wanted_) return satisfy(now, source);
  return {};
}

// ---------------------------------------------------------------------------
// RSU

RsuAgent::RsuAgent(RsuIndex index, RsuRole role, std::size_t cache_capacity,
                   std::optional<RsuIndex> upstream)
    : index_(index), role_(role), cache_(cache_capacity), upstream_(upstream) {
  if (role_ == RsuRole::Relay && !upstream_) {
    throw ValidationError("relay RSU " + std::to_string(index) + " has no upstream neighbour");
  }
}

Effects RsuAgent::broadcast(const ContentItem& item, std::optional<RequestId> request,
                            DeliverySource source) const {
  return {Transmit{index_, ResponseMsg{item.name, item.payload_bits, request, source}, {}}};
}

Effects RsuAgent::on_request(const RequestMsg& request, bool forwarded, SimTime /*now*/) {
  (forwarded ? forwarded_received_ : requests_received_) += 1;

  if (role_ == RsuRole::PlainGateway) {
    pending_.emplace(request.id, Pending{request.name, {request.id}});
    return {FetchFromServer{request}};
  }

  Effects effects;
  const auto item = cache_.get(request.name);
  effects.push_back(CacheLookup{item.has_value()});
  if (item) {
    const auto source =
        role_ == RsuRole::Relay ? DeliverySource::RelayHit : DeliverySource::RsuHit;
    auto out = broadcast(*item, request.id, source);
    effects.insert(effects.end(), out.begin(), out.end());
    return effects;
  }

  auto same_name = std::find_if(pending_.begin(), pending_.end(),
                                [&](const auto& p) { return p.second.name == request.name; });
  if (same_name != pending_.end()) {
    same_name->second.waiting.push_back(request.id);
    return effects;
  }

  pending_.emplace(request.id, Pending{request.name, {request.id}});
  if (role_ == RsuRole::CachingGateway) {
    effects.push_back(FetchFromServer{request});
  } else {
    effects.push_back(Transmit{*upstream_, request, *upstream_});
  }
  return effects;
}

Effects RsuAgent::on_backhaul_response(const ResponseMsg& response, SimTime /*now*/) {
  if (role_ == RsuRole::Relay) {
    throw OrphanResponse("relay RSU " + std::to_string(index_) + " has no backhaul");
  }
  auto it = response.request ? pending_.find(*response.request) : pending_.end();
  if (it == pending_.end() || it->second.name != response.name) {
    throw OrphanResponse("no pending fetch at RSU " + std::to_string(index_) + " for " +
                         response.name.str());
  }
  pending_.erase(it);

  ContentItem item{response.name, response.payload_bits};
  if (role_ == RsuRole::CachingGateway) cache_.put(item);
  return broadcast(item, response.request, DeliverySource::ServerFetch);
}

Effects RsuAgent::on_overheard(const ContentName& name, std::uint64_t payload_bits,
                               SimTime /*now*/) {
  if (role_ != RsuRole::Relay) return {};

  std::erase_if(pending_, [&](const auto& p) { return p.second.name == name; });
  const bool fresh = !cache_.contains(name);
  cache_.put(ContentItem{name, payload_bits});
  if (!fresh) return {};
  ++rebroadcasts_;
  return {Transmit{index_, RelayRebroadcastMsg{name, payload_bits}, {}}};
}

// ---------------------------------------------------------------------------
// Server

ResponseMsg EdgeServer::on_request(const RequestMsg& request) {
  ++requests_received_;
  const ContentItem& item = catalog_.lookup(request.name);
  return ResponseMsg{item.name, item.payload_bits, request.id, DeliverySource::ServerFetch};
}

}  // namespace vcache
