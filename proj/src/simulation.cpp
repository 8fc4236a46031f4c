#include "vcache/simulation.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <sstream>
#include <variant>

#include "vcache/event_queue.hpp"
#include "vcache/random.hpp"

namespace vcache {

namespace {

struct VehicleSender {
  VehicleId id;
};
struct RsuSender {
  RsuIndex index;
};
using Sender = std::variant<VehicleSender, RsuSender>;

class Simulation {
 public:
  Simulation(const ScenarioConfig& config, const RunOptions& options)
      : config_(config),
        options_(options),
        rng_(config.seed),
        catalog_(Catalog::traffic(config.catalog_size, config.payload_bits)),
        traffic_(config.roads, config.kinematics, SimTime::seconds(config.tick_s),
                 config.entry_speed_mps),
        server_(catalog_, SimTime::seconds(config.server_processing_s)),
        ledger_(config.rsus.size(), config.include_vehicle_chr),
        rsu_processing_(SimTime::seconds(config.rsu_processing_s)),
        backhaul_latency_(SimTime::seconds(config.backhaul_latency_s)),
        end_(SimTime::seconds(config.duration_s)) {
    std::vector<RoadId> road_ids;
    for (const auto& road : config.roads) road_ids.push_back(road.id);
    const ArrivalSchedule schedule = generate_arrivals(
        config.arrivals.pattern, config.arrivals.count, config.arrivals.window_s, road_ids, rng_);
    for (const auto& arrival : schedule.entries) {
      traffic_.add_vehicle(arrival.road, arrival.time);
      arrivals_.push_back(arrival);
    }

    const SimTime retry = SimTime::seconds(config.request_interval_s);
    std::optional<std::size_t> capacity;
    if (config.vehicle_cache_capacity > 0) capacity = config.vehicle_cache_capacity;
    for (VehicleId id = 0; id < arrivals_.size(); ++id) {
      const ContentName& wanted = catalog_.items()[rng_.uniform_draw(catalog_.size())].name;
      vehicles_.emplace_back(id, wanted, config.caching_enabled, retry, capacity);
    }
    next_check_.assign(vehicles_.size(), std::nullopt);
    next_beacon_.assign(vehicles_.size(), SimTime{});
    ever_covered_.assign(vehicles_.size(), false);

    const auto routes = relay_routes(config);
    for (std::size_t i = 0; i < config.rsus.size(); ++i) {
      const auto index = static_cast<RsuIndex>(i);
      rsus_.emplace_back(index, config.rsus[i].role, config.rsu_cache_capacity, routes[i]);
      channels_.emplace_back(config.zone(i));
      backhauls_.push_back(config.rsus[i].role == RsuRole::Relay
                               ? BackhaulLink::none()
                               : BackhaulLink::connected(backhaul_latency_));
    }
  }

  RunResult run() {
    queue_.schedule(SimTime{}, [this] { on_tick(SimTime{}); });
    queue_.run_until(end_);
    return collect();
  }

 private:
  // -- helpers ---------------------------------------------------------------

  void note(SimTime at, const std::string& node, const char* event, const std::string& detail) {
    if (!options_.trace) return;
    trace_ << format_seconds(at) << ' ' << node << ' ' << event;
    if (!detail.empty()) trace_ << ' ' << detail;
    trace_ << '\n';
  }

  static std::string vehicle_label(VehicleId id) { return "vehicle/" + std::to_string(id); }
  static std::string rsu_label(RsuIndex i) { return "rsu/" + std::to_string(i); }

  static std::string describe(const Message& frame) {
    std::string out = kind_name(frame);
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, BeaconMsg>) {
            out += " -";
          } else {
            out += ' ' + m.name.str();
          }
        },
        frame);
    return out;
  }

  Point position_of(const Sender& sender) const {
    if (const auto* v = std::get_if<VehicleSender>(&sender)) return traffic_.world_position(v->id);
    return config_.rsus[std::get<RsuSender>(sender).index].position;
  }

  std::string label_of(const Sender& sender) const {
    if (const auto* v = std::get_if<VehicleSender>(&sender)) return vehicle_label(v->id);
    return rsu_label(std::get<RsuSender>(sender).index);
  }

  // Nearest RSU whose zone contains the vehicle; ties go to the lower index.
  std::optional<RsuIndex> serving_zone(VehicleId id) const {
    const Point p = traffic_.world_position(id);
    std::optional<RsuIndex> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < config_.rsus.size(); ++i) {
      const CoverageZone zone = config_.zone(i);
      if (!in_range(zone, p)) continue;
      const double d = distance(zone.center, p);
      if (d < best_d) {
        best_d = d;
        best = static_cast<RsuIndex>(i);
      }
    }
    return best;
  }

  // -- kinematics tick -------------------------------------------------------

  void on_tick(SimTime now) {
    for (VehicleId id : traffic_.step(now)) {
      next_check_[id] = now;
      next_beacon_[id] = now;
      note(now, vehicle_label(id), "enter", "road " + std::to_string(traffic_.state(id).road));
    }
    observe_mobility();

    const SimTime beacon_interval = SimTime::seconds(config_.radio.beacon_interval_s);
    for (VehicleId id = 0; id < vehicles_.size(); ++id) {
      if (!traffic_.active(id) || next_beacon_[id] > now) continue;
      if (const auto zone = serving_zone(id)) {
        transmit(VehicleSender{id}, Transmit{*zone, BeaconMsg{id}, std::nullopt}, now);
      }
      next_beacon_[id] += beacon_interval;
    }

    for (VehicleId id = 0; id < vehicles_.size(); ++id) {
      if (!traffic_.active(id) || !next_check_[id] || *next_check_[id] > now) continue;
      next_check_[id].reset();
      const auto zone = serving_zone(id);
      if (zone) ever_covered_[id] = true;
      apply(VehicleSender{id}, vehicles_[id].on_tick(now, zone), now);
    }

    const SimTime next = now + traffic_.tick();
    if (next <= end_) queue_.schedule(next, [this, next] { on_tick(next); });
  }

  void observe_mobility() {
    for (const auto& road : traffic_.roads()) {
      const auto& lane = traffic_.lane(road.id);
      for (std::size_t k = 0; k < lane.size(); ++k) {
        const VehicleState& s = traffic_.state(lane[k]);
        mobility_.max_speed_mps = std::max(mobility_.max_speed_mps, s.speed);
        if (k == 0) continue;
        const double gap = traffic_.state(lane[k - 1]).position - s.position;
        if (gap <= 0.0) mobility_.order_preserved = false;
        if (!have_gap_ || gap < mobility_.min_gap_m) {
          mobility_.min_gap_m = gap;
          have_gap_ = true;
        }
      }
    }
  }

  // -- effects ---------------------------------------------------------------

  void apply(const Sender& sender, Effects effects, SimTime now) {
    for (auto& effect : effects) {
      std::visit(
          [&](auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Transmit>) {
              transmit(sender, std::move(e), now);
            } else if constexpr (std::is_same_v<T, FetchFromServer>) {
              fetch(std::get<RsuSender>(sender).index, std::move(e.request), now);
            } else if constexpr (std::is_same_v<T, ScheduleCheck>) {
              next_check_[std::get<VehicleSender>(sender).id] = e.at;
            } else if constexpr (std::is_same_v<T, Delivered>) {
              note(now, vehicle_label(e.record.vehicle), "deliver",
                   e.record.name.str() + ' ' + to_string(e.record.source) + " cdt=" +
                       format_seconds(e.record.cdt));
              ledger_.record_delivery(std::move(e.record));
            } else if constexpr (std::is_same_v<T, CacheLookup>) {
              CacheOwner owner;
              if (const auto* v = std::get_if<VehicleSender>(&sender)) {
                owner = {CacheOwnerKind::Vehicle, v->id};
              } else {
                owner = {CacheOwnerKind::Rsu, std::get<RsuSender>(sender).index};
              }
              ledger_.record_cache_lookup(owner, now, e.hit);
            }
          },
          effect);
    }
  }

  void transmit(const Sender& sender, Transmit tx, SimTime now) {
    if (std::holds_alternative<RequestMsg>(tx.frame) &&
        std::holds_alternative<VehicleSender>(sender)) {
      ++vehicle_requests_sent_;
    }
    const SimTime airtime = tx_time(config_.radio, payload_bits(tx.frame, config_.radio));
    const Transmission slot = channels_[tx.zone].enqueue(now, airtime);
    note(now, label_of(sender), "tx", describe(tx.frame) + " zone=" + std::to_string(tx.zone));

    if (std::holds_alternative<BeaconMsg>(tx.frame)) return;

    const Point from = position_of(sender);
    if (tx.to) {
      const RsuIndex target = *tx.to;
      const bool forwarded = std::holds_alternative<RsuSender>(sender);
      const SimTime at = slot.end +
                         propagation_delay(distance(from, config_.rsus[target].position)) +
                         rsu_processing_;
      auto request = std::get<RequestMsg>(std::move(tx.frame));
      queue_.schedule(at, [this, target, forwarded, request = std::move(request), at] {
        note(at, rsu_label(target), forwarded ? "rx-forwarded" : "rx",
             "request " + request.name.str());
        if (!forwarded) ledger_.record_rsu_request(target, at);
        apply(RsuSender{target}, rsus_[target].on_request(request, forwarded, at), at);
      });
      return;
    }

    // Content frames are broadcast: receivers are whoever is in the zone
    // when the frame finishes.
    const RsuIndex origin = std::get<RsuSender>(sender).index;
    ContentName name({"unset"});
    std::uint64_t bits = 0;
    DeliverySource source = DeliverySource::RelayHit;
    if (const auto* r = std::get_if<ResponseMsg>(&tx.frame)) {
      name = r->name;
      bits = r->payload_bits;
      source = r->source;
    } else {
      const auto& rb = std::get<RelayRebroadcastMsg>(tx.frame);
      name = rb.name;
      bits = rb.payload_bits;
    }
    queue_.schedule(slot.end, [this, origin, name, bits, source, end = slot.end] {
      deliver_broadcast(origin, name, bits, source, end);
    });
  }

  void deliver_broadcast(RsuIndex origin, const ContentName& name, std::uint64_t bits,
                         DeliverySource source, SimTime end) {
    const CoverageZone zone = config_.zone(origin);
    for (VehicleId id = 0; id < vehicles_.size(); ++id) {
      if (!traffic_.active(id)) continue;
      const Point p = traffic_.world_position(id);
      if (!in_range(zone, p)) continue;
      const SimTime at = end + propagation_delay(distance(zone.center, p));
      queue_.schedule(at, [this, id, name, bits, source, at] {
        if (!traffic_.active(id)) return;
        apply(VehicleSender{id}, vehicles_[id].on_broadcast(name, bits, source, at), at);
      });
    }
    for (std::size_t k = 0; k < rsus_.size(); ++k) {
      if (k == origin || !in_range(zone, config_.rsus[k].position)) continue;
      const auto index = static_cast<RsuIndex>(k);
      const SimTime at =
          end + propagation_delay(distance(zone.center, config_.rsus[k].position)) +
          rsu_processing_;
      queue_.schedule(at, [this, index, name, bits, at] {
        note(at, rsu_label(index), "overhear", name.str());
        apply(RsuSender{index}, rsus_[index].on_overheard(name, bits, at), at);
      });
    }
  }

  void fetch(RsuIndex rsu, RequestMsg request, SimTime now) {
    const SimTime at_server = backhauls_[rsu].send(now);
    note(now, rsu_label(rsu), "fetch", request.name.str());
    queue_.schedule(at_server, [this, rsu, request = std::move(request), at_server] {
      ledger_.record_server_request(at_server);
      note(at_server, "server", "rx", "request " + request.name.str());
      ResponseMsg response = server_.on_request(request);
      const SimTime back = backhauls_[rsu].send(at_server + server_.processing_delay());
      queue_.schedule(back, [this, rsu, response = std::move(response), back] {
        note(back, rsu_label(rsu), "backhaul", "response " + response.name.str());
        apply(RsuSender{rsu}, rsus_[rsu].on_backhaul_response(response, back), back);
      });
    });
  }

  // -- results ---------------------------------------------------------------

  RunResult collect() {
    RunResult result;
    result.config = config_;
    result.end = end_;
    result.mobility = mobility_;
    for (VehicleId id = 0; id < vehicles_.size(); ++id) {
      const VehicleAgent& agent = vehicles_[id];
      VehicleOutcome out;
      out.id = id;
      out.wanted = agent.wanted();
      out.road = arrivals_[id].road;
      out.arrival = arrivals_[id].time;
      if (traffic_.entered(id)) {
        out.entered_at = traffic_.state(id).entered_at;
        ++result.spawned;
      }
      out.first_request_at = agent.first_request_at();
      out.delivered_at = agent.delivered_at();
      out.status = agent.status();
      out.requests_sent = agent.requests_sent();
      out.ever_covered = ever_covered_[id];
      if (out.status == VehicleStatus::Satisfied) ++result.satisfied;
      result.vehicles.push_back(std::move(out));
    }
    for (const auto& record : ledger_.deliveries()) {
      result.vehicles[record.vehicle].source = record.source;
    }
    for (const auto& rsu : rsus_) {
      RsuReport report;
      report.index = rsu.index();
      report.role = rsu.role();
      report.requests_received = rsu.requests_received();
      report.forwarded_received = rsu.forwarded_received();
      report.rebroadcasts = rsu.rebroadcasts();
      report.hits = rsu.cache().hits();
      report.misses = rsu.cache().misses();
      report.cache_size = rsu.cache().size();
      report.pending_at_end = rsu.pending();
      result.rsus.push_back(report);
    }
    for (const auto& channel : channels_) {
      result.channels.push_back({channel.frames(), channel.total_wait(), channel.max_wait()});
    }
    result.server_requests = server_.requests_received();
    result.vehicle_requests_sent = vehicle_requests_sent_;
    result.trace = trace_.str();
    result.ledger = std::move(ledger_);
    return result;
  }

  const ScenarioConfig& config_;
  RunOptions options_;
  RandomSource rng_;
  Catalog catalog_;
  Traffic traffic_;
  EdgeServer server_;
  MetricsLedger ledger_;
  SimTime rsu_processing_;
  SimTime backhaul_latency_;
  SimTime end_;
  EventQueue queue_;

  std::vector<Arrival> arrivals_;
  std::vector<VehicleAgent> vehicles_;
  std::vector<std::optional<SimTime>> next_check_;
  std::vector<SimTime> next_beacon_;
  std::vector<bool> ever_covered_;
  std::vector<RsuAgent> rsus_;
  std::vector<Channel> channels_;
  std::vector<BackhaulLink> backhauls_;

  MobilityReport mobility_;
  bool have_gap_ = false;
  std::uint64_t vehicle_requests_sent_ = 0;
  std::ostringstream trace_;
};

}  // namespace

RunResult run_simulation(const ScenarioConfig& config, const RunOptions& options) {
  validate(config);
  Simulation sim(config, options);
  return sim.run();
}

}  // namespace vcache
