#include "vcache/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vcache/errors.hpp"

namespace vcache {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

void KinematicParams::validate() const {
  if (!(accel > 0.0) || !(decel > 0.0) || !(max_speed > 0.0) || !(min_gap > 0.0)) {
    throw ValidationError("kinematic parameters must be strictly positive");
  }
}

ArrivalSchedule generate_arrivals(ArrivalPattern pattern, std::uint32_t count, double window_s,
                                  std::span<const RoadId> roads, RandomSource& rng) {
  if (roads.empty()) throw EmptyRoadList("arrival schedule needs at least one road");
  if (count == 0) throw ValidationError("arrival count must be at least 1");

  ArrivalSchedule schedule;
  schedule.pattern = pattern;
  schedule.entries.reserve(count);

  if (pattern == ArrivalPattern::HighwayUniform) {
    for (std::uint32_t i = 0; i < count; ++i) {
      schedule.entries.push_back({SimTime::seconds(static_cast<double>(i)), roads.front()});
    }
    return schedule;
  }

  if (!(window_s > 0.0)) throw ValidationError("arrival window must be positive");
  const auto window_us = static_cast<std::uint64_t>(SimTime::seconds(window_s).us());
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto t = SimTime::micros(static_cast<std::int64_t>(rng.uniform_draw(window_us)));
    const RoadId road = roads[rng.uniform_draw(roads.size())];
    schedule.entries.push_back({t, road});
  }
  std::stable_sort(schedule.entries.begin(), schedule.entries.end(),
                   [](const Arrival& a, const Arrival& b) { return a.time < b.time; });
  return schedule;
}

namespace {

// Largest speed for the end of the step that keeps
//   gap_end >= min_gap + max(0, v^2 - v_leader^2) / (2 decel).
// `slack` is the leader's end position minus the follower's start position
// minus min_gap minus the distance covered at the start speed over dt/2.
double safe_speed(double slack, double leader_speed, double dt, double decel) {
  const double linear = 2.0 * slack / dt;
  if (linear <= leader_speed) return linear;
  const double b = decel * dt;
  const double c = 2.0 * decel * slack + leader_speed * leader_speed;
  return 0.5 * (-b + std::sqrt(b * b + 4.0 * c));
}

}  // namespace

VehicleState advance_kinematics(const VehicleState& vehicle, const VehicleState* leader,
                                double dt, const KinematicParams& params,
                                const RoadSegment& road) {
  VehicleState next = vehicle;
  if (vehicle.exited) return next;

  const double v = vehicle.speed;
  const double v_floor = std::max(0.0, v - params.decel * dt);
  double v_new = std::min(v + params.accel * dt, params.max_speed);

  if (leader != nullptr) {
    const double slack = leader->position - vehicle.position - params.min_gap - 0.5 * v * dt;
    v_new = std::min(v_new, safe_speed(slack, leader->speed, dt, params.decel));
  }
  v_new = std::clamp(v_new, v_floor, params.max_speed);

  next.speed = v_new;
  next.position = vehicle.position + 0.5 * (v + v_new) * dt;

  if (leader != nullptr) {
    const double limit = leader->position - params.min_gap;
    if (next.position > limit) next.position = std::max(vehicle.position, limit);
  }
  if (next.position >= road.length) next.exited = true;
  return next;
}

Traffic::Traffic(std::vector<RoadSegment> roads, KinematicParams params, SimTime tick,
                 double entry_speed)
    : roads_(std::move(roads)),
      params_(params),
      tick_(tick),
      entry_speed_(entry_speed),
      lanes_(roads_.size()),
      waiting_(roads_.size()) {
  if (roads_.empty()) throw EmptyRoadList("traffic needs at least one road");
  if (tick_ <= SimTime{}) throw ValidationError("kinematics tick must be positive");
  params_.validate();
}

std::size_t Traffic::road_index(RoadId id) const {
  for (std::size_t i = 0; i < roads_.size(); ++i) {
    if (roads_[i].id == id) return i;
  }
  throw ValidationError("unknown road id " + std::to_string(id));
}

const RoadSegment& Traffic::road(RoadId id) const { return roads_[road_index(id)]; }

const std::vector<VehicleId>& Traffic::lane(RoadId road) const {
  return lanes_[road_index(road)];
}

VehicleId Traffic::add_vehicle(RoadId road, SimTime arrival) {
  const std::size_t r = road_index(road);
  const auto id = static_cast<VehicleId>(vehicles_.size());
  Track track;
  track.state.road = road;
  track.arrival = arrival;
  vehicles_.push_back(std::move(track));
  waiting_[r].push_back(id);
  return id;
}

std::vector<VehicleId> Traffic::step(SimTime now) {
  const double dt = tick_.to_seconds();

  for (std::size_t r = 0; r < roads_.size(); ++r) {
    auto& lane = lanes_[r];
    const VehicleState* leader = nullptr;
    for (VehicleId id : lane) {
      Track& track = vehicles_[id];
      if (track.state.entered_at < now) {
        track.state = advance_kinematics(track.state, leader, dt, params_, roads_[r]);
        if (track.state.exited) {
          track.exited_at = now;
        } else {
          track.trajectory.push_back(track.state.position);
        }
      }
      leader = &track.state;
    }
    std::erase_if(lane, [this](VehicleId id) { return vehicles_[id].state.exited; });
  }

  std::vector<VehicleId> inserted;
  for (std::size_t r = 0; r < roads_.size(); ++r) {
    auto& queue = waiting_[r];
    auto& lane = lanes_[r];
    std::size_t taken = 0;
    for (; taken < queue.size(); ++taken) {
      Track& track = vehicles_[queue[taken]];
      if (track.arrival > now) break;
      if (!lane.empty()) {
        const VehicleState& back = vehicles_[lane.back()].state;
        const double braking =
            std::max(0.0, entry_speed_ * entry_speed_ - back.speed * back.speed) /
            (2.0 * params_.decel);
        if (back.position < params_.min_gap + braking) break;
      }
      track.entered = true;
      track.state.position = 0.0;
      track.state.speed = entry_speed_;
      track.state.entered_at = now;
      track.trajectory.push_back(0.0);
      lane.push_back(queue[taken]);
      inserted.push_back(queue[taken]);
    }
    queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(taken));
  }
  return inserted;
}

PositionQuery Traffic::position_at(VehicleId id, SimTime t) const {
  if (id >= vehicles_.size()) throw UnknownVehicle("unknown vehicle " + std::to_string(id));
  const Track& track = vehicles_[id];
  if (!track.entered || t < track.state.entered_at) return NotYetEntered{};
  if (track.exited_at && t >= *track.exited_at) return Exited{};
  const auto k = static_cast<std::size_t>((t - track.state.entered_at).us() / tick_.us());
  const std::size_t index = std::min(k, track.trajectory.size() - 1);
  return RoadPosition{track.state.road, track.trajectory[index]};
}

const VehicleState& Traffic::state(VehicleId id) const {
  if (id >= vehicles_.size()) throw UnknownVehicle("unknown vehicle " + std::to_string(id));
  return vehicles_[id].state;
}

bool Traffic::entered(VehicleId id) const { return vehicles_.at(id).entered; }

bool Traffic::active(VehicleId id) const {
  const Track& track = vehicles_.at(id);
  return track.entered && !track.state.exited;
}

std::size_t Traffic::spawned_count() const {
  return static_cast<std::size_t>(std::count_if(
      vehicles_.begin(), vehicles_.end(), [](const Track& t) { return t.entered; }));
}

Point Traffic::world_position(VehicleId id) const {
  const VehicleState& s = state(id);
  return road(s.road).point_at(s.position);
}

}  // namespace vcache
