#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "vcache/random.hpp"
#include "vcache/sim_time.hpp"

namespace vcache {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double distance(Point a, Point b);

using RoadId = std::uint32_t;
using VehicleId = std::uint32_t;

/// Straight single-lane road. Positions are meters from `origin` along the
/// unit vector `heading`; vehicles enter at 0 and leave at `length`.
struct RoadSegment {
  RoadId id = 0;
  double length = 0.0;
  Point origin;
  Point heading{1.0, 0.0};

  Point point_at(double position) const {
    return {origin.x + heading.x * position, origin.y + heading.y * position};
  }

  bool operator==(const RoadSegment&) const = default;
};

struct KinematicParams {
  double accel = 2.6;      // m/s^2
  double decel = 4.5;      // m/s^2
  double max_speed = 14.0; // m/s
  double min_gap = 2.5;    // m

  /// Throws ValidationError unless every field is strictly positive.
  void validate() const;

  bool operator==(const KinematicParams&) const = default;
};

struct VehicleState {
  RoadId road = 0;
  double position = 0.0;
  double speed = 0.0;
  SimTime entered_at;
  bool exited = false;
};

enum class ArrivalPattern { UrbanRandom, HighwayUniform };

struct Arrival {
  SimTime time;
  RoadId road = 0;

  bool operator==(const Arrival&) const = default;
};

struct ArrivalSchedule {
  ArrivalPattern pattern = ArrivalPattern::UrbanRandom;
  std::vector<Arrival> entries;
};

/// Urban: `count` entry times uniform over [0, window) at microsecond
/// resolution, each on a uniformly chosen road. Highway: one entry per
/// second (0, 1, ..., count-1) on roads[0]. Entries are sorted by time.
ArrivalSchedule generate_arrivals(ArrivalPattern pattern, std::uint32_t count, double window_s,
                                  std::span<const RoadId> roads, RandomSource& rng);

/// One kinematics step of `dt` seconds.
///
/// The vehicle accelerates toward max_speed unless that would leave less
/// than min_gap plus the relative braking distance to `leader` (already
/// advanced to the end of this step). Speed changes are bounded by
/// accel*dt upward and decel*dt downward; position uses the trapezoid
/// rule. As a last guard the follower is never placed closer than min_gap
/// behind its leader.
VehicleState advance_kinematics(const VehicleState& vehicle, const VehicleState* leader,
                                double dt, const KinematicParams& params,
                                const RoadSegment& road);

struct NotYetEntered {};
struct Exited {};
struct RoadPosition {
  RoadId road = 0;
  double position = 0.0;
};
using PositionQuery = std::variant<RoadPosition, NotYetEntered, Exited>;

/// Vehicles on a set of roads, advanced on a fixed tick.
///
/// Vehicles are inserted at a tick once their scheduled arrival time has
/// passed and the entry point is clear of the last vehicle on the road; a
/// blocked insertion waits for a later tick. Per-tick positions are kept so
/// that position_at can answer historical queries.
class Traffic {
 public:
  Traffic(std::vector<RoadSegment> roads, KinematicParams params, SimTime tick,
          double entry_speed);

  /// Registers a vehicle that wants to enter `road` at or after `arrival`.
  /// Ids are assigned sequentially from 0.
  VehicleId add_vehicle(RoadId road, SimTime arrival);

  /// Advances active vehicles to `now` and performs due insertions.
  /// Returns the ids inserted during this tick.
  std::vector<VehicleId> step(SimTime now);

  PositionQuery position_at(VehicleId id, SimTime t) const;

  const VehicleState& state(VehicleId id) const;
  bool entered(VehicleId id) const;
  bool active(VehicleId id) const;
  std::size_t vehicle_count() const { return vehicles_.size(); }
  std::size_t spawned_count() const;

  const RoadSegment& road(RoadId id) const;
  const std::vector<RoadSegment>& roads() const { return roads_; }
  Point world_position(VehicleId id) const;
  SimTime tick() const { return tick_; }

  /// Active vehicles on `road`, front of the road first.
  const std::vector<VehicleId>& lane(RoadId road) const;

 private:
  struct Track {
    VehicleState state;
    SimTime arrival;
    bool entered = false;
    std::vector<double> trajectory;  // position at entered_at + k*tick
    std::optional<SimTime> exited_at;
  };

  std::size_t road_index(RoadId id) const;

  std::vector<RoadSegment> roads_;
  KinematicParams params_;
  SimTime tick_;
  double entry_speed_;
  std::vector<Track> vehicles_;
  std::vector<std::vector<VehicleId>> lanes_;    // per road index, front first
  std::vector<std::vector<VehicleId>> waiting_;  // per road index, arrival order
};

}  // namespace vcache
