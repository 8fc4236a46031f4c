#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "vcache/errors.hpp"
#include "vcache/mobility.hpp"

using namespace vcache;

namespace {

RoadSegment straight(double length = 800.0) { return {0, length, {0.0, 0.0}, {1.0, 0.0}}; }

}  // namespace

TEST(Geometry, DistanceAndPointAt) {
  EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
  const RoadSegment back{1, 800.0, {800.0, 200.0}, {-1.0, 0.0}};
  EXPECT_EQ(back.point_at(100.0), (Point{700.0, 200.0}));
}

TEST(KinematicParams, Validate) {
  EXPECT_NO_THROW(KinematicParams{}.validate());
  KinematicParams p;
  p.decel = 0.0;
  EXPECT_THROW(p.validate(), ValidationError);
  p = {};
  p.max_speed = -1.0;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(Arrivals, HighwayOnePerSecond) {
  RandomSource rng(1);
  const std::vector<RoadId> roads{0};
  const auto s = generate_arrivals(ArrivalPattern::HighwayUniform, 300, 300.0, roads, rng);
  ASSERT_EQ(s.entries.size(), 300u);
  for (std::size_t i = 0; i < 300; ++i) {
    EXPECT_EQ(s.entries[i].time, SimTime::seconds(static_cast<double>(i)));
    EXPECT_EQ(s.entries[i].road, 0u);
  }
}

TEST(Arrivals, UrbanWithinWindowSortedAndSeeded) {
  const std::vector<RoadId> roads{0, 1};
  RandomSource a(3);
  RandomSource b(3);
  const auto s = generate_arrivals(ArrivalPattern::UrbanRandom, 40, 230.0, roads, a);
  const auto t = generate_arrivals(ArrivalPattern::UrbanRandom, 40, 230.0, roads, b);
  EXPECT_EQ(s.entries, t.entries);
  ASSERT_EQ(s.entries.size(), 40u);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    EXPECT_GE(s.entries[i].time, SimTime{});
    EXPECT_LT(s.entries[i].time, SimTime::seconds(230.0));
    if (i > 0) EXPECT_LE(s.entries[i - 1].time, s.entries[i].time);
  }
}

TEST(Arrivals, UrbanUsesBothRoads) {
  const std::vector<RoadId> roads{0, 1};
  RandomSource rng(11);
  const auto s = generate_arrivals(ArrivalPattern::UrbanRandom, 400, 230.0, roads, rng);
  int on_first = 0;
  for (const auto& e : s.entries) on_first += e.road == 0;
  EXPECT_GT(on_first, 150);
  EXPECT_LT(on_first, 250);
}

TEST(Arrivals, Errors) {
  RandomSource rng(1);
  const std::vector<RoadId> none;
  EXPECT_THROW(generate_arrivals(ArrivalPattern::UrbanRandom, 5, 10.0, none, rng), EmptyRoadList);
  const std::vector<RoadId> roads{0};
  EXPECT_THROW(generate_arrivals(ArrivalPattern::UrbanRandom, 0, 10.0, roads, rng),
               ValidationError);
}

TEST(Kinematics, FreeRoadAcceleratesToMaxSpeed) {
  const KinematicParams p;
  VehicleState v;
  for (int i = 0; i < 100; ++i) v = advance_kinematics(v, nullptr, 0.1, p, straight(10000.0));
  EXPECT_DOUBLE_EQ(v.speed, p.max_speed);
}

TEST(Kinematics, AccelerationIsBounded) {
  const KinematicParams p;
  VehicleState v;
  const VehicleState n = advance_kinematics(v, nullptr, 0.1, p, straight());
  EXPECT_NEAR(n.speed, 0.26, 1e-12);
  EXPECT_NEAR(n.position, 0.5 * 0.26 * 0.1, 1e-12);
}

// Fine-step oracle: integrating constant acceleration with the trapezoid
// rule reproduces x = a t^2 / 2 exactly until max speed is reached.
TEST(Kinematics, TrapezoidMatchesClosedForm) {
  const KinematicParams p;
  VehicleState v;
  const double dt = 0.001;
  for (int i = 0; i < 3000; ++i) v = advance_kinematics(v, nullptr, dt, p, straight(10000.0));
  EXPECT_NEAR(v.position, 0.5 * p.accel * 9.0, 1e-6);
  EXPECT_NEAR(v.speed, p.accel * 3.0, 1e-9);
}

TEST(Kinematics, StoppedLeaderIsNeverRammed) {
  const KinematicParams p;
  VehicleState leader;
  leader.position = 100.0;
  VehicleState f;
  f.speed = p.max_speed;
  for (int i = 0; i < 400; ++i) {
    f = advance_kinematics(f, &leader, 0.1, p, straight());
    ASSERT_GE(leader.position - f.position, p.min_gap - 1e-9);
  }
  EXPECT_NEAR(f.speed, 0.0, 1e-6);
}

TEST(Kinematics, ExitAtRoadEnd) {
  const KinematicParams p;
  VehicleState v;
  v.position = 799.0;
  v.speed = 14.0;
  v = advance_kinematics(v, nullptr, 0.1, p, straight());
  EXPECT_TRUE(v.exited);
  const VehicleState again = advance_kinematics(v, nullptr, 0.1, p, straight());
  EXPECT_EQ(again.position, v.position);
}

TEST(Traffic, InsertsAtFirstTickAfterArrival) {
  Traffic t({straight()}, {}, SimTime::seconds(0.1), 0.0);
  const VehicleId id = t.add_vehicle(0, SimTime::seconds(0.25));
  EXPECT_TRUE(t.step(SimTime::seconds(0.0)).empty());
  EXPECT_TRUE(t.step(SimTime::seconds(0.1)).empty());
  EXPECT_TRUE(t.step(SimTime::seconds(0.2)).empty());
  EXPECT_EQ(t.step(SimTime::seconds(0.3)), std::vector<VehicleId>{id});
  EXPECT_TRUE(std::holds_alternative<NotYetEntered>(t.position_at(id, SimTime::seconds(0.2))));
  EXPECT_EQ(t.state(id).entered_at, SimTime::seconds(0.3));
}

TEST(Traffic, BlockedEntryWaits) {
  Traffic t({straight()}, {}, SimTime::seconds(0.1), 0.0);
  t.add_vehicle(0, SimTime{});
  const VehicleId second = t.add_vehicle(0, SimTime{});
  EXPECT_EQ(t.step(SimTime{}).size(), 1u);
  EXPECT_FALSE(t.entered(second));
  SimTime now;
  while (!t.entered(second)) {
    now += t.tick();
    t.step(now);
  }
  EXPECT_GT(now, SimTime{});
}

TEST(Traffic, PositionHistoryAndExit) {
  Traffic t({straight(50.0)}, {}, SimTime::seconds(0.1), 14.0);
  const VehicleId id = t.add_vehicle(0, SimTime{});
  SimTime now;
  t.step(now);
  std::vector<double> seen;
  while (t.active(id)) {
    now += t.tick();
    t.step(now);
    if (t.active(id)) seen.push_back(t.state(id).position);
  }
  ASSERT_FALSE(seen.empty());
  const auto q = t.position_at(id, SimTime::seconds(0.1));
  ASSERT_TRUE(std::holds_alternative<RoadPosition>(q));
  EXPECT_DOUBLE_EQ(std::get<RoadPosition>(q).position, seen.front());
  EXPECT_TRUE(std::holds_alternative<Exited>(t.position_at(id, now)));
  EXPECT_THROW(t.position_at(99, now), UnknownVehicle);
}

// Platoon property: one vehicle per second at cruise speed keeps entry
// order, never violates the minimum gap and never exceeds max speed.
TEST(Traffic, PropertyPlatoonInvariants) {
  const KinematicParams p;
  Traffic t({straight(2000.0)}, p, SimTime::seconds(0.1), 14.0);
  for (int i = 0; i < 300; ++i) t.add_vehicle(0, SimTime::seconds(i));
  std::vector<VehicleId> entry_order;
  for (int k = 0; k <= 4200; ++k) {
    for (VehicleId id : t.step(SimTime::seconds(0.1 * k))) entry_order.push_back(id);
    const auto& lane = t.lane(0);
    for (std::size_t i = 0; i < lane.size(); ++i) {
      ASSERT_LE(t.state(lane[i]).speed, p.max_speed + 1e-12);
      if (i == 0) continue;
      ASSERT_LT(lane[i - 1], lane[i]);
      ASSERT_GE(t.state(lane[i - 1]).position - t.state(lane[i]).position, p.min_gap - 1e-9);
    }
  }
  ASSERT_EQ(entry_order.size(), 300u);
  for (std::size_t i = 0; i < entry_order.size(); ++i) EXPECT_EQ(entry_order[i], i);
  EXPECT_EQ(t.spawned_count(), 300u);
}

TEST(Traffic, UrbanQueueFromStandstillKeepsGap) {
  const KinematicParams p;
  Traffic t({straight()}, p, SimTime::seconds(0.1), 0.0);
  for (int i = 0; i < 20; ++i) t.add_vehicle(0, SimTime{});
  for (int k = 0; k <= 3000; ++k) {
    t.step(SimTime::seconds(0.1 * k));
    const auto& lane = t.lane(0);
    for (std::size_t i = 1; i < lane.size(); ++i) {
      ASSERT_GE(t.state(lane[i - 1]).position - t.state(lane[i]).position, p.min_gap - 1e-9);
    }
  }
  EXPECT_EQ(t.spawned_count(), 20u);
  EXPECT_TRUE(t.lane(0).empty());
}

TEST(Traffic, Errors) {
  EXPECT_THROW(Traffic({}, {}, SimTime::seconds(0.1), 0.0), EmptyRoadList);
  EXPECT_THROW(Traffic({straight()}, {}, SimTime{}, 0.0), ValidationError);
  Traffic t({straight()}, {}, SimTime::seconds(0.1), 0.0);
  EXPECT_THROW(t.add_vehicle(7, SimTime{}), ValidationError);
  EXPECT_THROW(t.state(3), UnknownVehicle);
}
