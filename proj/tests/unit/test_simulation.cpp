#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "vcache/errors.hpp"
#include "vcache/simulation.hpp"

using namespace vcache;

namespace {

std::uint64_t sum_received(const RunResult& r) {
  std::uint64_t n = 0;
  for (const auto& rsu : r.rsus) n += rsu.requests_received;
  return n;
}

}  // namespace

TEST(Simulation, UrbanCachedCollapsesServerRequests) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = run_simulation(urban_single(40, true, seed));
    std::set<std::string> wanted_by_requesters;
    for (const auto& v : r.vehicles) {
      if (v.requests_sent > 0) wanted_by_requesters.insert(v.wanted.str());
    }
    EXPECT_LE(r.ledger.server_requests(), 10u);
    EXPECT_EQ(r.ledger.server_requests(), wanted_by_requesters.size());
  }
}

TEST(Simulation, UrbanNoCacheEveryRequestReachesServer) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = run_simulation(urban_single(40, false, seed));
    EXPECT_EQ(r.ledger.server_requests(), 40u);
    EXPECT_EQ(r.ledger.total_rsu_requests(), 40u);
    EXPECT_EQ(r.rsus[0].requests_received, 40u);
    EXPECT_EQ(r.rsus[0].hits + r.rsus[0].misses, 0u);
  }
}

TEST(Simulation, EveryCoveredVehicleSatisfied) {
  for (const auto& name : scenario_names()) {
    const auto r = run_simulation(build_scenario(name, 0, true, 2));
    for (const auto& v : r.vehicles) {
      if (v.ever_covered) EXPECT_EQ(v.status, VehicleStatus::Satisfied) << name << " " << v.id;
    }
    EXPECT_EQ(r.spawned, r.vehicles.size()) << name;
    EXPECT_LE(r.ledger.deliveries().size(), r.spawned);
  }
}

TEST(Simulation, ZeroCdtExactlyForPrecache) {
  const auto r = run_simulation(highway_single(true, 3));
  std::size_t precached = 0;
  for (const auto& d : r.ledger.deliveries()) {
    EXPECT_GE(d.cdt, SimTime{});
    const bool local = d.source == DeliverySource::LocalPrecache;
    if (local) ++precached;
    EXPECT_EQ(local && !d.first_request_at, d.cdt == SimTime{});
  }
  EXPECT_GT(precached, 0u);
}

TEST(Simulation, RequestConservation) {
  for (const auto& name : scenario_names()) {
    const auto r = run_simulation(build_scenario(name, 0, true, 5));
    EXPECT_EQ(sum_received(r), r.ledger.total_rsu_requests()) << name;
    EXPECT_EQ(r.vehicle_requests_sent, r.ledger.total_rsu_requests()) << name;
    EXPECT_LE(r.ledger.server_requests(), r.ledger.total_rsu_requests()) << name;
    EXPECT_EQ(r.server_requests, r.ledger.server_requests()) << name;
    for (const auto& rsu : r.rsus) EXPECT_EQ(rsu.pending_at_end, 0u) << name;
  }
}

TEST(Simulation, MobilityInvariantsHold) {
  for (const auto& name : scenario_names()) {
    const auto r = run_simulation(build_scenario(name, 0, true, 1));
    EXPECT_TRUE(r.mobility.order_preserved) << name;
    EXPECT_GE(r.mobility.min_gap_m, r.config.kinematics.min_gap - 1e-9) << name;
    EXPECT_LE(r.mobility.max_speed_mps, r.config.kinematics.max_speed + 1e-12) << name;
  }
}

TEST(Simulation, RelaysRebroadcastEachNameAtMostOnce) {
  const auto r = run_simulation(highway_multi(true, 1));
  ASSERT_EQ(r.rsus.size(), 3u);
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_EQ(r.rsus[i].role, RsuRole::Relay);
    EXPECT_GT(r.rsus[i].rebroadcasts, 0u);
    EXPECT_LE(r.rsus[i].rebroadcasts, r.config.catalog_size);
    EXPECT_EQ(r.rsus[i].cache_size, r.rsus[0].cache_size);
  }
}

TEST(Simulation, RelayChainReachesAllZones) {
  // A single request at the gateway propagates content to both relays.
  ScenarioConfig c = highway_multi(true, 1);
  c.arrivals.count = 1;
  c.arrivals.window_s = 1;
  c.duration_s = 200;
  const auto r = run_simulation(c, {true});
  EXPECT_EQ(r.rsus[1].cache_size, 1u);
  EXPECT_EQ(r.rsus[2].cache_size, 1u);
  EXPECT_EQ(r.rsus[1].rebroadcasts, 1u);
  EXPECT_EQ(r.rsus[2].rebroadcasts, 1u);
  EXPECT_NE(r.trace.find("rsu/2 overhear"), std::string::npos);
}

TEST(Simulation, Deterministic) {
  const auto a = run_simulation(urban_multi(40, true, 8), {true});
  const auto b = run_simulation(urban_multi(40, true, 8), {true});
  EXPECT_EQ(a.trace, b.trace);
  ASSERT_EQ(a.ledger.deliveries().size(), b.ledger.deliveries().size());
  for (std::size_t i = 0; i < a.ledger.deliveries().size(); ++i) {
    EXPECT_EQ(a.ledger.deliveries()[i].cdt, b.ledger.deliveries()[i].cdt);
  }
}

TEST(Simulation, SeedsChangeOutcome) {
  const auto a = run_simulation(urban_single(40, true, 1), {true});
  const auto b = run_simulation(urban_single(40, true, 2), {true});
  EXPECT_NE(a.trace, b.trace);
}

TEST(Simulation, TraceLineFormat) {
  const auto r = run_simulation(urban_single(20, true, 1), {true});
  std::istringstream in(r.trace);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto space = line.find(' ');
    ASSERT_NE(space, std::string::npos);
    const std::string time = line.substr(0, space);
    ASSERT_EQ(time.size() - time.find('.'), 7u) << line;
  }
  EXPECT_GT(lines, 40u);
  EXPECT_TRUE(run_simulation(urban_single(20, true, 1)).trace.empty());
}

TEST(Simulation, CachingLowersAverageCdt) {
  const auto cached = run_simulation(urban_single(40, true, 4));
  const auto plain = run_simulation(urban_single(40, false, 4));
  EXPECT_LT(*cached.ledger.average_cdt_s(), *plain.ledger.average_cdt_s());
}

TEST(Simulation, InvalidConfigRejected) {
  ScenarioConfig c = urban_single(40, true, 1);
  c.rsus.clear();
  EXPECT_THROW(run_simulation(c), ValidationError);
}
