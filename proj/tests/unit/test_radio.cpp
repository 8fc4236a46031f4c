#include <gtest/gtest.h>

#include "vcache/errors.hpp"
#include "vcache/radio.hpp"

using namespace vcache;

TEST(Radio, DefaultsMatchParameterTable) {
  const RadioParams r;
  EXPECT_EQ(r.header_bits, 80u);
  EXPECT_DOUBLE_EQ(r.bitrate_bps, 6e6);
  EXPECT_DOUBLE_EQ(r.tx_power_mw, 20.0);
  EXPECT_DOUBLE_EQ(r.noise_floor_dbm, -98.0);
  EXPECT_DOUBLE_EQ(r.min_power_dbm, -110.0);
  EXPECT_DOUBLE_EQ(r.antenna_height_m, 1.895);
  EXPECT_DOUBLE_EQ(r.center_freq_ghz, 5.89);
  EXPECT_DOUBLE_EQ(r.beacon_interval_s, 10.0);
}

TEST(Radio, ValidateRejectsZeroBitrate) {
  RadioParams r;
  r.bitrate_bps = 0.0;
  EXPECT_THROW(r.validate(), ValidationError);
}

TEST(Radio, InRangeIsClosedBall) {
  const CoverageZone z{0, {0.0, 0.0}, 400.0};
  EXPECT_TRUE(in_range(z, {400.0, 0.0}));
  EXPECT_TRUE(in_range(z, {0.0, 0.0}));
  EXPECT_FALSE(in_range(z, {400.0001, 0.0}));
  EXPECT_FALSE(in_range(z, {300.0, 300.0}));
}

TEST(Radio, Airtime) {
  const RadioParams r;
  EXPECT_DOUBLE_EQ(tx_duration(r, 2000), 2080.0 / 6e6);
  EXPECT_EQ(tx_time(r, 0).us(), 14);
  EXPECT_EQ(tx_time(r, 320).us(), 67);
  EXPECT_EQ(tx_time(r, 2000).us(), 347);
}

// Property: the rounded airtime is the smallest whole microsecond count not
// shorter than the exact airtime.
TEST(Radio, PropertyAirtimeCeil) {
  const RadioParams r;
  for (std::uint64_t bits = 0; bits < 5000; bits += 7) {
    const double exact_us = tx_duration(r, bits) * 1e6;
    const auto us = tx_time(r, bits).us();
    EXPECT_GE(static_cast<double>(us), exact_us - 1e-6);
    EXPECT_LT(static_cast<double>(us - 1), exact_us);
  }
}

TEST(Radio, PropagationDelay) {
  EXPECT_EQ(propagation_delay(0.0).us(), 0);
  EXPECT_EQ(propagation_delay(300.0).us(), 1);
  EXPECT_EQ(propagation_delay(3000.0).us(), 10);
}

TEST(Channel, IdleChannelStartsImmediately) {
  Channel c({0, {}, 100.0});
  const auto tx = c.enqueue(SimTime::micros(100), SimTime::micros(20));
  EXPECT_EQ(tx.start, SimTime::micros(100));
  EXPECT_EQ(tx.end, SimTime::micros(120));
  EXPECT_EQ(c.total_wait(), SimTime{});
}

TEST(Channel, BusyChannelSerializesFifo) {
  Channel c({0, {}, 100.0});
  const auto a = c.enqueue(SimTime::micros(0), SimTime::micros(67));
  const auto b = c.enqueue(SimTime::micros(0), SimTime::micros(67));
  const auto d = c.enqueue(SimTime::micros(10), SimTime::micros(347));
  EXPECT_EQ(a.end, SimTime::micros(67));
  EXPECT_EQ(b.start, SimTime::micros(67));
  EXPECT_EQ(b.end, SimTime::micros(134));
  EXPECT_EQ(d.start, SimTime::micros(134));
  EXPECT_EQ(d.end, SimTime::micros(481));
  EXPECT_EQ(c.frames(), 3u);
  EXPECT_EQ(c.max_wait(), SimTime::micros(124));
  EXPECT_EQ(c.total_wait(), SimTime::micros(67 + 124));
  EXPECT_EQ(c.busy_until(), SimTime::micros(481));
}

TEST(Channel, PropertyNoOverlap) {
  Channel c({0, {}, 100.0});
  SimTime prev_end;
  std::int64_t now = 0;
  for (int i = 0; i < 1000; ++i) {
    now += (i * 37) % 200;
    const auto tx = c.enqueue(SimTime::micros(now), SimTime::micros(1 + (i * 13) % 400));
    ASSERT_GE(tx.start, prev_end);
    ASSERT_GE(tx.start, tx.enqueued);
    prev_end = tx.end;
  }
}

TEST(Backhaul, ConnectedAddsLatency) {
  const auto link = BackhaulLink::connected(SimTime::micros(300));
  EXPECT_TRUE(link.is_connected());
  EXPECT_EQ(link.send(SimTime::micros(1000)), SimTime::micros(1300));
}

TEST(Backhaul, NoneThrows) {
  const auto link = BackhaulLink::none();
  EXPECT_FALSE(link.is_connected());
  EXPECT_THROW(link.send(SimTime{}), NoBackhaul);
}
