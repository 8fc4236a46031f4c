#pragma once

#include <cstdint>

#include "vcache/mobility.hpp"
#include "vcache/sim_time.hpp"

namespace vcache {

/// Framing and physical-layer settings. Only header_bits, bitrate and the
/// beacon fields affect timing; the power, noise, antenna and frequency
/// values are carried for reporting and are not used by the range test.
struct RadioParams {
  std::uint64_t header_bits = 80;
  double bitrate_bps = 6e6;
  double tx_power_mw = 20.0;
  double noise_floor_dbm = -98.0;
  double min_power_dbm = -110.0;
  double antenna_height_m = 1.895;
  double center_freq_ghz = 5.89;
  double beacon_interval_s = 10.0;
  std::uint64_t beacon_payload_bits = 320;

  void validate() const;

  bool operator==(const RadioParams&) const = default;
};

inline constexpr double kSpeedOfLight = 3e8;

struct CoverageZone {
  std::uint32_t owner = 0;  // RSU index
  Point center;
  double radius = 0.0;
};

/// Closed-ball membership: true iff distance(center, point) <= radius.
bool in_range(const CoverageZone& zone, Point point);

/// Exact airtime in seconds: (header_bits + payload_bits) / bitrate.
double tx_duration(const RadioParams& params, std::uint64_t payload_bits);

/// Airtime on the simulation clock, rounded up to whole microseconds.
SimTime tx_time(const RadioParams& params, std::uint64_t payload_bits);

SimTime propagation_delay(double meters);

struct Transmission {
  SimTime enqueued;
  SimTime start;
  SimTime end;
};

/// Shared broadcast medium of one RSU zone. Frames are serialized in FIFO
/// order: a frame starts when both it has been enqueued and the previous
/// frame has finished.
class Channel {
 public:
  explicit Channel(CoverageZone zone) : zone_(zone) {}

  Transmission enqueue(SimTime now, SimTime duration);

  const CoverageZone& zone() const { return zone_; }
  SimTime busy_until() const { return busy_until_; }
  std::uint64_t frames() const { return frames_; }
  SimTime total_wait() const { return total_wait_; }
  SimTime max_wait() const { return max_wait_; }

 private:
  CoverageZone zone_;
  SimTime busy_until_;
  std::uint64_t frames_ = 0;
  SimTime total_wait_;
  SimTime max_wait_;
};

/// Wired RSU <-> edge server link with a fixed one-way latency and no
/// contention. Relay RSUs have a disconnected link.
class BackhaulLink {
 public:
  static BackhaulLink connected(SimTime latency) { return BackhaulLink(true, latency); }
  static BackhaulLink none() { return BackhaulLink(false, SimTime{}); }

  /// Delivery time of a frame sent at `now`. Throws NoBackhaul on a
  /// disconnected link.
  SimTime send(SimTime now) const;

  bool is_connected() const { return connected_; }
  SimTime latency() const { return latency_; }

 private:
  BackhaulLink(bool connected, SimTime latency) : connected_(connected), latency_(latency) {}
  bool connected_;
  SimTime latency_;
};

}  // namespace vcache
