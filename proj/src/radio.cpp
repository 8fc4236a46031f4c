#include "vcache/radio.hpp"

#include <algorithm>

#include "vcache/errors.hpp"

namespace vcache {

void RadioParams::validate() const {
  if (header_bits == 0) throw ValidationError("header_bits must be positive");
  if (!(bitrate_bps > 0.0)) throw ValidationError("bitrate must be positive");
  if (!(beacon_interval_s > 0.0)) throw ValidationError("beacon interval must be positive");
}

bool in_range(const CoverageZone& zone, Point point) {
  return distance(zone.center, point) <= zone.radius;
}

double tx_duration(const RadioParams& params, std::uint64_t payload_bits) {
  return static_cast<double>(params.header_bits + payload_bits) / params.bitrate_bps;
}

SimTime tx_time(const RadioParams& params, std::uint64_t payload_bits) {
  return SimTime::seconds_ceil(tx_duration(params, payload_bits));
}

SimTime propagation_delay(double meters) { return SimTime::seconds(meters / kSpeedOfLight); }

Transmission Channel::enqueue(SimTime now, SimTime duration) {
  Transmission tx;
  tx.enqueued = now;
  tx.start = std::max(now, busy_until_);
  tx.end = tx.start + duration;
  busy_until_ = tx.end;

  const SimTime wait = tx.start - now;
  total_wait_ += wait;
  max_wait_ = std::max(max_wait_, wait);
  ++frames_;
  return tx;
}

SimTime BackhaulLink::send(SimTime now) const {
  if (!connected_) throw NoBackhaul("RSU has no backhaul link to the edge server");
  return now + latency_;
}

}  // namespace vcache
