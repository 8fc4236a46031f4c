#include "vcache/metrics.hpp"

#include <algorithm>

#include "vcache/errors.hpp"

namespace vcache {

const char* to_string(DeliverySource source) {
  switch (source) {
    case DeliverySource::RsuHit:
      return "rsu-hit";
    case DeliverySource::ServerFetch:
      return "server-fetch";
    case DeliverySource::LocalPrecache:
      return "local-precache";
    case DeliverySource::RelayHit:
      return "relay-hit";
  }
  return "unknown";
}

std::vector<SimTime> sample_times(SimTime interval, SimTime end) {
  if (interval <= SimTime{}) throw ValidationError("sample interval must be positive");
  std::vector<SimTime> times;
  SimTime t;
  for (; t <= end; t += interval) times.push_back(t);
  if (times.back() < end) times.push_back(end);
  return times;
}

namespace {

// Number of timestamps <= t in a sorted vector.
std::uint64_t count_until(const std::vector<SimTime>& sorted, SimTime t) {
  return static_cast<std::uint64_t>(std::upper_bound(sorted.begin(), sorted.end(), t) -
                                    sorted.begin());
}

}  // namespace

MetricsLedger::MetricsLedger(std::size_t rsu_count, bool include_vehicle_caches)
    : include_vehicle_caches_(include_vehicle_caches), rsu_requests_(rsu_count) {}

void MetricsLedger::record_delivery(DeliveryRecord record) {
  if (record.cdt < SimTime{}) throw NegativeCdt("delivery with negative cdt");
  if (record.first_request_at) {
    if (record.delivered_at < *record.first_request_at) {
      throw NegativeCdt("delivery precedes first request");
    }
    if (record.cdt != record.delivered_at - *record.first_request_at) {
      throw NegativeCdt("cdt disagrees with request and delivery times");
    }
  } else if (record.cdt != SimTime{}) {
    throw NegativeCdt("delivery without a request must have zero cdt");
  }
  cdt_sum_us_ += record.cdt.us();
  max_cdt_ = std::max(max_cdt_, record.cdt);
  deliveries_.push_back(std::move(record));
}

void MetricsLedger::record_server_request(SimTime at) { server_requests_.push_back(at); }

void MetricsLedger::record_rsu_request(std::uint32_t rsu, SimTime at) {
  if (rsu >= rsu_requests_.size()) throw UnknownRsu("unknown RSU " + std::to_string(rsu));
  rsu_requests_[rsu].push_back(at);
}

void MetricsLedger::record_cache_lookup(CacheOwner owner, SimTime at, bool hit) {
  lookups_.push_back({at, owner, hit});
}

std::optional<double> MetricsLedger::average_cdt_s() const {
  if (deliveries_.empty()) return std::nullopt;
  return static_cast<double>(cdt_sum_us_) / static_cast<double>(deliveries_.size()) / 1e6;
}

std::vector<CdtPoint> MetricsLedger::avg_cdt_series(SimTime interval, SimTime end) const {
  std::vector<CdtPoint> out;
  std::size_t i = 0;
  std::int64_t sum = 0;
  for (SimTime t : sample_times(interval, end)) {
    while (i < deliveries_.size() && deliveries_[i].delivered_at <= t) {
      sum += deliveries_[i].cdt.us();
      ++i;
    }
    if (i == 0) continue;
    out.push_back({t, static_cast<double>(sum) / static_cast<double>(i) / 1e6, i});
  }
  return out;
}

std::uint64_t MetricsLedger::rsu_requests(std::uint32_t rsu) const {
  if (rsu >= rsu_requests_.size()) throw UnknownRsu("unknown RSU " + std::to_string(rsu));
  return rsu_requests_[rsu].size();
}

std::uint64_t MetricsLedger::total_rsu_requests() const {
  std::uint64_t total = 0;
  for (const auto& r : rsu_requests_) total += r.size();
  return total;
}

std::vector<CountPoint> MetricsLedger::request_count_series(const RequestTarget& target,
                                                            SimTime interval,
                                                            SimTime end) const {
  if (const auto* rsu = std::get_if<RsuTarget>(&target); rsu && rsu->rsu >= rsu_requests_.size()) {
    throw UnknownRsu("unknown RSU " + std::to_string(rsu->rsu));
  }
  std::vector<CountPoint> out;
  for (SimTime t : sample_times(interval, end)) {
    std::uint64_t n = 0;
    if (std::holds_alternative<ServerTarget>(target)) {
      n = count_until(server_requests_, t);
    } else if (const auto* rsu = std::get_if<RsuTarget>(&target)) {
      n = count_until(rsu_requests_[rsu->rsu], t);
    } else {
      for (const auto& r : rsu_requests_) n += count_until(r, t);
    }
    out.push_back({t, n});
  }
  return out;
}

bool MetricsLedger::in_scope(const ChrScope& scope, const CacheOwner& owner) const {
  if (const auto* node = std::get_if<CacheOwner>(&scope)) return *node == owner;
  return owner.kind == CacheOwnerKind::Rsu || include_vehicle_caches_;
}

std::vector<ChrPoint> MetricsLedger::chr_series(const ChrScope& scope, SimTime interval,
                                                SimTime end) const {
  std::vector<ChrPoint> out;
  std::size_t i = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  for (SimTime t : sample_times(interval, end)) {
    for (; i < lookups_.size() && lookups_[i].at <= t; ++i) {
      if (!in_scope(scope, lookups_[i].owner)) continue;
      (lookups_[i].hit ? hits : misses) += 1;
    }
    if (const auto ratio = chr(hits, misses)) out.push_back({t, hits, misses, *ratio});
  }
  return out;
}

}  // namespace vcache
