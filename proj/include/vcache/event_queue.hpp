#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "vcache/sim_time.hpp"

namespace vcache {

struct EventId {
  SimTime at;
  std::uint64_t seq = 0;

  auto operator<=>(const EventId&) const = default;
};

/// Ordered event queue with a virtual clock.
///
/// Events are keyed by (timestamp, insertion sequence); equal timestamps
/// run in the order they were scheduled. Handlers may schedule further
/// events, including at the current instant.
class EventQueue {
 public:
  using Action = std::function<void()>;

  /// Throws SchedulingInPast if `at` precedes the clock.
  EventId schedule(SimTime at, Action action);

  /// Processes every event with timestamp <= horizon. The clock is left at
  /// the last processed event time. Returns the number processed.
  std::size_t run_until(SimTime horizon);

  SimTime now() const { return now_; }
  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }
  std::optional<EventId> peek() const;

 private:
  struct Entry {
    EventId id;
    Action action;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const { return a.id > b.id; }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  SimTime now_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace vcache
