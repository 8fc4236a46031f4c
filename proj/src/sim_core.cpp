#include <cstdio>
#include <cstdlib>
#include <limits>

#include "vcache/errors.hpp"
#include "vcache/event_queue.hpp"
#include "vcache/random.hpp"
#include "vcache/sim_time.hpp"

namespace vcache {

std::string format_seconds(SimTime t) {
  std::int64_t us = t.us();
  const char* sign = "";
  if (us < 0) {
    sign = "-";
    us = -us;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%06lld", sign, static_cast<long long>(us / 1000000),
                static_cast<long long>(us % 1000000));
  return buf;
}

EventId EventQueue::schedule(SimTime at, Action action) {
  if (at < now_) {
    throw SchedulingInPast("event at " + format_seconds(at) + " precedes clock " +
                           format_seconds(now_));
  }
  EventId id{at, next_seq_++};
  heap_.push(Entry{id, std::move(action)});
  return id;
}

std::size_t EventQueue::run_until(SimTime horizon) {
  std::size_t processed = 0;
  while (!heap_.empty() && heap_.top().id.at <= horizon) {
    // Moving out of the top element is safe: it is popped before the
    // handler can push anything.
    Entry entry = std::move(const_cast<Entry&>(heap_.top()));
    heap_.pop();
    now_ = entry.id.at;
    entry.action();
    ++processed;
  }
  return processed;
}

std::optional<EventId> EventQueue::peek() const {
  if (heap_.empty()) return std::nullopt;
  return heap_.top().id;
}

std::uint64_t RandomSource::uniform_draw(std::uint64_t n) {
  if (n == 0) throw ZeroRange("uniform_draw over an empty range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = kMax - (kMax % n + 1) % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % n;
}

}  // namespace vcache
