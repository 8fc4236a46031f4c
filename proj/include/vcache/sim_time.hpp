#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace vcache {

/// Simulation timestamp or duration, stored as integer microseconds.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime micros(std::int64_t us) { return SimTime(us); }

  /// Rounds to the nearest microsecond.
  static SimTime seconds(double s) { return SimTime(std::llround(s * 1e6)); }

  /// Rounds up to the next whole microsecond. Used for frame airtimes so
  /// that a modeled duration is never shorter than the exact one.
  static SimTime seconds_ceil(double s) {
    return SimTime(static_cast<std::int64_t>(std::ceil(s * 1e6 - 1e-9)));
  }

  constexpr std::int64_t us() const { return us_; }
  constexpr double to_seconds() const { return static_cast<double>(us_) / 1e6; }

  constexpr auto operator<=>(const SimTime&) const = default;

  constexpr SimTime operator+(SimTime o) const { return SimTime(us_ + o.us_); }
  constexpr SimTime operator-(SimTime o) const { return SimTime(us_ - o.us_); }
  constexpr SimTime& operator+=(SimTime o) {
    us_ += o.us_;
    return *this;
  }
  constexpr SimTime operator*(std::int64_t k) const { return SimTime(us_ * k); }

 private:
  constexpr explicit SimTime(std::int64_t us) : us_(us) {}
  std::int64_t us_ = 0;
};

/// Decimal seconds with exactly six fractional digits ("12.300000").
std::string format_seconds(SimTime t);

}  // namespace vcache
