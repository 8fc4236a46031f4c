#pragma once

#include <stdexcept>
#include <string>

namespace vcache {

// Base class for every error raised by the simulator library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchedulingInPast : public Error {
 public:
  using Error::Error;
};

class ZeroRange : public Error {
 public:
  using Error::Error;
};

class EmptyRoadList : public Error {
 public:
  using Error::Error;
};

class UnknownVehicle : public Error {
 public:
  using Error::Error;
};

class NoBackhaul : public Error {
 public:
  using Error::Error;
};

class MalformedName : public Error {
 public:
  using Error::Error;
};

class UnknownContent : public Error {
 public:
  using Error::Error;
};

class OrphanResponse : public Error {
 public:
  using Error::Error;
};

class NegativeCdt : public Error {
 public:
  using Error::Error;
};

class UnknownRsu : public Error {
 public:
  using Error::Error;
};

/// Malformed config text. Carries the offending line (1-based, 0 if not
/// tied to a line) and field name.
class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vcache
