#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tempiso {

using NodeId = std::uint32_t;
using InteractionId = std::uint32_t;
using Timestamp = std::int64_t;  // seconds, or abstract ticks
using Duration = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// A directed, timestamped contact (source, target, time).
struct Interaction {
  NodeId source = 0;
  NodeId target = 0;
  Timestamp time = 0;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when a search or extraction exceeds a configured work cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tempiso
