#pragma once

#include <compare>
#include <span>
#include <string>

#include "tempiso/types.hpp"

namespace tempiso {

/// Maximum allowed delay between adjacent interactions, or Infinite.
class Threshold {
 public:
  static constexpr Threshold infinite() { return Threshold(); }
  static Threshold finite(Duration d) {
    if (d < 0) throw std::invalid_argument("threshold must be non-negative");
    return Threshold(d);
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Finite value in seconds; throws for Infinite.
  Duration value() const {
    if (infinite_) throw std::logic_error("infinite threshold has no finite value");
    return d_;
  }
  constexpr bool admits(Duration gap) const { return infinite_ || gap <= d_; }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(d_); }

  friend constexpr bool operator==(const Threshold&, const Threshold&) = default;
  friend constexpr std::strong_ordering operator<=>(const Threshold& a, const Threshold& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.d_ <=> b.d_;
  }

 private:
  constexpr Threshold() = default;
  constexpr explicit Threshold(Duration d) : infinite_(false), d_(d) {}

  bool infinite_ = true;
  Duration d_ = 0;
};

/// Pairwise relation between two adjacent interactions. Head-to-tail pairs
/// require the flow order; pairs meeting head-to-tail in both directions
/// (a->b, b->a) must satisfy both orderings. Throws std::invalid_argument when
/// the interactions share no endpoint.
bool pair_time_respecting(const Interaction& first, const Interaction& second, Threshold d);

/// Times incident to one node, ascending: last - first <= d.
bool node_window_ok(std::span<const Timestamp> incident_times, Threshold d);

/// Every incoming time precedes (or equals) every outgoing time.
bool node_precedence_ok(std::span<const Timestamp> in_times, std::span<const Timestamp> out_times);

/// Per-node window and precedence over the interactions of `sub`.
bool embedding_time_respecting(std::span<const Interaction> sub, Threshold d);

}  // namespace tempiso
