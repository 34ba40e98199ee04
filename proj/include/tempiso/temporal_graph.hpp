#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tempiso/types.hpp"

namespace tempiso {

enum class TimeUnit { Seconds, Days, Years, Ticks };

inline constexpr Duration kSecondsPerDay = 86400;
inline constexpr Duration kSecondsPerYear = 31536000;

Duration seconds_per(TimeUnit unit);
TimeUnit parse_time_unit(std::string_view name);

/// Directed temporal multigraph.
///
/// Nodes are dense ids `0..order()-1`, each carrying the string label it was
/// ingested with. Interactions keep their ingest order; the per-node in/out
/// indices are sorted by time with ties in ingest order. Immutable once built.
class TemporalGraph {
 public:
  struct Incidence {
    NodeId neighbor;
    Timestamp time;
    InteractionId id;
  };

  // All interactions of one ordered node pair, as a slice of pair_ids_/pair_times_.
  struct NeighborRun {
    NodeId neighbor;
    std::uint32_t offset;
    std::uint32_t count;
  };

  class Builder {
   public:
    NodeId add_node(std::string_view label);
    // Rejects self-loops with std::invalid_argument.
    void add_interaction(NodeId source, NodeId target, Timestamp time);
    void add_interaction(std::string_view source, std::string_view target, Timestamp time);
    std::size_t order() const { return labels_.size(); }
    TemporalGraph build() &&;

   private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<Interaction> interactions_;
  };

  TemporalGraph() = default;

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return interactions_.size(); }
  bool empty() const { return interactions_.empty(); }

  std::span<const Interaction> interactions() const { return interactions_; }
  const Interaction& interaction(InteractionId id) const { return interactions_[id]; }

  const std::string& label(NodeId n) const { return labels_.at(n); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  std::span<const Incidence> out_index(NodeId n) const;
  std::span<const Incidence> in_index(NodeId n) const;

  // Distinct neighbors, ascending by id.
  std::span<const NeighborRun> successors(NodeId n) const;
  std::span<const NeighborRun> predecessors(NodeId n) const;

  // Interactions u->v, ordered by time. Unchecked node ids.
  std::span<const InteractionId> pair_ids(NodeId u, NodeId v) const;
  std::span<const Timestamp> pair_times(NodeId u, NodeId v) const;
  std::uint32_t count(NodeId u, NodeId v) const;

  // Number of interactions u->v; throws std::out_of_range on unknown nodes.
  std::size_t induced_count(NodeId u, NodeId v) const;

  std::optional<Timestamp> min_time() const;
  std::optional<Timestamp> max_time() const;

  // Graph over the given interactions only; nodes are the endpoints, renumbered
  // in first-appearance order. `node_map`, when given, receives new -> old ids.
  TemporalGraph subgraph(std::span<const InteractionId> ids,
                         std::vector<NodeId>* node_map = nullptr) const;

 private:
  const NeighborRun* find_run(NodeId u, NodeId v) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<Interaction> interactions_;

  std::vector<std::uint32_t> out_offsets_, in_offsets_;
  std::vector<Incidence> out_, in_;

  std::vector<std::uint32_t> succ_offsets_, pred_offsets_;
  std::vector<NeighborRun> succ_, pred_;
  std::vector<InteractionId> pair_ids_;
  std::vector<Timestamp> pair_times_;
};

/// Reads `<source> <target> <time>` lines. `#` and `%` start comment lines.
/// A four-column KONECT line `<source> <target> <weight> <time>` is also
/// accepted; the weight is ignored. Times are converted to seconds.
TemporalGraph parse_edge_list(std::istream& in, TimeUnit unit = TimeUnit::Seconds);
TemporalGraph parse_edge_list(std::string_view text, TimeUnit unit = TimeUnit::Seconds);
TemporalGraph load_edge_list(const std::string& path, TimeUnit unit = TimeUnit::Seconds);

/// One line per interaction in ingest order, times in seconds.
void write_edge_list(const TemporalGraph& g, std::ostream& out);

/// Interactions with start <= time < end.
TemporalGraph slice(const TemporalGraph& g, Timestamp start, Timestamp end);

/// Largest end such that slice(g, start, end) holds at most `cap` interactions.
/// Returns max_time()+1 when everything from `start` on fits.
Timestamp capped_window_end(const TemporalGraph& g, Timestamp start, std::size_t cap);

}  // namespace tempiso
