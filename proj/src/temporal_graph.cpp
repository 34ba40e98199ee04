#include "tempiso/temporal_graph.hpp"

#include <algorithm>
#include <numeric>

namespace tempiso {

Duration seconds_per(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::Days:
      return kSecondsPerDay;
    case TimeUnit::Years:
      return kSecondsPerYear;
    case TimeUnit::Seconds:
    case TimeUnit::Ticks:
      break;
  }
  return 1;
}

TimeUnit parse_time_unit(std::string_view name) {
  if (name == "seconds" || name == "s") return TimeUnit::Seconds;
  if (name == "days" || name == "d") return TimeUnit::Days;
  if (name == "years" || name == "y") return TimeUnit::Years;
  if (name == "ticks") return TimeUnit::Ticks;
  throw std::invalid_argument("unknown time unit '" + std::string(name) + "'");
}

NodeId TemporalGraph::Builder::add_node(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void TemporalGraph::Builder::add_interaction(NodeId source, NodeId target, Timestamp time) {
  if (source >= labels_.size() || target >= labels_.size()) {
    throw std::out_of_range("interaction endpoint is not a node of this builder");
  }
  if (source == target) {
    throw std::invalid_argument("self-loop on node '" + labels_[source] + "'");
  }
  interactions_.push_back({source, target, time});
}

void TemporalGraph::Builder::add_interaction(std::string_view source, std::string_view target,
                                             Timestamp time) {
  if (source == target) {
    throw std::invalid_argument("self-loop on node '" + std::string(source) + "'");
  }
  const NodeId s = add_node(source);
  const NodeId t = add_node(target);
  interactions_.push_back({s, t, time});
}

TemporalGraph TemporalGraph::Builder::build() && {
  TemporalGraph g;
  g.labels_ = std::move(labels_);
  g.ids_ = std::move(ids_);
  g.interactions_ = std::move(interactions_);

  const std::size_t n = g.labels_.size();
  const auto& es = g.interactions_;

  // Stable time order; ties keep ingest order.
  std::vector<InteractionId> by_time(es.size());
  std::iota(by_time.begin(), by_time.end(), InteractionId{0});
  std::stable_sort(by_time.begin(), by_time.end(),
                   [&](InteractionId a, InteractionId b) { return es[a].time < es[b].time; });

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const auto& e : es) {
    ++g.out_offsets_[e.source + 1];
    ++g.in_offsets_[e.target + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());
  g.out_.resize(es.size());
  g.in_.resize(es.size());
  {
    std::vector<std::uint32_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (InteractionId id : by_time) {
      const auto& e = es[id];
      g.out_[out_fill[e.source]++] = {e.target, e.time, id};
      g.in_[in_fill[e.target]++] = {e.source, e.time, id};
    }
  }

  // Pair runs: for each source, group its time-sorted out-index by neighbor.
  g.succ_offsets_.assign(n + 1, 0);
  g.pair_ids_.reserve(es.size());
  g.pair_times_.reserve(es.size());
  std::vector<Incidence> scratch;
  for (NodeId u = 0; u < n; ++u) {
    auto outs = g.out_index(u);
    scratch.assign(outs.begin(), outs.end());
    std::stable_sort(scratch.begin(), scratch.end(),
                     [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    for (std::size_t i = 0; i < scratch.size();) {
      std::size_t j = i;
      const auto offset = static_cast<std::uint32_t>(g.pair_ids_.size());
      while (j < scratch.size() && scratch[j].neighbor == scratch[i].neighbor) {
        g.pair_ids_.push_back(scratch[j].id);
        g.pair_times_.push_back(scratch[j].time);
        ++j;
      }
      g.succ_.push_back({scratch[i].neighbor, offset, static_cast<std::uint32_t>(j - i)});
      i = j;
    }
    g.succ_offsets_[u + 1] = static_cast<std::uint32_t>(g.succ_.size());
  }

  // Predecessor runs alias the successor runs of the opposite endpoint.
  g.pred_offsets_.assign(n + 1, 0);
  for (const auto& run : g.succ_) ++g.pred_offsets_[run.neighbor + 1];
  std::partial_sum(g.pred_offsets_.begin(), g.pred_offsets_.end(), g.pred_offsets_.begin());
  g.pred_.resize(g.succ_.size());
  {
    std::vector<std::uint32_t> fill(g.pred_offsets_.begin(), g.pred_offsets_.end() - 1);
    for (NodeId u = 0; u < n; ++u) {
      for (const auto& run : g.successors(u)) {
        g.pred_[fill[run.neighbor]++] = {u, run.offset, run.count};
      }
    }
  }
  return g;
}

std::optional<NodeId> TemporalGraph::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::span<const TemporalGraph::Incidence> TemporalGraph::out_index(NodeId n) const {
  return {out_.data() + out_offsets_[n], out_offsets_[n + 1] - out_offsets_[n]};
}

std::span<const TemporalGraph::Incidence> TemporalGraph::in_index(NodeId n) const {
  return {in_.data() + in_offsets_[n], in_offsets_[n + 1] - in_offsets_[n]};
}

std::span<const TemporalGraph::NeighborRun> TemporalGraph::successors(NodeId n) const {
  return {succ_.data() + succ_offsets_[n], succ_offsets_[n + 1] - succ_offsets_[n]};
}

std::span<const TemporalGraph::NeighborRun> TemporalGraph::predecessors(NodeId n) const {
  return {pred_.data() + pred_offsets_[n], pred_offsets_[n + 1] - pred_offsets_[n]};
}

const TemporalGraph::NeighborRun* TemporalGraph::find_run(NodeId u, NodeId v) const {
  auto runs = successors(u);
  auto it = std::lower_bound(runs.begin(), runs.end(), v,
                             [](const NeighborRun& r, NodeId x) { return r.neighbor < x; });
  if (it == runs.end() || it->neighbor != v) return nullptr;
  return &*it;
}

std::span<const InteractionId> TemporalGraph::pair_ids(NodeId u, NodeId v) const {
  const NeighborRun* run = find_run(u, v);
  if (run == nullptr) return {};
  return {pair_ids_.data() + run->offset, run->count};
}

std::span<const Timestamp> TemporalGraph::pair_times(NodeId u, NodeId v) const {
  const NeighborRun* run = find_run(u, v);
  if (run == nullptr) return {};
  return {pair_times_.data() + run->offset, run->count};
}

std::uint32_t TemporalGraph::count(NodeId u, NodeId v) const {
  const NeighborRun* run = find_run(u, v);
  return run == nullptr ? 0 : run->count;
}

std::size_t TemporalGraph::induced_count(NodeId u, NodeId v) const {
  if (u >= order() || v >= order()) throw std::out_of_range("unknown node id");
  return count(u, v);
}

std::optional<Timestamp> TemporalGraph::min_time() const {
  if (interactions_.empty()) return std::nullopt;
  return std::min_element(interactions_.begin(), interactions_.end(),
                          [](const auto& a, const auto& b) { return a.time < b.time; })
      ->time;
}

std::optional<Timestamp> TemporalGraph::max_time() const {
  if (interactions_.empty()) return std::nullopt;
  return std::max_element(interactions_.begin(), interactions_.end(),
                          [](const auto& a, const auto& b) { return a.time < b.time; })
      ->time;
}

TemporalGraph TemporalGraph::subgraph(std::span<const InteractionId> ids,
                                      std::vector<NodeId>* node_map) const {
  Builder b;
  std::vector<NodeId> local(order(), kNoNode);
  if (node_map != nullptr) node_map->clear();
  auto local_id = [&](NodeId n) {
    if (local[n] == kNoNode) {
      local[n] = b.add_node(labels_[n]);
      if (node_map != nullptr) node_map->push_back(n);
    }
    return local[n];
  };
  for (InteractionId id : ids) {
    const auto& e = interactions_.at(id);
    const NodeId s = local_id(e.source);
    const NodeId t = local_id(e.target);
    b.add_interaction(s, t, e.time);
  }
  return std::move(b).build();
}

TemporalGraph slice(const TemporalGraph& g, Timestamp start, Timestamp end) {
  if (start > end) throw std::invalid_argument("slice: start is after end");
  std::vector<InteractionId> keep;
  for (InteractionId id = 0; id < g.size(); ++id) {
    const Timestamp t = g.interaction(id).time;
    if (start <= t && t < end) keep.push_back(id);
  }
  return g.subgraph(keep);
}

Timestamp capped_window_end(const TemporalGraph& g, Timestamp start, std::size_t cap) {
  std::vector<Timestamp> times;
  for (const auto& e : g.interactions()) {
    if (e.time >= start) times.push_back(e.time);
  }
  if (times.empty()) return start;
  std::sort(times.begin(), times.end());
  if (times.size() <= cap) return times.back() + 1;
  // Cutting at the (cap+1)-th time excludes it and every tie with it.
  return times[cap];
}

}  // namespace tempiso
