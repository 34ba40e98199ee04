#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempiso/temporal_graph.hpp"
#include "tempiso/types.hpp"

namespace tempiso {

/// Small directed simple graph without timestamps: the pattern to embed.
class QueryGraph {
 public:
  using Edge = std::pair<NodeId, NodeId>;

  QueryGraph() = default;
  // Throws std::invalid_argument on self-loops, repeated edges or bad ids.
  QueryGraph(std::vector<std::string> labels, std::vector<Edge> edges);
  // Nodes labelled "0".."order-1".
  static QueryGraph from_edges(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const std::string& label(NodeId n) const { return labels_.at(n); }
  std::span<const std::string> labels() const { return labels_; }

  bool has_edge(NodeId p, NodeId q) const { return adjacency_[p * order() + q] != 0; }
  std::span<const NodeId> successors(NodeId p) const { return succ_[p]; }
  std::span<const NodeId> predecessors(NodeId p) const { return pred_[p]; }

  bool is_weakly_connected() const;
  bool is_acyclic() const;
  // Longest shortest path on the undirected view; -1 when disconnected.
  int undirected_diameter() const;

  // Every edge interaction stamped with `time`.
  TemporalGraph as_temporal(Timestamp time = 0) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<char> adjacency_;
  std::vector<std::vector<NodeId>> succ_, pred_;
};

/// Lines `<source> <target>`; a third column is ignored. `#`/`%` comments.
QueryGraph parse_query(std::istream& in);
QueryGraph load_query(const std::string& path);
void write_query(const QueryGraph& q, const std::string& descriptor, std::ostream& out);

}  // namespace tempiso
