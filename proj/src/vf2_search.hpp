#pragma once

// Iterative VF2 state-space search for induced subgraph isomorphism on
// directed multigraphs, with an optional temporal feasibility test applied
// after the syntactic one.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tempiso/constraints.hpp"
#include "tempiso/engine.hpp"

namespace tempiso::detail {

// When set, pair counts must also agree with a larger graph that `host` was
// cut from (`to_full` maps host ids to ids in `full`).
struct CrossCheck {
  const TemporalGraph* full = nullptr;
  std::span<const NodeId> to_full;
};

class Vf2Search {
 public:
  Vf2Search(const TemporalGraph& host, const QueryGraph& query, std::optional<Threshold> temporal,
            CrossCheck cross, std::optional<std::chrono::steady_clock::time_point> deadline)
      : host_(host), query_(query), temporal_(temporal), cross_(cross), deadline_(deadline) {
    const std::size_t n = host.order();
    const std::size_t k = query.order();
    core1_.assign(n, kNoNode);
    core2_.assign(k, kNoNode);
    in1_.assign(n, 0);
    out1_.assign(n, 0);
    in2_.assign(k, 0);
    out2_.assign(k, 0);
    frames_.resize(k + 1);
  }

  // Calls on_match(span of host nodes indexed by query node) for every
  // complete mapping, in search order. Returns false if the deadline passed.
  template <class OnMatch>
  bool run(OnMatch&& on_match, SearchStats& stats) {
    const std::size_t k = query_.order();
    if (k > host_.order()) return true;
    top_ = 0;
    push_frame();
    std::uint64_t ticks = 0;
    while (top_ > 0) {
      Frame& f = frames_[top_ - 1];
      if (f.added) {
        remove_pair(f);
        f.added = false;
      }
      if (f.next == f.candidates.size()) {
        --top_;
        continue;
      }
      if ((++ticks & 0x3FF) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) {
        return false;
      }
      const NodeId n = f.candidates[f.next++];
      if (!syntactic_feasible(n, f)) continue;
      if (temporal_ && !temporal_feasible(n, f.query_node)) continue;
      add_pair(n, f);
      ++stats.states_expanded;
      if (depth_ == k) {
        on_match(std::span<const NodeId>(core2_));
        continue;
      }
      push_frame();
    }
    return true;
  }

 private:
  struct Frame {
    NodeId query_node = kNoNode;
    std::vector<NodeId> candidates;
    std::size_t next = 0;
    bool added = false;
    NodeId current = kNoNode;
    std::size_t touched_in_mark = 0;
    std::size_t touched_out_mark = 0;
    // Look-ahead counts of query_node: pred in T_in, pred in T_out, pred new,
    // succ in T_in, succ in T_out, succ new.
    std::array<std::uint32_t, 6> query_terminal{};
  };

  static constexpr std::uint32_t kMismatch = 0xFFFFFFFFu;

  std::uint32_t pair_count(NodeId u, NodeId v) const {
    const std::uint32_t c = host_.count(u, v);
    if (cross_.full != nullptr && c != cross_.full->count(cross_.to_full[u], cross_.to_full[v])) {
      return kMismatch;
    }
    return c;
  }

  void push_frame() {
    Frame& f = frames_[top_++];
    f.candidates.clear();
    f.next = 0;
    f.added = false;
    const std::size_t k = query_.order();

    NodeId q_out = kNoNode, q_in = kNoNode, q_free = kNoNode;
    for (NodeId q = 0; q < k; ++q) {
      if (core2_[q] != kNoNode) continue;
      if (out2_[q] != 0 && q_out == kNoNode) q_out = q;
      if (in2_[q] != 0 && q_in == kNoNode) q_in = q;
      if (q_free == kNoNode) q_free = q;
    }
    if (q_out != kNoNode) {
      f.query_node = q_out;
      for (NodeId x : touched_out1_) {
        if (core1_[x] == kNoNode) f.candidates.push_back(x);
      }
    } else if (q_in != kNoNode) {
      f.query_node = q_in;
      for (NodeId x : touched_in1_) {
        if (core1_[x] == kNoNode) f.candidates.push_back(x);
      }
    } else {
      f.query_node = q_free;
      for (NodeId x = 0; x < host_.order(); ++x) {
        if (core1_[x] == kNoNode) f.candidates.push_back(x);
      }
    }
    std::sort(f.candidates.begin(), f.candidates.end());

    const NodeId q = f.query_node;
    f.query_terminal = {};
    for (NodeId p : query_.predecessors(q)) {
      if (core2_[p] != kNoNode) continue;
      if (in2_[p] != 0) ++f.query_terminal[0];
      if (out2_[p] != 0) ++f.query_terminal[1];
      if (in2_[p] == 0 && out2_[p] == 0) ++f.query_terminal[2];
    }
    for (NodeId p : query_.successors(q)) {
      if (core2_[p] != kNoNode) continue;
      if (in2_[p] != 0) ++f.query_terminal[3];
      if (out2_[p] != 0) ++f.query_terminal[4];
      if (in2_[p] == 0 && out2_[p] == 0) ++f.query_terminal[5];
    }
  }

  bool syntactic_feasible(NodeId n, const Frame& f) const {
    const NodeId q = f.query_node;
    for (NodeId p : mapped_) {
      const NodeId m = core2_[p];
      if (pair_count(m, n) != static_cast<std::uint32_t>(query_.has_edge(p, q))) return false;
      if (pair_count(n, m) != static_cast<std::uint32_t>(query_.has_edge(q, p))) return false;
    }

    std::array<std::uint32_t, 6> c{};
    for (const auto& run : host_.predecessors(n)) {
      const NodeId x = run.neighbor;
      if (core1_[x] != kNoNode) continue;
      if (in1_[x] != 0) ++c[0];
      if (out1_[x] != 0) ++c[1];
      if (in1_[x] == 0 && out1_[x] == 0) ++c[2];
    }
    for (const auto& run : host_.successors(n)) {
      const NodeId x = run.neighbor;
      if (core1_[x] != kNoNode) continue;
      if (in1_[x] != 0) ++c[3];
      if (out1_[x] != 0) ++c[4];
      if (in1_[x] == 0 && out1_[x] == 0) ++c[5];
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < f.query_terminal[i]) return false;
    }
    return true;
  }

  NodeId image(NodeId query_node, NodeId pending_query, NodeId pending_host) const {
    return query_node == pending_query ? pending_host : core2_[query_node];
  }

  // Incident embedding dates at host node `m` (mapped or pending as
  // `pending_host` for `pending_query`), checked with both per-node tests.
  bool node_ok(NodeId m, NodeId qm, NodeId pending_query, NodeId pending_host) {
    pred_dates_.clear();
    succ_dates_.clear();
    for (NodeId r : query_.predecessors(qm)) {
      const NodeId x = image(r, pending_query, pending_host);
      if (x != kNoNode) pred_dates_.push_back(host_.pair_times(x, m).front());
    }
    for (NodeId r : query_.successors(qm)) {
      const NodeId x = image(r, pending_query, pending_host);
      if (x != kNoNode) succ_dates_.push_back(host_.pair_times(m, x).front());
    }
    std::sort(pred_dates_.begin(), pred_dates_.end());
    std::sort(succ_dates_.begin(), succ_dates_.end());
    dates_.resize(pred_dates_.size() + succ_dates_.size());
    std::merge(pred_dates_.begin(), pred_dates_.end(), succ_dates_.begin(), succ_dates_.end(),
               dates_.begin());
    return node_window_ok(dates_, *temporal_) && node_precedence_ok(pred_dates_, succ_dates_);
  }

  bool temporal_feasible(NodeId n, NodeId q) {
    if (!node_ok(n, q, q, n)) return false;
    // The new interactions also land on already-mapped neighbours.
    for (NodeId p : query_.predecessors(q)) {
      if (core2_[p] != kNoNode && !node_ok(core2_[p], p, q, n)) return false;
    }
    for (NodeId p : query_.successors(q)) {
      if (core2_[p] != kNoNode && !node_ok(core2_[p], p, q, n)) return false;
    }
    return true;
  }

  void mark(std::vector<std::uint32_t>& marks, std::vector<NodeId>& touched, NodeId x) {
    if (marks[x] == 0) {
      marks[x] = static_cast<std::uint32_t>(depth_);
      touched.push_back(x);
    }
  }

  void add_pair(NodeId n, Frame& f) {
    const NodeId q = f.query_node;
    ++depth_;
    core1_[n] = q;
    core2_[q] = n;
    mapped_.push_back(q);
    f.current = n;
    f.added = true;
    f.touched_in_mark = touched_in1_.size();
    f.touched_out_mark = touched_out1_.size();

    mark(in1_, touched_in1_, n);
    mark(out1_, touched_out1_, n);
    for (const auto& run : host_.predecessors(n)) mark(in1_, touched_in1_, run.neighbor);
    for (const auto& run : host_.successors(n)) mark(out1_, touched_out1_, run.neighbor);

    const auto depth = static_cast<std::uint32_t>(depth_);
    if (in2_[q] == 0) in2_[q] = depth;
    if (out2_[q] == 0) out2_[q] = depth;
    for (NodeId p : query_.predecessors(q)) {
      if (in2_[p] == 0) in2_[p] = depth;
    }
    for (NodeId p : query_.successors(q)) {
      if (out2_[p] == 0) out2_[p] = depth;
    }
  }

  void remove_pair(const Frame& f) {
    for (std::size_t i = f.touched_in_mark; i < touched_in1_.size(); ++i) in1_[touched_in1_[i]] = 0;
    touched_in1_.resize(f.touched_in_mark);
    for (std::size_t i = f.touched_out_mark; i < touched_out1_.size(); ++i) out1_[touched_out1_[i]] = 0;
    touched_out1_.resize(f.touched_out_mark);

    const auto depth = static_cast<std::uint32_t>(depth_);
    for (std::size_t p = 0; p < query_.order(); ++p) {
      if (in2_[p] == depth) in2_[p] = 0;
      if (out2_[p] == depth) out2_[p] = 0;
    }
    core1_[f.current] = kNoNode;
    core2_[f.query_node] = kNoNode;
    mapped_.pop_back();
    --depth_;
  }

  const TemporalGraph& host_;
  const QueryGraph& query_;
  std::optional<Threshold> temporal_;
  CrossCheck cross_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  std::vector<NodeId> core1_;  // host -> query
  std::vector<NodeId> core2_;  // query -> host
  std::vector<std::uint32_t> in1_, out1_, in2_, out2_;
  std::vector<NodeId> touched_in1_, touched_out1_;
  std::vector<NodeId> mapped_;  // query nodes in mapping order
  std::size_t depth_ = 0;

  std::vector<Frame> frames_;
  std::size_t top_ = 0;

  std::vector<Timestamp> pred_dates_, succ_dates_, dates_;
};

}  // namespace tempiso::detail
