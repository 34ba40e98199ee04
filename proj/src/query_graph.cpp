#include "tempiso/query_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace tempiso {

QueryGraph::QueryGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t k = labels_.size();
  if (k == 0) throw std::invalid_argument("query graph needs at least one node");
  adjacency_.assign(k * k, 0);
  succ_.assign(k, {});
  pred_.assign(k, {});
  for (const auto& [p, q] : edges_) {
    if (p >= k || q >= k) throw std::invalid_argument("query edge references unknown node");
    if (p == q) throw std::invalid_argument("query graph has a self-loop on '" + labels_[p] + "'");
    if (adjacency_[p * k + q]) {
      throw std::invalid_argument("query graph repeats edge " + labels_[p] + "->" + labels_[q]);
    }
    adjacency_[p * k + q] = 1;
    succ_[p].push_back(q);
    pred_[q].push_back(p);
  }
  for (auto& s : succ_) std::sort(s.begin(), s.end());
  for (auto& p : pred_) std::sort(p.begin(), p.end());
}

QueryGraph QueryGraph::from_edges(std::size_t order, std::vector<Edge> edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  return QueryGraph(std::move(labels), std::move(edges));
}

bool QueryGraph::is_weakly_connected() const {
  const std::size_t k = order();
  std::vector<char> seen(k, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId p = stack.back();
    stack.pop_back();
    for (auto list : {std::span<const NodeId>(succ_[p]), std::span<const NodeId>(pred_[p])}) {
      for (NodeId q : list) {
        if (!seen[q]) {
          seen[q] = 1;
          ++reached;
          stack.push_back(q);
        }
      }
    }
  }
  return reached == k;
}

bool QueryGraph::is_acyclic() const {
  const std::size_t k = order();
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t p = 0; p < k; ++p) indeg[p] = pred_[p].size();
  std::vector<NodeId> ready;
  for (NodeId p = 0; p < k; ++p) {
    if (indeg[p] == 0) ready.push_back(p);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const NodeId p = ready.back();
    ready.pop_back();
    ++removed;
    for (NodeId q : succ_[p]) {
      if (--indeg[q] == 0) ready.push_back(q);
    }
  }
  return removed == k;
}

int QueryGraph::undirected_diameter() const {
  const std::size_t k = order();
  int diameter = 0;
  for (NodeId s = 0; s < k; ++s) {
    std::vector<int> dist(k, -1);
    std::queue<NodeId> frontier;
    dist[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const NodeId p = frontier.front();
      frontier.pop();
      for (auto list : {std::span<const NodeId>(succ_[p]), std::span<const NodeId>(pred_[p])}) {
        for (NodeId q : list) {
          if (dist[q] < 0) {
            dist[q] = dist[p] + 1;
            frontier.push(q);
          }
        }
      }
    }
    for (int x : dist) {
      if (x < 0) return -1;
      diameter = std::max(diameter, x);
    }
  }
  return diameter;
}

TemporalGraph QueryGraph::as_temporal(Timestamp time) const {
  TemporalGraph::Builder b;
  for (const auto& l : labels_) b.add_node(l);
  for (const auto& [p, q] : edges_) b.add_interaction(p, q, time);
  return std::move(b).build();
}

QueryGraph parse_query(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<QueryGraph::Edge> edges;
  auto id_of = [&](const std::string& l) {
    auto [it, inserted] = ids.try_emplace(l, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(l);
    return it->second;
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, rest;
    if (!(fields >> a)) continue;
    if (a.front() == '#' || a.front() == '%') continue;
    if (!(fields >> b)) throw ParseError(line_no, "expected '<source> <target>'");
    fields >> rest;  // optional time column, ignored
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "too many fields in query edge");
    if (a == b) throw ParseError(line_no, "self-loop on query node '" + a + "'");
    const NodeId p = id_of(a);
    const NodeId q = id_of(b);
    edges.emplace_back(p, q);
  }
  if (labels.empty()) throw ParseError(line_no, "query graph has no edges");
  try {
    return QueryGraph(std::move(labels), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

QueryGraph load_query(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_query(in);
}

void write_query(const QueryGraph& q, const std::string& descriptor, std::ostream& out) {
  out << "# " << descriptor << '\n';
  for (const auto& [a, b] : q.edges()) out << q.label(a) << ' ' << q.label(b) << '\n';
}

}  // namespace tempiso
