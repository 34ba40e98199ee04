#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "tempiso/engine.hpp"
#include "tempiso/temporal_graph.hpp"

namespace fixtures {

using tempiso::TemporalGraph;

inline TemporalGraph graph(const std::vector<std::tuple<std::string, std::string, tempiso::Timestamp>>& xs) {
  TemporalGraph::Builder b;
  for (const auto& [s, t, time] : xs) b.add_interaction(s, t, time);
  return std::move(b).build();
}

// Two feed-forward triangles sharing node 3, each internally consistent at
// d = 4, plus a third triangle whose 5->6 interaction comes too late, and an
// early 8->3 that conflicts with the second triangle. The last one splits the
// region around node 3 into two overlapping maximal subgraphs that both hold
// the first triangle.
inline TemporalGraph two_regions() {
  return graph({{"1", "2", 1},
                {"1", "3", 2},
                {"2", "3", 3},
                {"3", "4", 5},
                {"3", "5", 6},
                {"4", "5", 7},
                {"5", "6", 20},
                {"5", "7", 8},
                {"6", "7", 9},
                {"8", "3", 0}});
}

inline TemporalGraph chain(std::size_t nodes, tempiso::Timestamp gap) {
  TemporalGraph::Builder b;
  for (std::size_t i = 0; i + 1 < nodes; ++i) {
    b.add_interaction(std::to_string(i), std::to_string(i + 1), static_cast<tempiso::Timestamp>(i) * gap);
  }
  return std::move(b).build();
}

inline std::vector<std::vector<tempiso::NodeId>> mappings(const std::vector<tempiso::Embedding>& es) {
  std::vector<std::vector<tempiso::NodeId>> out;
  for (const auto& e : es) out.push_back(e.mapping);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
