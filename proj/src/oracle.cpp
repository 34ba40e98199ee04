#include "tempiso/oracle.hpp"

#include <string>

namespace tempiso {

bool embedding_time_respecting_pairwise(std::span<const Interaction> sub, Threshold d) {
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      const auto& a = sub[i];
      const auto& b = sub[j];
      const bool adjacent = a.source == b.source || a.source == b.target || a.target == b.source ||
                            a.target == b.target;
      if (adjacent && !pair_time_respecting(a, b, d)) return false;
    }
  }
  return true;
}

std::vector<Embedding> enumerate_bruteforce(const TemporalGraph& host, const QueryGraph& query,
                                            Threshold d, std::size_t max_order) {
  const std::size_t n = host.order();
  const std::size_t k = query.order();
  if (n > max_order) {
    throw std::invalid_argument("brute-force oracle refuses hosts above " +
                                std::to_string(max_order) + " nodes");
  }
  std::vector<Embedding> out;
  if (k > n || k == 0) return out;

  std::vector<std::uint32_t> counts(n * n, 0);
  for (const auto& e : host.interactions()) ++counts[e.source * n + e.target];

  std::vector<NodeId> mapping(k, 0);
  std::vector<char> used(n, 0);
  std::vector<Interaction> induced;

  // Odometer over injections; a prefix is abandoned as soon as a pair count
  // disagrees with the query, which skips exactly the injections it would fail.
  std::size_t depth = 0;
  mapping[0] = 0;
  while (true) {
    if (mapping[depth] >= n) {
      if (depth == 0) break;
      --depth;
      used[mapping[depth]] = 0;
      ++mapping[depth];
      continue;
    }
    const NodeId x = mapping[depth];
    bool ok = !used[x];
    for (std::size_t p = 0; ok && p < depth; ++p) {
      const NodeId y = mapping[p];
      ok = counts[y * n + x] == static_cast<std::uint32_t>(query.has_edge(p, depth)) &&
           counts[x * n + y] == static_cast<std::uint32_t>(query.has_edge(depth, p));
    }
    if (!ok) {
      ++mapping[depth];
      continue;
    }
    if (depth + 1 == k) {
      induced.clear();
      for (const auto& e : host.interactions()) {
        bool src = false, dst = false;
        for (NodeId m : mapping) {
          src = src || m == e.source;
          dst = dst || m == e.target;
        }
        if (src && dst) induced.push_back(e);
      }
      if (embedding_time_respecting_pairwise(induced, d)) {
        Embedding emb;
        emb.mapping = mapping;
        for (InteractionId id = 0; id < host.size(); ++id) {
          const auto& e = host.interaction(id);
          bool src = false, dst = false;
          for (NodeId m : mapping) {
            src = src || m == e.source;
            dst = dst || m == e.target;
          }
          if (src && dst) emb.induced.push_back(id);
        }
        out.push_back(std::move(emb));
      }
      ++mapping[depth];
      continue;
    }
    used[x] = 1;
    ++depth;
    mapping[depth] = 0;
  }
  return out;
}

}  // namespace tempiso
