#include "tempiso/jsonl.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "json.hpp"

namespace tempiso {

std::string embedding_json(const TemporalGraph& host, const QueryGraph& query, const std::string& query_id,
                           const Embedding& embedding) {
  nlohmann::ordered_json j;
  j["query"] = query_id;
  nlohmann::ordered_json mapping = nlohmann::ordered_json::object();
  for (std::size_t p = 0; p < embedding.mapping.size(); ++p) {
    mapping[query.label(static_cast<NodeId>(p))] = host.label(embedding.mapping[p]);
  }
  j["mapping"] = std::move(mapping);

  std::vector<Interaction> es;
  for (InteractionId id : embedding.induced) es.push_back(host.interaction(id));
  std::sort(es.begin(), es.end(), [&](const Interaction& a, const Interaction& b) {
    return std::forward_as_tuple(a.time, host.label(a.source), host.label(a.target)) <
           std::forward_as_tuple(b.time, host.label(b.source), host.label(b.target));
  });
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& e : es) list.push_back({host.label(e.source), host.label(e.target), e.time});
  j["interactions"] = std::move(list);
  return j.dump();
}

void write_embeddings_jsonl(std::ostream& out, const TemporalGraph& host, const QueryGraph& query,
                            const std::string& query_id, const std::vector<Embedding>& embeddings) {
  std::vector<std::string> lines;
  lines.reserve(embeddings.size());
  for (const auto& e : embeddings) lines.push_back(embedding_json(host, query, query_id, e));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
}

std::string stats_json(const SearchStats& stats, Strategy strategy, std::size_t embeddings) {
  nlohmann::ordered_json j;
  j["strategy"] = std::string(strategy_name(strategy));
  j["embeddings"] = embeddings;
  j["states_expanded"] = stats.states_expanded;
  j["candidates"] = stats.candidates;
  j["spurious"] = stats.spurious;
  j["fragments"] = stats.fragments;
  j["duplicates"] = stats.duplicates;
  j["wall_time_s"] = std::chrono::duration<double>(stats.wall_time).count();
  j["timed_out"] = stats.timed_out;
  return j.dump();
}

}  // namespace tempiso
