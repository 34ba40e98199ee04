#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tempiso/engine.hpp"

namespace tempiso {

/// One line: {"query": id, "mapping": {qnode: hostlabel, ...},
/// "interactions": [[src, dst, t], ...]} with interactions ordered by
/// (t, src, dst).
std::string embedding_json(const TemporalGraph& host, const QueryGraph& query, const std::string& query_id,
                           const Embedding& embedding);

/// Lines for every embedding, sorted, so equal embedding sets give equal bytes.
void write_embeddings_jsonl(std::ostream& out, const TemporalGraph& host, const QueryGraph& query,
                            const std::string& query_id, const std::vector<Embedding>& embeddings);

std::string stats_json(const SearchStats& stats, Strategy strategy, std::size_t embeddings);

}  // namespace tempiso
