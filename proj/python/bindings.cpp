#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "tempiso/catalog.hpp"
#include "tempiso/danalysis.hpp"
#include "tempiso/duration.hpp"
#include "tempiso/engine.hpp"
#include "tempiso/jsonl.hpp"
#include "tempiso/oracle.hpp"

namespace py = pybind11;
using namespace tempiso;

namespace {

// None means Infinite; strings take unit suffixes ("3d", "inf").
Threshold to_threshold(const std::optional<std::variant<Duration, std::string>>& d) {
  if (!d) return Threshold::infinite();
  if (const auto* v = std::get_if<Duration>(&*d)) return Threshold::finite(*v);
  return parse_threshold(std::get<std::string>(*d));
}

QueryGraph query_from_labels(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> labels;
  std::vector<QueryGraph::Edge> ids;
  auto id_of = [&](const std::string& label) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return static_cast<NodeId>(i);
    }
    labels.push_back(label);
    return static_cast<NodeId>(labels.size() - 1);
  };
  for (const auto& [a, b] : edges) {
    const NodeId x = id_of(a);
    ids.emplace_back(x, id_of(b));
  }
  return QueryGraph(std::move(labels), std::move(ids));
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["states_expanded"] = s.states_expanded;
  d["candidates"] = s.candidates;
  d["spurious"] = s.spurious;
  d["fragments"] = s.fragments;
  d["duplicates"] = s.duplicates;
  d["wall_time_s"] = std::chrono::duration<double>(s.wall_time).count();
  d["timed_out"] = s.timed_out;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tempiso, m) {
  m.doc() = "Time-respecting subgraph matching in temporal networks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<TemporalGraph>(m, "TemporalGraph")
      .def_property_readonly("order", &TemporalGraph::order)
      .def_property_readonly("size", &TemporalGraph::size)
      .def_property_readonly("labels",
                             [](const TemporalGraph& g) {
                               return std::vector<std::string>(g.labels().begin(), g.labels().end());
                             })
      .def("interactions",
           [](const TemporalGraph& g) {
             std::vector<std::tuple<std::string, std::string, Timestamp>> out;
             for (const auto& e : g.interactions()) out.emplace_back(g.label(e.source), g.label(e.target), e.time);
             return out;
           })
      .def("count",
           [](const TemporalGraph& g, const std::string& u, const std::string& v) {
             const auto a = g.find(u), b = g.find(v);
             if (!a || !b) throw py::key_error("unknown node label");
             return g.induced_count(*a, *b);
           })
      .def("__repr__", [](const TemporalGraph& g) {
        return "<TemporalGraph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<QueryGraph>(m, "QueryGraph")
      .def(py::init(&query_from_labels), py::arg("edges"))
      .def_property_readonly("order", &QueryGraph::order)
      .def_property_readonly("size", &QueryGraph::size)
      .def_property_readonly("diameter", &QueryGraph::undirected_diameter);

  m.def(
      "parse_edge_list",
      [](const std::string& text, const std::string& unit) { return parse_edge_list(text, parse_time_unit(unit)); },
      py::arg("text"), py::arg("unit") = "seconds");
  m.def(
      "load_edge_list",
      [](const std::string& path, const std::string& unit) { return load_edge_list(path, parse_time_unit(unit)); },
      py::arg("path"), py::arg("unit") = "seconds");

  m.def(
      "match",
      [](const TemporalGraph& host, const QueryGraph& query,
         std::optional<std::variant<Duration, std::string>> d, const std::string& strategy) {
        MatchResult r;
        {
          py::gil_scoped_release release;
          r = match(parse_strategy(strategy), host, query, to_threshold(d));
        }
        py::list embeddings;
        for (const auto& e : r.embeddings) {
          py::dict mapping;
          for (std::size_t p = 0; p < e.mapping.size(); ++p) {
            mapping[py::str(query.label(static_cast<NodeId>(p)))] = host.label(e.mapping[p]);
          }
          embeddings.append(mapping);
        }
        return py::make_tuple(embeddings, stats_dict(r.stats));
      },
      py::arg("host"), py::arg("query"), py::arg("d") = py::none(), py::arg("strategy") = "titoto",
      "Returns (list of {query label: host label}, stats dict).");

  m.def(
      "match_jsonl",
      [](const TemporalGraph& host, const QueryGraph& query, const std::string& query_id,
         std::optional<std::variant<Duration, std::string>> d, const std::string& strategy) {
        const auto r = match(parse_strategy(strategy), host, query, to_threshold(d));
        std::ostringstream out;
        write_embeddings_jsonl(out, host, query, query_id, r.embeddings);
        return out.str();
      },
      py::arg("host"), py::arg("query"), py::arg("query_id") = "q", py::arg("d") = py::none(),
      py::arg("strategy") = "titoto");

  m.def(
      "enumerate_bruteforce",
      [](const TemporalGraph& host, const QueryGraph& query, std::optional<std::variant<Duration, std::string>> d) {
        std::vector<std::vector<std::string>> out;
        for (const auto& e : enumerate_bruteforce(host, query, to_threshold(d))) {
          std::vector<std::string> row;
          for (NodeId n : e.mapping) row.push_back(host.label(n));
          out.push_back(std::move(row));
        }
        return out;
      },
      py::arg("host"), py::arg("query"), py::arg("d") = py::none());

  m.def(
      "embedding_time_respecting",
      [](const std::vector<std::tuple<NodeId, NodeId, Timestamp>>& sub,
         std::optional<std::variant<Duration, std::string>> d) {
        std::vector<Interaction> xs;
        for (const auto& [u, v, t] : sub) xs.push_back({u, v, t});
        return embedding_time_respecting(xs, to_threshold(d));
      },
      py::arg("interactions"), py::arg("d") = py::none());

  m.def("adjacent_deltas", [](const TemporalGraph& g) { return adjacent_deltas(g).deltas; });
  m.def("detect_elbow",
        [](std::vector<Duration> deltas) { return detect_elbow(DeltaDistribution::from_deltas(std::move(deltas))); });
  m.def(
      "derive_schedule",
      [](Duration d_max, const std::vector<double>& percentages) { return derive_schedule(d_max, percentages).points; },
      py::arg("d_max"), py::arg("percentages") = kDefaultPercentages);
  m.def("parse_duration", [](const std::string& s) { return parse_duration(s); });

  m.def(
      "catalog",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& q : default_catalog(seed)) {
          py::dict d;
          d["id"] = q.id;
          d["name"] = q.name;
          d["order"] = q.graph.order();
          d["size"] = q.graph.size();
          d["diameter"] = q.graph.undirected_diameter();
          std::vector<std::pair<std::string, std::string>> edges;
          for (const auto& [a, b] : q.graph.edges()) edges.emplace_back(q.graph.label(a), q.graph.label(b));
          d["edges"] = edges;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = kDefaultCatalogSeed);
}
