#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tempiso/temporal_graph.hpp"

namespace tempiso {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Timestamp parse_time(std::string_view field, TimeUnit unit, std::size_t line_no) {
  const Duration scale = seconds_per(unit);
  std::int64_t whole = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), whole);
  if (ec == std::errc() && ptr == field.data() + field.size()) {
    std::int64_t scaled = 0;
    if (__builtin_mul_overflow(whole, scale, &scaled)) {
      throw ParseError(line_no, "time value overflows 64-bit seconds");
    }
    return scaled;
  }
  // Fractional days/years are allowed and rounded to the nearest second.
  if (unit == TimeUnit::Days || unit == TimeUnit::Years) {
    double value = 0;
    auto [p2, ec2] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec2 == std::errc() && p2 == field.data() + field.size() && std::isfinite(value)) {
      const double seconds = std::round(value * static_cast<double>(scale));
      if (std::fabs(seconds) < 9.2e18) return static_cast<Timestamp>(seconds);
    }
  }
  throw ParseError(line_no, "malformed time '" + std::string(field) + "'");
}

}  // namespace

TemporalGraph parse_edge_list(std::istream& in, TimeUnit unit) {
  TemporalGraph::Builder b;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields[0].front() == '#' || fields[0].front() == '%') continue;
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(line_no, "expected '<source> <target> <time>', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    if (fields[0] == fields[1]) throw ParseError(line_no, "self-loop on node '" + std::string(fields[0]) + "'");
    const Timestamp t = parse_time(fields.back(), unit, line_no);
    b.add_interaction(fields[0], fields[1], t);
  }
  return std::move(b).build();
}

TemporalGraph parse_edge_list(std::string_view text, TimeUnit unit) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, unit);
}

TemporalGraph load_edge_list(const std::string& path, TimeUnit unit) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_edge_list(in, unit);
}

void write_edge_list(const TemporalGraph& g, std::ostream& out) {
  for (const auto& e : g.interactions()) {
    out << g.label(e.source) << ' ' << g.label(e.target) << ' ' << e.time << '\n';
  }
}

}  // namespace tempiso
