#include "tempiso/danalysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tempiso {

DeltaDistribution DeltaDistribution::from_deltas(std::vector<Duration> deltas) {
  DeltaDistribution dist;
  std::sort(deltas.begin(), deltas.end());
  dist.deltas = std::move(deltas);
  for (std::size_t i = 0; i < dist.deltas.size(); ++i) {
    if (i + 1 == dist.deltas.size() || dist.deltas[i + 1] != dist.deltas[i]) {
      dist.cumulative.emplace_back(dist.deltas[i], i + 1);
    }
  }
  return dist;
}

DeltaDistribution adjacent_deltas(const TemporalGraph& g, std::size_t pair_cap) {
  std::size_t pairs = 0;
  for (NodeId n = 0; n < g.order(); ++n) {
    const std::size_t deg = g.out_index(n).size() + g.in_index(n).size();
    pairs += deg * (deg - (deg > 0 ? 1 : 0)) / 2;
    if (pairs > pair_cap) {
      throw ResourceLimitError("adjacent pair count exceeds " + std::to_string(pair_cap) +
                               "; slice the network first");
    }
  }

  std::vector<Duration> deltas;
  deltas.reserve(pairs);
  std::vector<InteractionId> incident;
  for (NodeId n = 0; n < g.order(); ++n) {
    incident.clear();
    for (const auto& inc : g.out_index(n)) incident.push_back(inc.id);
    for (const auto& inc : g.in_index(n)) incident.push_back(inc.id);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const Interaction& a = g.interaction(incident[i]);
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        const Interaction& b = g.interaction(incident[j]);
        // A pair sharing both endpoints is seen at both; keep it at the smaller one.
        const NodeId other = a.source == n ? a.target : a.source;
        const bool shares_other = b.source == other || b.target == other;
        if (shares_other && other < n) continue;
        const Duration delta = b.time - a.time;
        deltas.push_back(delta < 0 ? -delta : delta);
      }
    }
  }
  return DeltaDistribution::from_deltas(std::move(deltas));
}

Duration detect_elbow(const DeltaDistribution& dist) {
  if (dist.deltas.size() < 3) {
    throw std::invalid_argument("elbow detection needs at least 3 deltas; supply d_max manually");
  }
  const auto x_max = static_cast<__int128>(dist.cumulative.back().first);
  const auto total = static_cast<__int128>(dist.deltas.size());
  // Normalized distance to the chord is |x/x_max - y/total| / sqrt(2); compare
  // the exact integer numerator |x*total - y*x_max| instead.
  __int128 best = -1;
  Duration elbow = dist.cumulative.front().first;
  for (const auto& [x, y] : dist.cumulative) {
    __int128 v = static_cast<__int128>(x) * total - static_cast<__int128>(y) * x_max;
    if (v < 0) v = -v;
    if (v > best) {
      best = v;
      elbow = x;
    }
  }
  return elbow;
}

DSchedule derive_schedule(Duration d_max, const std::vector<double>& percentages) {
  if (d_max <= 0) throw std::invalid_argument("d_max must be positive");
  DSchedule s;
  s.d_max = d_max;
  for (double p : percentages) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("schedule percentages must lie in (0, 1]");
    s.points.push_back(static_cast<Duration>(std::llround(p * static_cast<double>(d_max))));
  }
  std::sort(s.points.begin(), s.points.end());
  return s;
}

}  // namespace tempiso
