#pragma once

#include <utility>
#include <vector>

#include "tempiso/temporal_graph.hpp"

namespace tempiso {

struct DeltaDistribution {
  std::vector<Duration> deltas;  // ascending
  // (threshold, number of deltas <= threshold) at each distinct delta.
  std::vector<std::pair<Duration, std::size_t>> cumulative;

  static DeltaDistribution from_deltas(std::vector<Duration> deltas);
};

struct DSchedule {
  Duration d_max = 0;
  std::vector<Duration> points;
};

inline constexpr std::size_t kDefaultPairCap = 100'000'000;

/// |t_j - t_i| for every unordered pair of distinct interactions sharing an
/// endpoint, counted once per pair. Throws ResourceLimitError when the pair
/// count would exceed `pair_cap`.
DeltaDistribution adjacent_deltas(const TemporalGraph& g, std::size_t pair_cap = kDefaultPairCap);

/// Knee of the cumulative curve: the point farthest from the chord between
/// (0, 0) and (max delta, total) once both axes are scaled to [0, 1]. Ties go
/// to the smaller threshold. Needs at least three deltas.
Duration detect_elbow(const DeltaDistribution& dist);

inline const std::vector<double> kDefaultPercentages{0.1, 0.2, 0.3, 0.4, 0.5};

DSchedule derive_schedule(Duration d_max, const std::vector<double>& percentages = kDefaultPercentages);

}  // namespace tempiso
