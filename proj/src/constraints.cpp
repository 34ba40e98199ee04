#include "tempiso/constraints.hpp"

#include <algorithm>
#include <vector>

namespace tempiso {

bool pair_time_respecting(const Interaction& first, const Interaction& second, Threshold d) {
  const bool forward = first.target == second.source;   // first flows into second
  const bool backward = first.source == second.target;  // second flows into first
  const bool shared = first.source == second.source || first.target == second.target;
  if (!forward && !backward && !shared) {
    throw std::invalid_argument("pair_time_respecting: interactions are not adjacent");
  }
  const Duration delta = second.time - first.time;
  if (forward || backward) {
    if (forward && !(delta >= 0 && d.admits(delta))) return false;
    if (backward && !(-delta >= 0 && d.admits(-delta))) return false;
    return true;
  }
  return d.admits(delta < 0 ? -delta : delta);
}

bool node_window_ok(std::span<const Timestamp> incident_times, Threshold d) {
  if (incident_times.empty()) return true;
  return d.admits(incident_times.back() - incident_times.front());
}

bool node_precedence_ok(std::span<const Timestamp> in_times, std::span<const Timestamp> out_times) {
  if (in_times.empty() || out_times.empty()) return true;
  return out_times.front() >= in_times.back();
}

bool embedding_time_respecting(std::span<const Interaction> sub, Threshold d) {
  struct Touch {
    NodeId node;
    bool incoming;
    Timestamp time;
  };
  std::vector<Touch> touches;
  touches.reserve(sub.size() * 2);
  for (const auto& e : sub) {
    touches.push_back({e.source, false, e.time});
    touches.push_back({e.target, true, e.time});
  }
  std::sort(touches.begin(), touches.end(), [](const Touch& a, const Touch& b) {
    return a.node != b.node ? a.node < b.node : a.time < b.time;
  });

  std::vector<Timestamp> dates, pred_dates, succ_dates;
  for (std::size_t i = 0; i < touches.size();) {
    std::size_t j = i;
    dates.clear();
    pred_dates.clear();
    succ_dates.clear();
    for (; j < touches.size() && touches[j].node == touches[i].node; ++j) {
      dates.push_back(touches[j].time);
      (touches[j].incoming ? pred_dates : succ_dates).push_back(touches[j].time);
    }
    if (!node_window_ok(dates, d) || !node_precedence_ok(pred_dates, succ_dates)) return false;
    i = j;
  }
  return true;
}

}  // namespace tempiso
