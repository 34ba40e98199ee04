#include <algorithm>
#include <chrono>

#include "extraction_impl.hpp"

namespace tempiso {
namespace {

// Interaction-level adjacency: every other interaction sharing an endpoint,
// flagged when the pair is not time-respecting.
class InteractionAdjacency {
 public:
  struct Neighbor {
    InteractionId id;
    bool conflict;
  };

  InteractionAdjacency(const TemporalGraph& g, Threshold d) : offsets_(g.size() + 1, 0) {
    std::vector<std::uint32_t> stamp(g.size(), 0);
    for (InteractionId e = 0; e < g.size(); ++e) {
      const Interaction& ie = g.interaction(e);
      stamp[e] = e + 1;
      for (NodeId x : {ie.source, ie.target}) {
        for (auto index : {g.out_index(x), g.in_index(x)}) {
          for (const auto& inc : index) {
            if (stamp[inc.id] == e + 1) continue;
            stamp[inc.id] = e + 1;
            const bool ok = pair_time_respecting(ie, g.interaction(inc.id), d);
            neighbors_.push_back({inc.id, !ok});
          }
        }
      }
      offsets_[e + 1] = static_cast<std::uint32_t>(neighbors_.size());
    }
  }

  std::span<const Neighbor> of(InteractionId e) const {
    return {neighbors_.data() + offsets_[e], offsets_[e + 1] - offsets_[e]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Neighbor> neighbors_;
};

class DeadlineGuard {
 public:
  explicit DeadlineGuard(std::optional<std::chrono::steady_clock::time_point> deadline)
      : deadline_(deadline) {}
  bool expired() {
    if (!deadline_ || (++ticks_ & 0xFF) != 0) return false;
    return std::chrono::steady_clock::now() > *deadline_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
};

void check_cap(std::size_t count, const ExtractOptions& options) {
  if (count > options.max_sets) {
    throw ResourceLimitError("time-respecting subgraph extraction exceeded " +
                             std::to_string(options.max_sets) + " subgraphs");
  }
}

// Backtracking over include/exclude decisions. Each maximal set is reported
// once, from its smallest interaction id (the root); ids below the root are
// forbidden as members but still count against maximality.
class CompleteEnumerator {
 public:
  CompleteEnumerator(const TemporalGraph& g, Threshold d, const ExtractOptions& options)
      : adj_(g, d), options_(options), guard_(options.deadline), m_(g.size()),
        in_set_(m_, 0), excluded_(m_, 0), stamp_(m_, 0) {}

  bool run(std::vector<std::vector<InteractionId>>& out) {
    for (InteractionId r = 0; r < m_; ++r) {
      if (!enumerate_root(r, out)) return false;
    }
    return true;
  }

 private:
  struct Frame {
    std::vector<InteractionId> candidates;  // undecided, adjacent and compatible, ascending
    InteractionId pivot = 0;
    int stage = 0;
  };

  bool undecided(InteractionId y) const { return y > root_ && !in_set_[y] && !excluded_[y]; }

  bool compatible_with_set(InteractionId y) const {
    for (const auto& nb : adj_.of(y)) {
      if (nb.conflict && in_set_[nb.id]) return false;
    }
    return true;
  }

  // True when some interaction outside the set and no longer eligible is
  // adjacent to `x`, fits the current set, and conflicts with nothing still
  // undecided. It then fits every set this branch can reach, so none of them
  // is maximal.
  bool doomed(InteractionId x) const {
    for (const auto& nb : adj_.of(x)) {
      const InteractionId y = nb.id;
      if (nb.conflict || in_set_[y] || undecided(y)) continue;
      if (!compatible_with_set(y)) continue;
      bool threatened = false;
      for (const auto& other : adj_.of(y)) {
        if (other.conflict && undecided(other.id)) {
          threatened = true;
          break;
        }
      }
      if (!threatened) return true;
    }
    return false;
  }

  bool is_maximal() const {
    for (InteractionId s : set_) {
      for (const auto& nb : adj_.of(s)) {
        if (!in_set_[nb.id] && !nb.conflict && compatible_with_set(nb.id)) return false;
      }
    }
    return true;
  }

  bool enumerate_root(InteractionId r, std::vector<std::vector<InteractionId>>& out) {
    root_ = r;
    set_.assign(1, r);
    in_set_[r] = 1;
    if (doomed(r)) {
      in_set_[r] = 0;
      set_.clear();
      return true;
    }

    Frame first;
    for (const auto& nb : adj_.of(r)) {
      if (nb.id > r && !nb.conflict) first.candidates.push_back(nb.id);
    }
    std::sort(first.candidates.begin(), first.candidates.end());
    frames_.clear();
    frames_.push_back(std::move(first));

    while (!frames_.empty()) {
      if (guard_.expired()) {
        for (InteractionId s : set_) in_set_[s] = 0;
        for (auto& f : frames_) {
          if (f.stage == 2) excluded_[f.pivot] = 0;
        }
        return false;
      }
      const std::size_t top = frames_.size() - 1;
      switch (frames_[top].stage) {
        case 0: {
          if (frames_[top].candidates.empty()) {
            if (is_maximal()) {
              std::vector<InteractionId> s = set_;
              std::sort(s.begin(), s.end());
              out.push_back(std::move(s));
              check_cap(out.size(), options_);
            }
            frames_.pop_back();
            break;
          }
          const InteractionId pivot = frames_[top].candidates.front();
          frames_[top].pivot = pivot;
          frames_[top].stage = 1;

          in_set_[pivot] = 1;
          set_.push_back(pivot);
          if (doomed(pivot)) break;  // straight on to the exclude branch
          ++epoch_;
          for (const auto& nb : adj_.of(pivot)) {
            if (nb.conflict) stamp_[nb.id] = epoch_;  // conflicts with pivot
          }
          Frame child;
          for (std::size_t i = 1; i < frames_[top].candidates.size(); ++i) {
            const InteractionId p = frames_[top].candidates[i];
            if (stamp_[p] != epoch_) child.candidates.push_back(p);
          }
          ++epoch_;
          for (InteractionId p : child.candidates) stamp_[p] = epoch_;
          for (const auto& nb : adj_.of(pivot)) {
            if (nb.conflict || stamp_[nb.id] == epoch_ || !undecided(nb.id)) continue;
            stamp_[nb.id] = epoch_;
            if (compatible_with_set(nb.id)) child.candidates.push_back(nb.id);
          }
          std::sort(child.candidates.begin(), child.candidates.end());
          frames_.push_back(std::move(child));
          break;
        }
        case 1: {
          const InteractionId pivot = frames_[top].pivot;
          in_set_[pivot] = 0;
          set_.pop_back();
          // Excluding the pivot can only lead to a maximal set if something
          // still addable later conflicts with it.
          bool worth = false;
          for (const auto& nb : adj_.of(pivot)) {
            if (nb.conflict && undecided(nb.id)) {
              worth = true;
              break;
            }
          }
          if (!worth) {
            frames_.pop_back();
            break;
          }
          excluded_[pivot] = 1;
          frames_[top].stage = 2;
          Frame child;
          child.candidates.assign(frames_[top].candidates.begin() + 1, frames_[top].candidates.end());
          frames_.push_back(std::move(child));
          break;
        }
        default:
          excluded_[frames_[top].pivot] = 0;
          frames_.pop_back();
          break;
      }
    }
    in_set_[r] = 0;
    set_.clear();
    return true;
  }

  InteractionAdjacency adj_;
  const ExtractOptions& options_;
  DeadlineGuard guard_;
  std::size_t m_;
  std::vector<char> in_set_, excluded_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  InteractionId root_ = 0;
  std::vector<InteractionId> set_;
  std::vector<Frame> frames_;
};

std::vector<std::vector<InteractionId>> extract_seed_cover(const TemporalGraph& g, Threshold d,
                                                           const ExtractOptions& options,
                                                           bool* finished) {
  const InteractionAdjacency adj(g, d);
  DeadlineGuard guard(options.deadline);
  std::vector<std::vector<InteractionId>> out;
  std::vector<char> covered(g.size(), 0), in_set(g.size(), 0);
  std::vector<InteractionId> seen_stamp(g.size(), 0);
  std::vector<InteractionId> set, queue;
  for (InteractionId seed = 0; seed < g.size(); ++seed) {
    if (covered[seed]) continue;
    set.assign(1, seed);
    queue.assign(1, seed);
    in_set[seed] = 1;
    seen_stamp[seed] = seed + 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      if (guard.expired()) {
        *finished = false;
        return out;
      }
      for (const auto& nb : adj.of(queue[head])) {
        if (seen_stamp[nb.id] == seed + 1) continue;
        seen_stamp[nb.id] = seed + 1;
        bool ok = true;
        for (const auto& other : adj.of(nb.id)) {
          if (other.conflict && in_set[other.id]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        in_set[nb.id] = 1;
        set.push_back(nb.id);
        queue.push_back(nb.id);
      }
    }
    for (InteractionId s : set) {
      covered[s] = 1;
      in_set[s] = 0;
    }
    std::sort(set.begin(), set.end());
    out.push_back(set);
    check_cap(out.size(), options);
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<std::vector<InteractionId>> extract_complete(const TemporalGraph& host, Threshold d,
                                                         const ExtractOptions& options,
                                                         bool* finished) {
  std::vector<std::vector<InteractionId>> out;
  CompleteEnumerator enumerator(host, d, options);
  *finished = enumerator.run(out);
  return out;
}

}  // namespace detail

std::vector<std::vector<InteractionId>> extract_max_trs(const TemporalGraph& host, Threshold d,
                                                        const ExtractOptions& options) {
  bool finished = true;
  auto sets = options.mode == ExtractionMode::Complete
                  ? detail::extract_complete(host, d, options, &finished)
                  : extract_seed_cover(host, d, options, &finished);
  if (!finished) throw ResourceLimitError("time-respecting subgraph extraction hit its deadline");
  return sets;
}

}  // namespace tempiso
