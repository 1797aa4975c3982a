#include "pfg/check.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pfg/matching.hpp"

namespace pfg {

namespace {

std::vector<VertexSet> closure_rows(const Digraph& d, std::span<const Vertex> s) {
  std::vector<VertexSet> rows;
  rows.reserve(s.size());
  for (Vertex v : s) rows.push_back(d.reachable_from(v));
  return rows;
}

int demand(std::span<const Vertex> s, VertexSet region) {
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [&](Vertex v) { return region.contains(v); }));
}

}  // namespace

ParkingDistribution::ParkingDistribution(std::vector<int> counts) : counts_(std::move(counts)) {
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] < 0) {
      throw std::invalid_argument("negative demand at vertex " + std::to_string(k + 1));
    }
  }
}

ParkingDistribution ParkingDistribution::of(int n, std::span<const Vertex> s) {
  std::vector<int> counts(n, 0);
  for (Vertex v : s) {
    if (v < 1 || v > n) throw std::out_of_range("preference outside [1, n]");
    ++counts[v - 1];
  }
  return ParkingDistribution(std::move(counts));
}

int ParkingDistribution::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

PreferenceSequence ParkingDistribution::realize() const {
  PreferenceSequence s;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    s.insert(s.end(), counts_[k], static_cast<Vertex>(k + 1));
  }
  return s;
}

void check_preferences(const Digraph& d, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > d.order()) {
      throw std::out_of_range("preference s_" + std::to_string(i + 1) + " = " +
                              std::to_string(s[i]) + " outside [1, " +
                              std::to_string(d.order()) + "]");
    }
  }
}

bool is_parking_function(const Digraph& d, std::span<const Vertex> s) {
  check_preferences(d, s);
  if (s.size() > static_cast<std::size_t>(d.order())) return false;
  if (s.empty()) return true;
  const auto rows = closure_rows(d, s);
  return DriverMatching(rows, d.order()).saturates_drivers();
}

std::optional<HallViolator> hall_witness(const Digraph& d, std::span<const Vertex> s) {
  check_preferences(d, s);
  const auto rows = closure_rows(d, s);
  const DriverMatching matching(rows, d.order());
  if (matching.saturates_drivers()) return std::nullopt;
  int unmatched = 0;
  while (matching.vertex_of(unmatched) != 0) ++unmatched;
  const auto reach = matching.alternating_reach(unmatched);
  HallViolator w;
  for (int driver : reach.drivers) w.subset.insert(s[driver]);
  w.reach = d.reachable_from(w.subset);
  w.demand = demand(s, w.reach);
  if (w.demand <= w.reach.size()) {
    throw std::logic_error("deficiency set does not violate the Hall condition");
  }
  return w;
}

std::optional<ParkingOutcome> parking_schedule(const Digraph& d, std::span<const Vertex> s) {
  check_preferences(d, s);
  const int m = static_cast<int>(s.size());
  if (m > d.order()) return std::nullopt;
  const auto rows = closure_rows(d, s);
  const DriverMatching matching(rows, d.order());
  if (!matching.saturates_drivers()) return std::nullopt;

  std::vector<Vertex> target = matching.assignment();
  std::vector<int> owner(d.order() + 1, -1);
  for (int i = 0; i < m; ++i) owner[target[i]] = i;

  ParkingOutcome out;
  out.assignment.resize(m);
  out.walks.resize(m);
  VertexSet occupied;
  std::vector<Vertex> came_from(d.order() + 1, 0);
  for (int i = 0; i < m; ++i) {
    const Vertex start = s[i];
    const Vertex goal = target[i];
    Vertex spot = 0;
    if (!occupied.contains(start)) {
      spot = start;
    } else {
      // BFS through occupied vertices; free vertices are the candidate spots.
      VertexSet seen = VertexSet::single(start);
      VertexSet candidates;
      std::vector<Vertex> queue{start};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (Vertex w : d.successors(queue[k])) {
          if (seen.contains(w)) continue;
          seen.insert(w);
          came_from[w] = queue[k];
          if (occupied.contains(w)) {
            queue.push_back(w);
          } else if (d.leq(w, goal)) {
            candidates.insert(w);
          }
        }
      }
      spot = candidates.min();
      if (spot == 0) throw std::logic_error("no reachable spot below the matched vertex");
    }
    std::vector<Vertex> walk{spot};
    while (walk.back() != start) walk.push_back(came_from[walk.back()]);
    std::reverse(walk.begin(), walk.end());

    occupied.insert(spot);
    out.assignment[i] = spot;
    out.walks[i] = std::move(walk);
    if (spot != goal) {
      const int j = owner[spot];
      if (j > i) {
        target[j] = goal;
        owner[goal] = j;
      }
    }
    owner[spot] = i;
  }
  return out;
}

bool replay_validate(const Digraph& d, std::span<const Vertex> s, const ParkingOutcome& o) {
  const std::size_t m = s.size();
  if (o.assignment.size() != m || o.walks.size() != m) return false;
  if (m > static_cast<std::size_t>(d.order())) return false;
  VertexSet occupied;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& walk = o.walks[i];
    if (walk.empty() || walk.front() != s[i] || walk.back() != o.assignment[i]) return false;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      if (walk[k] < 1 || walk[k] > d.order()) return false;
      const bool last = k + 1 == walk.size();
      if (occupied.contains(walk[k]) == last) return false;
      if (!last && !d.has_edge({walk[k], walk[k + 1]})) return false;
    }
    occupied.insert(walk.back());
  }
  return true;
}

bool is_deterministic(const Digraph& d) {
  for (Vertex v = 1; v <= d.order(); ++v) {
    if (d.out_degree(v) > 1) return false;
  }
  return true;
}

std::optional<DeterministicRun> simulate_deterministic(const Digraph& d,
                                                       std::span<const Vertex> s) {
  if (!is_deterministic(d)) {
    throw std::invalid_argument("simulate_deterministic needs out-degree <= 1 everywhere");
  }
  check_preferences(d, s);
  DeterministicRun run;
  VertexSet occupied;
  for (Vertex start : s) {
    std::vector<Vertex> walk{start};
    VertexSet visited = VertexSet::single(start);
    while (occupied.contains(walk.back())) {
      const auto next = d.successors(walk.back());
      if (next.empty()) return std::nullopt;
      const Vertex w = next.front();
      if (visited.contains(w) && occupied.contains(w)) return std::nullopt;
      visited.insert(w);
      run.highlighted.push_back({walk.back(), w});
      walk.push_back(w);
    }
    occupied.insert(walk.back());
    run.outcome.assignment.push_back(walk.back());
    run.outcome.walks.push_back(std::move(walk));
  }
  std::sort(run.highlighted.begin(), run.highlighted.end());
  run.highlighted.erase(std::unique(run.highlighted.begin(), run.highlighted.end()),
                        run.highlighted.end());
  return run;
}

bool is_source_tree_pf(const RootedTree& tree, std::span<const Vertex> s) {
  if (tree.orientation() != Orientation::source) {
    throw std::invalid_argument("is_source_tree_pf needs a source tree");
  }
  const int n = tree.order();
  std::vector<int> load(n + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) {
      throw std::out_of_range("preference s_" + std::to_string(i + 1) + " outside [1, n]");
    }
    ++load[s[i]];
  }
  std::vector<int> size(n + 1, 1);
  const auto& order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    if (load[u] > size[u]) return false;
    if (const Vertex p = tree.parent(u); p != 0) {
      load[p] += load[u];
      size[p] += size[u];
    }
  }
  return true;
}

bool is_prime(const Digraph& d, std::span<const Vertex> s) {
  if (!is_parking_function(d, s)) return false;
  const VertexSet all = d.vertices();
  for (VertexSet f : d.filters()) {
    if (f.empty() || f == all) continue;
    if (demand(s, f) >= f.size()) return false;
  }
  return true;
}

bool is_parking_distribution(const Digraph& d, const ParkingDistribution& f) {
  if (f.order() != d.order()) {
    throw std::invalid_argument("distribution has " + std::to_string(f.order()) +
                                " entries for a graph on " + std::to_string(d.order()) +
                                " vertices");
  }
  if (f.total() > d.order()) return false;
  for (VertexSet filter : d.filters()) {
    int load = 0;
    filter.for_each([&](Vertex v) { load += f(v); });
    if (load > filter.size()) return false;
  }
  return true;
}

}  // namespace pfg
