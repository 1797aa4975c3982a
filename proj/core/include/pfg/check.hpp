#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pfg/digraph.hpp"
#include "pfg/tree.hpp"

namespace pfg {

/// Driver preferences s_1..s_m, 1-based vertex labels. Driver i is s[i-1].
using PreferenceSequence = std::vector<Vertex>;

/// One way the drivers can park. assignment[i] is where driver i+1 parks and
/// walks[i] the vertices it visits, from its preference to that spot.
struct ParkingOutcome {
  std::vector<Vertex> assignment;
  std::vector<std::vector<Vertex>> walks;

  bool operator==(const ParkingOutcome&) const = default;
};

/// Certificate that s is not a parking function: more drivers prefer the
/// closed region `reach` = R(subset) than it has vertices.
struct HallViolator {
  VertexSet subset;
  VertexSet reach;
  int demand = 0;
};

/// Per-vertex demand counts, f(v) drivers preferring v.
class ParkingDistribution {
 public:
  /// `counts[v-1]` = f(v). Throws std::invalid_argument on negative counts.
  explicit ParkingDistribution(std::vector<int> counts);
  static ParkingDistribution of(int n, std::span<const Vertex> s);

  int order() const { return static_cast<int>(counts_.size()); }
  int operator()(Vertex v) const { return counts_.at(v - 1); }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;
  /// Weakly increasing sequence with these demand counts.
  PreferenceSequence realize() const;

 private:
  std::vector<int> counts_;
};

/// Throws std::out_of_range if some preference lies outside [1, n].
void check_preferences(const Digraph& d, std::span<const Vertex> s);

/// Drivers can all park iff the bipartite graph driver i -- {j : s_i <= j}
/// has a matching saturating the drivers. More drivers than vertices is
/// simply infeasible.
bool is_parking_function(const Digraph& d, std::span<const Vertex> s);

/// Returns a violated region when s is not a parking function: take an
/// unmatched driver of a maximum matching, collect the drivers reachable by
/// alternating paths, and let `subset` be their preferences.
std::optional<HallViolator> hall_witness(const Digraph& d, std::span<const Vertex> s);

/// A concrete parking run, built from a saturating matching: each driver in
/// turn parks at the first free vertex x on some walk through occupied
/// vertices with x <= (its matched vertex); a later driver matched to x takes
/// over the freed match. Ties go to the smallest label and walks are
/// shortest, so the result is deterministic.
std::optional<ParkingOutcome> parking_schedule(const Digraph& d, std::span<const Vertex> s);

/// Replays the parking process: walk i starts at s_i, follows edges, passes
/// only vertices occupied by earlier drivers and ends on a free vertex which
/// is then occupied. Malformed outcomes give false.
bool replay_validate(const Digraph& d, std::span<const Vertex> s, const ParkingOutcome& o);

/// Every vertex has out-degree at most 1.
bool is_deterministic(const Digraph& d);

struct DeterministicRun {
  ParkingOutcome outcome;
  /// Edges used by a driver after failing to park at its preference, sorted.
  std::vector<Edge> highlighted;
};

/// Runs the (unique) process on a graph of out-degree <= 1. Empty when some
/// driver gets stuck or loops. Throws std::invalid_argument otherwise.
std::optional<DeterministicRun> simulate_deterministic(const Digraph& d,
                                                       std::span<const Vertex> s);

/// Source-tree shortcut: s parks iff no subtree is preferred by more drivers
/// than it has vertices. Linear time.
bool is_source_tree_pf(const RootedTree& tree, std::span<const Vertex> s);

/// Parking function with strict inequality on every filter other than [n].
/// The empty filter is vacuous.
bool is_prime(const Digraph& d, std::span<const Vertex> s);

/// Sum of f over every filter F is at most |F|. Totals above n are false.
bool is_parking_distribution(const Digraph& d, const ParkingDistribution& f);

}  // namespace pfg
