#pragma once

#include <span>
#include <vector>

#include "pfg/vertex_set.hpp"

namespace pfg {

/// Maximum matching between drivers 0..m-1 and vertices [1, n], where driver
/// i may be matched to any vertex in rows[i]. Computed with Hopcroft-Karp
/// phases (BFS layering, then vertex-disjoint augmenting paths along layers).
class DriverMatching {
 public:
  DriverMatching(std::span<const VertexSet> rows, int n);

  int drivers() const { return static_cast<int>(rows_.size()); }
  int size() const { return size_; }
  bool saturates_drivers() const { return size_ == drivers(); }

  /// 0 when the driver is unmatched.
  Vertex vertex_of(int driver) const { return vertex_of_[driver]; }
  /// -1 when the vertex is unmatched.
  int driver_of(Vertex v) const { return driver_of_[v]; }
  const std::vector<Vertex>& assignment() const { return vertex_of_; }

  /// Drivers and vertices reachable from the unmatched driver `start` along
  /// alternating paths (any edge from a driver, matched edge back from a
  /// vertex). With a maximum matching every vertex found is matched.
  struct AlternatingReach {
    std::vector<int> drivers;
    VertexSet vertices;
  };
  AlternatingReach alternating_reach(int start) const;

 private:
  bool bfs_layers();
  bool augment(int driver);

  std::vector<VertexSet> rows_;
  std::vector<Vertex> vertex_of_;
  std::vector<int> driver_of_;  // indexed by vertex label, slot 0 unused
  std::vector<int> layer_;
  int size_ = 0;
};

/// Matching that grows one driver at a time, for depth-first sweeps over
/// preference multisets. Only saturating states are kept: push() succeeds
/// and extends the matching, or fails and leaves it untouched; pop() removes
/// the most recently pushed driver.
class IncrementalMatcher {
 public:
  explicit IncrementalMatcher(int n);

  bool push(VertexSet row);
  void pop();
  int drivers() const { return static_cast<int>(rows_.size()); }

 private:
  bool augment(int driver, std::uint64_t& visited);

  std::vector<VertexSet> rows_;
  std::vector<Vertex> vertex_of_;
  std::vector<int> driver_of_;
};

}  // namespace pfg
