#include "pfg/matching.hpp"

#include <limits>

namespace pfg {

namespace {
constexpr int kUnreached = std::numeric_limits<int>::max();
}

DriverMatching::DriverMatching(std::span<const VertexSet> rows, int n)
    : rows_(rows.begin(), rows.end()),
      vertex_of_(rows.size(), 0),
      driver_of_(n + 1, -1),
      layer_(rows.size(), kUnreached) {
  // Greedy start, then phases until no augmenting path remains.
  for (int d = 0; d < drivers(); ++d) {
    VertexSet free_choices;
    rows_[d].for_each([&](Vertex v) {
      if (driver_of_[v] == -1) free_choices.insert(v);
    });
    if (!free_choices.empty()) {
      const Vertex v = free_choices.min();
      vertex_of_[d] = v;
      driver_of_[v] = d;
      ++size_;
    }
  }
  while (size_ < drivers() && bfs_layers()) {
    for (int d = 0; d < drivers(); ++d) {
      if (vertex_of_[d] == 0 && augment(d)) ++size_;
    }
  }
}

bool DriverMatching::bfs_layers() {
  std::vector<int> queue;
  for (int d = 0; d < drivers(); ++d) {
    if (vertex_of_[d] == 0) {
      layer_[d] = 0;
      queue.push_back(d);
    } else {
      layer_[d] = kUnreached;
    }
  }
  bool found_free = false;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int d = queue[k];
    rows_[d].for_each([&](Vertex v) {
      const int w = driver_of_[v];
      if (w == -1) {
        found_free = true;
      } else if (layer_[w] == kUnreached) {
        layer_[w] = layer_[d] + 1;
        queue.push_back(w);
      }
    });
  }
  return found_free;
}

bool DriverMatching::augment(int driver) {
  bool done = false;
  rows_[driver].for_each([&](Vertex v) {
    if (done) return;
    const int w = driver_of_[v];
    if (w == -1 || (layer_[w] == layer_[driver] + 1 && augment(w))) {
      vertex_of_[driver] = v;
      driver_of_[v] = driver;
      done = true;
    }
  });
  if (!done) layer_[driver] = kUnreached;
  return done;
}

DriverMatching::AlternatingReach DriverMatching::alternating_reach(int start) const {
  AlternatingReach out;
  std::vector<bool> seen(rows_.size(), false);
  seen[start] = true;
  out.drivers.push_back(start);
  for (std::size_t k = 0; k < out.drivers.size(); ++k) {
    rows_[out.drivers[k]].for_each([&](Vertex v) {
      if (out.vertices.contains(v)) return;
      out.vertices.insert(v);
      const int w = driver_of_[v];
      if (w != -1 && !seen[w]) {
        seen[w] = true;
        out.drivers.push_back(w);
      }
    });
  }
  return out;
}

IncrementalMatcher::IncrementalMatcher(int n) : driver_of_(n + 1, -1) {}

bool IncrementalMatcher::push(VertexSet row) {
  rows_.push_back(row);
  vertex_of_.push_back(0);
  std::uint64_t visited = 0;
  if (augment(drivers() - 1, visited)) return true;
  rows_.pop_back();
  vertex_of_.pop_back();
  return false;
}

void IncrementalMatcher::pop() {
  driver_of_[vertex_of_.back()] = -1;
  rows_.pop_back();
  vertex_of_.pop_back();
}

bool IncrementalMatcher::augment(int driver, std::uint64_t& visited) {
  for (std::uint64_t b = rows_[driver].bits() & ~visited; b != 0; b &= b - 1) {
    const int bit = std::countr_zero(b);
    if (visited & (std::uint64_t{1} << bit)) continue;
    visited |= std::uint64_t{1} << bit;
    const Vertex v = bit + 1;
    const int w = driver_of_[v];
    if (w == -1 || augment(w, visited)) {
      vertex_of_[driver] = v;
      driver_of_[v] = driver;
      return true;
    }
  }
  return false;
}

}  // namespace pfg
