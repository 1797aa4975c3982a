#include "pfg/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace pfg {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  }
  build();
}

Digraph::Digraph(int n, std::span<const Edge> edges) : n_(n), edges_(edges.begin(), edges.end()) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  }
  for (const Edge& e : edges_) {
    check_vertex(e.from);
    check_vertex(e.to);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->from) + "," +
                                std::to_string(dup->to) + ")");
  }
  build();
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) +
                            "]");
  }
}

void Digraph::build() {
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) ++offsets_[e.from];
  for (int v = 1; v <= n_; ++v) offsets_[v] += offsets_[v - 1];
  adj_.resize(edges_.size());
  // edges_ is sorted by source, so a linear pass fills each bucket in order.
  for (std::size_t k = 0; k < edges_.size(); ++k) adj_[k] = edges_[k].to;

  // Per-vertex search; trees and mappings have at most n edges.
  closure_.assign(n_, VertexSet{});
  std::vector<Vertex> stack;
  for (Vertex v = 1; v <= n_; ++v) {
    VertexSet seen = VertexSet::single(v);
    stack.assign(1, v);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : successors(u)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    closure_[v - 1] = seen;
  }
}

std::span<const Vertex> Digraph::successors(Vertex v) const {
  check_vertex(v);
  return {adj_.data() + offsets_[v - 1], adj_.data() + offsets_[v]};
}

int Digraph::in_degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.to == v; }));
}

bool Digraph::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Digraph Digraph::with_edge(Edge e) const {
  std::vector<Edge> es = edges_;
  es.push_back(e);
  return Digraph(n_, es);
}

Digraph Digraph::without_edge(Edge e) const {
  std::vector<Edge> es = edges_;
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || *it != e) {
    throw std::invalid_argument("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                ") not present");
  }
  es.erase(it);
  return Digraph(n_, es);
}

Digraph Digraph::reversed() const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.push_back({e.to, e.from});
  return Digraph(n_, es);
}

VertexSet Digraph::reachable_from(Vertex v) const {
  check_vertex(v);
  return closure_[v - 1];
}

VertexSet Digraph::reachable_from(VertexSet a) const {
  if (!a.is_subset_of(vertices())) {
    throw std::out_of_range("vertex set not contained in [1, " + std::to_string(n_) + "]");
  }
  VertexSet out;
  a.for_each([&](Vertex v) { out |= closure_[v - 1]; });
  return out;
}

std::vector<VertexSet> Digraph::filters() const {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<VertexSet> all{VertexSet{}};
  for (Vertex v = 1; v <= n_; ++v) {
    const VertexSet row = closure_[v - 1];
    const std::size_t existing = all.size();
    for (std::size_t k = 0; k < existing; ++k) {
      VertexSet u = all[k] | row;
      if (seen.insert(u.bits()).second) all.push_back(u);
    }
  }
  std::sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  return all;
}

Digraph path_digraph(int n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
  return Digraph(n, es);
}

}  // namespace pfg
