#pragma once

#include <compare>
#include <span>
#include <vector>

#include "pfg/vertex_set.hpp"

namespace pfg {

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Directed graph on the vertex set [1, n] without parallel edges. Self-loops
/// are allowed and stored like any other edge.
///
/// The reachability closure is computed once at construction, so a Digraph is
/// an immutable value that can be shared freely between threads. Edits return
/// a new graph.
class Digraph {
 public:
  Digraph() = default;
  /// Edgeless graph on [1, n].
  explicit Digraph(int n);
  /// Throws std::out_of_range for endpoints outside [1, n] and
  /// std::invalid_argument for repeated edges.
  Digraph(int n, std::span<const Edge> edges);
  Digraph(int n, std::initializer_list<Edge> edges)
      : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> successors(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(successors(v).size()); }
  int in_degree(Vertex v) const;
  bool has_edge(Edge e) const;

  Digraph with_edge(Edge e) const;
  Digraph without_edge(Edge e) const;
  Digraph reversed() const;

  /// R(v): every vertex reachable from v by a directed path, v included.
  VertexSet reachable_from(Vertex v) const;
  /// R(A) = union of R(a) over a in A. Empty for empty A.
  VertexSet reachable_from(VertexSet a) const;
  /// i precedes-or-equals j in the reachability quasiorder.
  bool leq(Vertex i, Vertex j) const { return reachable_from(i).contains(j); }

  /// All distinct values of R(B) for B a subset of [n], i.e. the filters of the
  /// reachability quasiorder. Built from unions of the n single-vertex closures
  /// without visiting all 2^n subsets. Sorted by size, then by bit pattern.
  std::vector<VertexSet> filters() const;

  void check_vertex(Vertex v) const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void build();

  int n_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency: successors of v are adj_[offsets_[v-1] .. offsets_[v]).
  std::vector<int> offsets_;
  std::vector<Vertex> adj_;
  std::vector<VertexSet> closure_;
};

/// Directed path 1 -> 2 -> ... -> n, the classical one-way street.
Digraph path_digraph(int n);

}  // namespace pfg
