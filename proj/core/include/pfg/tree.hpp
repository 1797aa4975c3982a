#pragma once

#include <string_view>
#include <vector>

#include "pfg/digraph.hpp"

namespace pfg {

/// Sink trees have every edge pointing toward the root, source trees away
/// from it.
enum class Orientation { sink, source };

std::string_view to_string(Orientation o);
Orientation parse_orientation(std::string_view text);

/// Labeled rooted tree on [1, n]. parent(root) == 0.
class RootedTree {
 public:
  /// `parent[v-1]` is the parent of v, 0 for the root. Throws
  /// std::invalid_argument unless the parent relation is a single tree rooted
  /// at `root`.
  RootedTree(Vertex root, std::vector<Vertex> parent, Orientation orientation);

  int order() const { return static_cast<int>(parent_.size()); }
  Vertex root() const { return root_; }
  Orientation orientation() const { return orientation_; }
  Vertex parent(Vertex v) const;
  const std::vector<Vertex>& parents() const { return parent_; }
  const std::vector<Vertex>& children(Vertex v) const;

  /// Sink: child -> parent edges. Source: parent -> child edges.
  Digraph as_digraph() const;
  /// Same tree with the other orientation.
  RootedTree reversed() const;
  RootedTree with_orientation(Orientation o) const;

  /// Vertex set of the subtree hanging at u (u and all its descendants).
  VertexSet subtree(Vertex u) const { return subtree_.at(u - 1); }
  /// root = v_1, ..., v_k = v.
  std::vector<Vertex> path_from_root(Vertex v) const;
  /// Vertices ordered so that every parent precedes its children.
  const std::vector<Vertex>& top_down_order() const { return order_; }

  bool is_leaf(Vertex v) const { return children(v).empty(); }
  /// True when the digraph is a directed path.
  bool is_path() const;
  /// True when every non-root vertex is a child of the root.
  bool is_star() const;

  bool operator==(const RootedTree& o) const {
    return root_ == o.root_ && parent_ == o.parent_ && orientation_ == o.orientation_;
  }

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  Orientation orientation_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> subtree_;
};

/// A function f : [n] -> [n] given by its image list.
class MappingFn {
 public:
  explicit MappingFn(std::vector<Vertex> image);

  /// Recovers f from an inverse mapping digraph (edges f(i) -> i). Throws
  /// std::invalid_argument unless every vertex has in-degree exactly 1.
  static MappingFn from_inverse_digraph(const Digraph& d);

  int order() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_.at(v - 1); }
  const std::vector<Vertex>& image() const { return image_; }

  /// Edges i -> f(i).
  Digraph mapping_digraph() const;
  /// Edges f(i) -> i.
  Digraph inverse_digraph() const;

  /// The cycle of every weakly connected component, each listed from its
  /// smallest vertex and following f, sorted by that vertex.
  std::vector<std::vector<Vertex>> cycles() const;
  VertexSet cyclic_vertices() const;

  bool operator==(const MappingFn&) const = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace pfg
