#include "pfg/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pfg {

std::string_view to_string(Orientation o) { return o == Orientation::sink ? "sink" : "source"; }

Orientation parse_orientation(std::string_view text) {
  if (text == "sink") return Orientation::sink;
  if (text == "source") return Orientation::source;
  throw std::invalid_argument("unknown orientation '" + std::string(text) + "'");
}

RootedTree::RootedTree(Vertex root, std::vector<Vertex> parent, Orientation orientation)
    : root_(root), parent_(std::move(parent)), orientation_(orientation) {
  const int n = order();
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("tree needs 1..64 vertices");
  if (root < 1 || root > n) throw std::invalid_argument("root outside [1, n]");
  children_.assign(n, {});
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex p = parent_[v - 1];
    if (v == root) {
      if (p != 0) throw std::invalid_argument("root must have parent 0");
      continue;
    }
    if (p < 1 || p > n || p == v) {
      throw std::invalid_argument("bad parent " + std::to_string(p) + " for vertex " +
                                  std::to_string(v));
    }
    children_[p - 1].push_back(v);
  }
  order_.reserve(n);
  order_.push_back(root);
  for (std::size_t k = 0; k < order_.size(); ++k) {
    for (Vertex c : children_[order_[k] - 1]) order_.push_back(c);
  }
  if (static_cast<int>(order_.size()) != n) {
    throw std::invalid_argument("parent array contains a cycle or is disconnected");
  }
  subtree_.assign(n, VertexSet{});
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    VertexSet s = VertexSet::single(*it);
    for (Vertex c : children_[*it - 1]) s |= subtree_[c - 1];
    subtree_[*it - 1] = s;
  }
}

Vertex RootedTree::parent(Vertex v) const {
  if (v < 1 || v > order()) throw std::out_of_range("vertex outside tree");
  return parent_[v - 1];
}

const std::vector<Vertex>& RootedTree::children(Vertex v) const {
  if (v < 1 || v > order()) throw std::out_of_range("vertex outside tree");
  return children_[v - 1];
}

Digraph RootedTree::as_digraph() const {
  std::vector<Edge> es;
  es.reserve(order());
  for (Vertex v = 1; v <= order(); ++v) {
    if (v == root_) continue;
    const Vertex p = parent_[v - 1];
    es.push_back(orientation_ == Orientation::sink ? Edge{v, p} : Edge{p, v});
  }
  return Digraph(order(), es);
}

RootedTree RootedTree::reversed() const {
  return with_orientation(orientation_ == Orientation::sink ? Orientation::source
                                                            : Orientation::sink);
}

RootedTree RootedTree::with_orientation(Orientation o) const {
  RootedTree t = *this;
  t.orientation_ = o;
  return t;
}

std::vector<Vertex> RootedTree::path_from_root(Vertex v) const {
  std::vector<Vertex> path;
  for (Vertex u = v; u != 0; u = parent(u)) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

bool RootedTree::is_path() const {
  return std::all_of(children_.begin(), children_.end(),
                     [](const auto& c) { return c.size() <= 1; });
}

bool RootedTree::is_star() const {
  return static_cast<int>(children_[root_ - 1].size()) == order() - 1;
}

MappingFn::MappingFn(std::vector<Vertex> image) : image_(std::move(image)) {
  const int n = order();
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("mapping needs 1..64 points");
  for (Vertex y : image_) {
    if (y < 1 || y > n) {
      throw std::out_of_range("mapping value " + std::to_string(y) + " outside [1, " +
                              std::to_string(n) + "]");
    }
  }
}

MappingFn MappingFn::from_inverse_digraph(const Digraph& d) {
  std::vector<Vertex> image(d.order(), 0);
  for (const Edge& e : d.edges()) {
    if (image[e.to - 1] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(e.to) +
                                  " has in-degree > 1; not an inverse mapping digraph");
    }
    image[e.to - 1] = e.from;
  }
  for (Vertex v = 1; v <= d.order(); ++v) {
    if (image[v - 1] == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has in-degree 0; not an inverse mapping digraph");
    }
  }
  return MappingFn(std::move(image));
}

Digraph MappingFn::mapping_digraph() const {
  std::vector<Edge> es;
  es.reserve(order());
  for (Vertex i = 1; i <= order(); ++i) es.push_back({i, image_[i - 1]});
  return Digraph(order(), es);
}

Digraph MappingFn::inverse_digraph() const {
  std::vector<Edge> es;
  es.reserve(order());
  for (Vertex i = 1; i <= order(); ++i) es.push_back({image_[i - 1], i});
  return Digraph(order(), es);
}

std::vector<std::vector<Vertex>> MappingFn::cycles() const {
  const int n = order();
  // 0 = unvisited, otherwise the id (start vertex) of the walk that reached it.
  std::vector<Vertex> walk_id(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex start = 1; start <= n; ++start) {
    if (walk_id[start - 1] != 0) continue;
    Vertex v = start;
    while (walk_id[v - 1] == 0) {
      walk_id[v - 1] = start;
      v = image_[v - 1];
    }
    if (walk_id[v - 1] != start) continue;  // merged into an earlier component
    std::vector<Vertex> cyc{v};
    for (Vertex u = image_[v - 1]; u != v; u = image_[u - 1]) cyc.push_back(u);
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet MappingFn::cyclic_vertices() const {
  VertexSet s;
  for (const auto& c : cycles()) {
    for (Vertex v : c) s.insert(v);
  }
  return s;
}

}  // namespace pfg
