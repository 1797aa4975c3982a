#include "pfg/bijections.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "pfg/matching.hpp"

namespace pfg {

namespace {

void require_full_length(int n, std::span<const Vertex> s, const char* what) {
  if (static_cast<int>(s.size()) != n) {
    throw std::invalid_argument(std::string(what) + " needs a sequence of length n = " +
                                std::to_string(n) + ", got " + std::to_string(s.size()));
  }
}

std::vector<int> preference_counts(int n, std::span<const Vertex> s) {
  std::vector<int> counts(n + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > n) throw std::out_of_range("preference outside [1, n]");
    ++counts[v];
  }
  return counts;
}

// Leaf-path decomposition shared by tau and its inverse. `joined(u)` says
// whether the edge between u and its parent lies inside u's component.
std::vector<std::vector<Vertex>> leaf_paths(const RootedTree& tree, std::span<const Vertex> s,
                                            const std::function<bool(Vertex)>& joined) {
  const int n = tree.order();
  const auto counts = preference_counts(n, s);
  std::vector<bool> has_joined_child(n + 1, false);
  for (Vertex v = 1; v <= n; ++v) {
    if (tree.parent(v) != 0 && joined(v)) has_joined_child[tree.parent(v)] = true;
  }
  std::vector<bool> claimed(n + 1, false);
  std::vector<std::vector<Vertex>> paths;
  for (Vertex leaf = 1; leaf <= n; ++leaf) {
    if (has_joined_child[leaf]) continue;
    std::vector<Vertex> path;
    int load = 0;
    Vertex u = leaf;
    while (true) {
      if (!claimed[u]) {
        path.push_back(u);
        load += counts[u];
        if (load == static_cast<int>(path.size())) break;
      }
      if (tree.parent(u) == 0 || !joined(u)) {
        throw NotInImage("leaf " + std::to_string(leaf) +
                         " has no run toward its component root with matching demand");
      }
      u = tree.parent(u);
    }
    for (Vertex w : path) claimed[w] = true;
    paths.push_back(std::move(path));
  }
  if (std::count(claimed.begin() + 1, claimed.end(), true) != n) {
    throw NotInImage("leaf paths do not cover every vertex");
  }
  return paths;
}

Permutation reversal_permutation(int n, const std::vector<std::vector<Vertex>>& paths) {
  Permutation perm(n);
  for (Vertex v = 1; v <= n; ++v) perm[v - 1] = v;
  for (const auto& p : paths) {
    const std::size_t k = p.size();
    for (std::size_t j = 0; j < k; ++j) perm[p[j] - 1] = p[k - 1 - j];
  }
  return perm;
}

}  // namespace

std::string cycle_notation(const Permutation& perm) {
  const int n = static_cast<int>(perm.size());
  const bool spaced = std::any_of(perm.begin(), perm.end(), [](Vertex v) { return v >= 10; });
  std::vector<bool> seen(n + 1, false);
  std::string out;
  for (Vertex v = 1; v <= n; ++v) {
    if (seen[v] || perm[v - 1] == v) continue;
    out += '(';
    for (Vertex u = v; !seen[u]; u = perm[u - 1]) {
      seen[u] = true;
      if (spaced && u != v) out += ' ';
      out += std::to_string(u);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PreferenceSequence permute(const Permutation& perm, std::span<const Vertex> s) {
  PreferenceSequence out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(perm.at(v - 1));
  return out;
}

TauResult tau(const RootedTree& sink_tree, std::span<const Vertex> s) {
  if (sink_tree.orientation() != Orientation::sink) {
    throw std::invalid_argument("tau needs a sink tree");
  }
  const int n = sink_tree.order();
  require_full_length(n, s, "tau");
  const auto run = simulate_deterministic(sink_tree.as_digraph(), s);
  if (!run) throw NotParkingFunction("sequence does not park on the sink tree");

  std::vector<bool> highlighted(n + 1, false);
  for (const Edge& e : run->highlighted) highlighted[e.from] = true;  // e = child -> parent
  auto paths = leaf_paths(sink_tree, s, [&](Vertex u) { return highlighted[u]; });
  Permutation perm = reversal_permutation(n, paths);
  TauResult out{perm, permute(perm, s), sink_tree.reversed(), std::move(paths)};
  if (!is_source_tree_pf(out.tree, out.sequence)) {
    throw std::logic_error("tau image does not park on the source tree");
  }
  return out;
}

TauResult tau_inverse(const RootedTree& source_tree, std::span<const Vertex> s) {
  if (source_tree.orientation() != Orientation::source) {
    throw std::invalid_argument("tau_inverse needs a source tree");
  }
  const int n = source_tree.order();
  require_full_length(n, s, "tau_inverse");
  if (!is_source_tree_pf(source_tree, s)) {
    throw NotParkingFunction("sequence does not park on the source tree");
  }
  const auto counts = preference_counts(n, s);
  std::vector<bool> saturated(n + 1, false);
  for (Vertex u = 1; u <= n; ++u) {
    int load = 0;
    source_tree.subtree(u).for_each([&](Vertex w) { load += counts[w]; });
    saturated[u] = load == source_tree.subtree(u).size();
  }
  auto paths = leaf_paths(source_tree, s, [&](Vertex u) { return !saturated[u]; });
  Permutation perm = reversal_permutation(n, paths);
  TauResult out{perm, permute(perm, s), source_tree.reversed(), std::move(paths)};

  TauResult forward = [&] {
    try {
      return tau(out.tree, out.sequence);
    } catch (const NotParkingFunction&) {
      throw NotInImage("preimage candidate does not park on the sink tree");
    } catch (const NotInImage&) {
      throw NotInImage("preimage candidate does not decompose into leaf paths");
    }
  }();
  if (forward.sequence != PreferenceSequence(s.begin(), s.end())) {
    throw NotInImage("sequence is not an image of tau");
  }
  return out;
}

std::vector<CycleDeletions> deletable_cycle_edges(const MappingFn& f, std::span<const Vertex> s) {
  const Digraph d = f.inverse_digraph();
  if (!is_parking_function(d, s)) {
    throw NotParkingFunction("sequence does not park on the inverse mapping digraph");
  }
  std::vector<CycleDeletions> out;
  for (auto& cycle : f.cycles()) {
    CycleDeletions cd;
    for (Vertex x : cycle) {
      const Edge e{f(x), x};
      if (is_parking_function(d.without_edge(e), s)) cd.deletable.push_back(e);
    }
    cd.cycle = std::move(cycle);
    out.push_back(std::move(cd));
  }
  return out;
}

std::vector<CycleDeletions> deletable_cycle_edges(const Digraph& inverse_mapping,
                                                  std::span<const Vertex> s) {
  return deletable_cycle_edges(MappingFn::from_inverse_digraph(inverse_mapping), s);
}

std::vector<int> first_appearance(int n, std::span<const Vertex> s) {
  std::vector<int> rank(n + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (rank.at(s[i]) == 0) rank[s[i]] = static_cast<int>(i) + 1;
  }
  return rank;
}

PsiResult psi(const MarkedTree& x) {
  const RootedTree& tree = x.tree;
  if (tree.orientation() != Orientation::source) throw std::invalid_argument("psi needs a source tree");
  const int n = tree.order();
  require_full_length(n, x.sequence, "psi");
  if (x.mark < 1 || x.mark > n) throw std::out_of_range("mark outside [1, n]");
  if (!is_source_tree_pf(tree, x.sequence)) {
    throw NotParkingFunction("sequence does not park on the source tree");
  }
  const auto counts = preference_counts(n, x.sequence);
  const auto rank = first_appearance(n, x.sequence);
  const auto path = tree.path_from_root(x.mark);

  PsiResult out{MappingFn(std::vector<Vertex>(n, 1)), x.sequence, {}, {}};
  std::vector<std::size_t> b_positions;
  int latest_full_rank = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const VertexSet sub = tree.subtree(path[i]);
    int load = 0;
    sub.for_each([&](Vertex w) { load += counts[w]; });
    if (load != sub.size()) continue;
    out.full_on_path.push_back(path[i]);
    const int r = rank[path[i]];
    if (r == 0) throw std::logic_error("filled subtree root is never preferred");
    if (r > latest_full_rank) {
      b_positions.push_back(i);
      out.rewired.push_back(path[i]);
    }
    latest_full_rank = std::max(latest_full_rank, r);
  }

  std::vector<Vertex> image = tree.parents();
  for (std::size_t j = 0; j < b_positions.size(); ++j) {
    const Vertex b = path[b_positions[j]];
    image[b - 1] = j + 1 < b_positions.size() ? path[b_positions[j + 1] - 1] : x.mark;
  }
  out.mapping = MappingFn(std::move(image));
  if (!is_parking_function(out.mapping.inverse_digraph(), x.sequence)) {
    throw std::logic_error("psi image does not park on the inverse mapping digraph");
  }
  return out;
}

MarkedTree psi_inverse(const MappingFn& f, std::span<const Vertex> s) {
  const int n = f.order();
  require_full_length(n, s, "psi_inverse");
  const auto rank = first_appearance(n, s);
  std::vector<Vertex> top;
  for (const auto& cd : deletable_cycle_edges(f, s)) {
    Vertex best = 0;
    for (const Edge& e : cd.deletable) {
      if (rank[e.to] == 0) throw std::logic_error("deletable edge ends at an unpreferred vertex");
      if (best == 0 || rank[e.to] > rank[best]) best = e.to;
    }
    if (best == 0) throw std::logic_error("cycle without a deletable edge");
    top.push_back(best);
  }
  std::sort(top.begin(), top.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });

  std::vector<Vertex> parent = f.image();
  for (std::size_t i = 0; i + 1 < top.size(); ++i) parent[top[i + 1] - 1] = f(top[i]);
  parent[top.front() - 1] = 0;
  MarkedTree out{RootedTree(top.front(), std::move(parent), Orientation::source),
                 PreferenceSequence(s.begin(), s.end()), f(top.back())};
  if (!is_source_tree_pf(out.tree, s)) {
    throw std::logic_error("psi_inverse result does not park on the source tree");
  }
  return out;
}

PreferenceSequence extend_parking_function(const Digraph& d, std::span<const Vertex> s,
                                           const std::vector<Edge>& avoid) {
  if (!is_parking_function(d, s)) throw NotParkingFunction("sequence does not park");
  const int n = d.order();
  const int m = static_cast<int>(s.size());
  std::vector<VertexSet> rows;
  for (Vertex v : s) rows.push_back(d.reachable_from(v));
  auto avoided = [&](Vertex a, Vertex b) {
    return std::binary_search(avoid.begin(), avoid.end(), Edge{a, b});
  };

  constexpr int kFar = std::numeric_limits<int>::max();
  VertexSet occupied;
  std::vector<int> cost(n + 1);
  std::vector<VertexSet> residual;
  for (int i = 0; i < m; ++i) {
    // 0-1 BFS through occupied vertices, weighting avoided edges by one.
    std::fill(cost.begin(), cost.end(), kFar);
    std::deque<Vertex> frontier{s[i]};
    cost[s[i]] = 0;
    VertexSet settled;
    VertexSet reachable_free;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop_front();
      if (settled.contains(u)) continue;
      settled.insert(u);
      if (!occupied.contains(u)) {
        reachable_free.insert(u);
        continue;
      }
      for (Vertex w : d.successors(u)) {
        const bool heavy = avoided(u, w);
        const int c = cost[u] + (heavy ? 1 : 0);
        if (c < cost[w]) {
          cost[w] = c;
          if (heavy) {
            frontier.push_back(w);
          } else {
            frontier.push_front(w);
          }
        }
      }
    }

    Vertex choice = 0;
    int best = kFar;
    reachable_free.for_each([&](Vertex x) {
      const VertexSet taken = occupied | VertexSet::single(x);
      residual.clear();
      for (int j = i + 1; j < m; ++j) residual.push_back(rows[j] - taken);
      if (!DriverMatching(residual, n).saturates_drivers()) return;
      if (cost[x] < best) {
        best = cost[x];
        choice = x;
      }
    });
    if (choice == 0) throw std::logic_error("no spot keeps the remaining drivers feasible");
    occupied.insert(choice);
  }

  PreferenceSequence out(s.begin(), s.end());
  (d.vertices() - occupied).for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

PreferenceSequence extend_sequence(const RootedTree& source_tree, std::span<const Vertex> s,
                                   Vertex mark) {
  if (source_tree.orientation() != Orientation::source) {
    throw std::invalid_argument("extend_sequence needs a source tree");
  }
  const auto path = source_tree.path_from_root(mark);
  std::vector<Edge> avoid;
  for (std::size_t i = 1; i < path.size(); ++i) avoid.push_back({path[i - 1], path[i]});
  std::sort(avoid.begin(), avoid.end());
  return extend_parking_function(source_tree.as_digraph(), s, avoid);
}

PreferenceSequence extend_sequence(const MappingFn& f, std::span<const Vertex> s) {
  std::vector<Edge> avoid;
  for (const auto& cycle : f.cycles()) {
    for (Vertex x : cycle) avoid.push_back({f(x), x});
  }
  std::sort(avoid.begin(), avoid.end());
  return extend_parking_function(f.inverse_digraph(), s, avoid);
}

PsiResult psi_nm(const MarkedTree& x) {
  if (x.mark < 1 || x.mark > x.tree.order()) throw std::out_of_range("mark outside [1, n]");
  MarkedTree full{x.tree, extend_sequence(x.tree, x.sequence, x.mark), x.mark};
  PsiResult out = psi(full);
  out.sequence = x.sequence;
  return out;
}

MarkedTree psi_nm_inverse(const MappingFn& f, std::span<const Vertex> s) {
  MarkedTree out = psi_inverse(f, extend_sequence(f, s));
  out.sequence.resize(s.size());
  return out;
}

}  // namespace pfg
