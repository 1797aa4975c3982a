#include "oracles.hpp"

#include <functional>

namespace pfg::oracle {

std::vector<std::vector<Vertex>> adjacency(const Digraph& d) {
  std::vector<std::vector<Vertex>> adj(d.order() + 1);
  for (const Edge& e : d.edges()) adj[e.from].push_back(e.to);
  return adj;
}

std::uint64_t reach_mask(const Digraph& d, std::uint64_t start) {
  const auto adj = adjacency(d);
  std::uint64_t cur = start;
  while (true) {
    std::uint64_t next = cur;
    for (int v = 1; v <= d.order(); ++v) {
      if (!(cur >> (v - 1) & 1)) continue;
      for (Vertex w : adj[v]) next |= std::uint64_t{1} << (w - 1);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

bool process_parks(const Digraph& d, const std::vector<Vertex>& s) {
  const int n = d.order();
  const auto adj = adjacency(d);
  const int max_steps = n * n;
  std::vector<bool> occupied(n + 1, false);

  std::function<bool(std::size_t)> drive = [&](std::size_t i) -> bool {
    if (i == s.size()) return true;
    // Positions the driver can be standing on after t steps, still looking.
    std::vector<bool> here(n + 1, false);
    std::vector<bool> tried(n + 1, false);
    here[s[i]] = true;
    for (int t = 0; t <= max_steps; ++t) {
      std::vector<bool> next(n + 1, false);
      bool any = false;
      for (int v = 1; v <= n; ++v) {
        if (!here[v]) continue;
        if (!occupied[v]) {
          if (tried[v]) continue;
          tried[v] = true;
          occupied[v] = true;
          const bool ok = drive(i + 1);
          occupied[v] = false;
          if (ok) return true;
          continue;
        }
        for (Vertex w : adj[v]) {
          next[w] = true;
          any = true;
        }
      }
      if (!any) break;
      here = std::move(next);
    }
    return false;
  };
  if (static_cast<int>(s.size()) > n) return false;
  return drive(0);
}

bool hall_holds(const Digraph& d, const std::vector<Vertex>& s) {
  const int n = d.order();
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const std::uint64_t r = reach_mask(d, b);
    int demand = 0;
    for (Vertex v : s) demand += (r >> (v - 1)) & 1;
    if (demand > __builtin_popcountll(r)) return false;
  }
  return true;
}

std::set<std::uint64_t> filters_by_subsets(const Digraph& d) {
  std::set<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << d.order()); ++b) out.insert(reach_mask(d, b));
  return out;
}

bool classical_condition(int n, const std::vector<Vertex>& s) {
  for (int i = 1; i <= n; ++i) {
    int at_least = 0;
    for (Vertex v : s) at_least += v >= i;
    if (at_least > n - i + 1) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> all_sequences(int n, int m) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> s(m, 1);
  while (true) {
    out.push_back(s);
    int i = m - 1;
    while (i >= 0 && s[i] == n) s[i--] = 1;
    if (i < 0) return out;
    ++s[i];
  }
}

std::uint64_t naive_count(const Digraph& d, int m) {
  std::uint64_t count = 0;
  for (const auto& s : all_sequences(d.order(), m)) count += process_parks(d, s);
  return count;
}

std::vector<std::vector<Vertex>> all_parent_arrays(int n) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& raw : all_sequences(n + 1, n)) {
    // Entries 1..n+1 shifted down so 0 can mark the root.
    std::vector<Vertex> p(n);
    int roots = 0;
    for (int i = 0; i < n; ++i) {
      p[i] = raw[i] - 1;
      roots += p[i] == 0;
      if (p[i] == i + 1) roots = 99;
    }
    if (roots != 1) continue;
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      int u = v;
      for (int steps = 0; u != 0; ++steps) {
        if (steps > n) {
          ok = false;
          break;
        }
        u = p[u - 1];
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Digraph(n, edges);
}

}  // namespace pfg::oracle
