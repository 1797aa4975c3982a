#include "pfg/families.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace pfg {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("family index space exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

void require_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("family order must lie in [1, 64], got " + std::to_string(n));
  }
}

}  // namespace

TreeFamily::TreeFamily(int n, Orientation orientation) : n_(n), orientation_(orientation) {
  require_order(n);
  codes_ = n <= 2 ? 1 : checked_pow(n, n - 2);
  size_ = codes_ * static_cast<std::uint64_t>(n);
}

RootedTree TreeFamily::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("tree index out of range");
  const Vertex root = static_cast<Vertex>(index / codes_) + 1;
  std::uint64_t rank = index % codes_;
  std::vector<Vertex> code(n_ > 2 ? n_ - 2 : 0);
  for (Vertex& c : code) {
    c = static_cast<Vertex>(rank % n_) + 1;
    rank /= n_;
  }
  return tree_from_pruefer(n_, code, root, orientation_);
}

MappingFamily::MappingFamily(int n) : n_(n) {
  require_order(n);
  size_ = checked_pow(n, n);
}

MappingFn MappingFamily::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("mapping index out of range");
  std::vector<Vertex> image(n_);
  for (Vertex& y : image) {
    y = static_cast<Vertex>(index % n_) + 1;
    index /= n_;
  }
  return MappingFn(std::move(image));
}

RootedTree tree_from_pruefer(int n, const std::vector<Vertex>& code, Vertex root,
                             Orientation orientation) {
  require_order(n);
  if (static_cast<int>(code.size()) != std::max(n - 2, 0)) {
    throw std::invalid_argument("Pruefer code must have length n-2");
  }
  std::vector<std::vector<Vertex>> adj(n);
  if (n == 2) {
    adj[0].push_back(2);
    adj[1].push_back(1);
  } else if (n > 2) {
    std::vector<int> degree(n, 1);
    for (Vertex c : code) {
      if (c < 1 || c > n) throw std::out_of_range("Pruefer entry outside [1, n]");
      ++degree[c - 1];
    }
    std::set<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v) {
      if (degree[v - 1] == 1) leaves.insert(v);
    }
    for (Vertex c : code) {
      const Vertex leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      adj[leaf - 1].push_back(c);
      adj[c - 1].push_back(leaf);
      if (--degree[c - 1] == 1) leaves.insert(c);
    }
    const Vertex u = *leaves.begin();
    const Vertex w = *std::next(leaves.begin());
    adj[u - 1].push_back(w);
    adj[w - 1].push_back(u);
  }
  std::vector<Vertex> parent(n, -1);
  parent[root - 1] = 0;
  std::vector<Vertex> queue{root};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Vertex u = queue[k];
    for (Vertex w : adj[u - 1]) {
      if (parent[w - 1] == -1) {
        parent[w - 1] = u;
        queue.push_back(w);
      }
    }
  }
  return RootedTree(root, std::move(parent), orientation);
}

RootedTree path_tree(int n, Orientation orientation) {
  require_order(n);
  std::vector<Vertex> parent(n);
  if (orientation == Orientation::sink) {
    for (Vertex v = 1; v <= n; ++v) parent[v - 1] = v == n ? 0 : v + 1;
    return RootedTree(n, std::move(parent), orientation);
  }
  for (Vertex v = 1; v <= n; ++v) parent[v - 1] = v - 1;
  return RootedTree(1, std::move(parent), orientation);
}

RootedTree star_tree(int n, Orientation orientation) {
  require_order(n);
  std::vector<Vertex> parent(n, 1);
  parent[0] = 0;
  return RootedTree(1, std::move(parent), orientation);
}

MappingFn cycle_mapping(int n) {
  require_order(n);
  std::vector<Vertex> image(n);
  for (Vertex i = 1; i <= n; ++i) image[i - 1] = i % n + 1;
  return MappingFn(std::move(image));
}

MappingFn identity_mapping(int n) {
  require_order(n);
  std::vector<Vertex> image(n);
  for (Vertex i = 1; i <= n; ++i) image[i - 1] = i;
  return MappingFn(std::move(image));
}

BigInt falling_factorial(std::int64_t a, int k) {
  if (k < 0) throw std::invalid_argument("falling factorial needs k >= 0");
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (a - i);
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt factorial(int n) { return falling_factorial(n, n); }

BigInt power(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt classical_count(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("classical_count needs 0 <= m <= n");
  if (m == 0) return 1;
  return BigInt(n - m + 1) * power(n + 1, m - 1);
}

BigInt source_star_count(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("source_star_count needs 0 <= m <= n");
  BigInt total = 0;
  for (int i = 0; i <= m; ++i) total += binomial(m, i) * falling_factorial(n - 1, m - i);
  return total;
}

BigInt sink_star_lower(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("sink_star_lower needs 0 <= m <= n");
  BigInt r = falling_factorial(n, m);
  if (m >= 1) r += binomial(m, 2) * falling_factorial(n - 1, m - 1);
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace pfg
