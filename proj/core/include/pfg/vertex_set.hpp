#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfg {

/// Vertices are 1-based labels in [1, n].
using Vertex = int;

/// Upper bound on the vertex count supported by VertexSet.
inline constexpr int kMaxVertices = 64;

/// A set of vertices drawn from [1, kMaxVertices], stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet single(Vertex v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  bool contains(Vertex v) const { return (bits_ >> index(v)) & 1U; }
  void insert(Vertex v) { bits_ |= std::uint64_t{1} << index(v); }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << index(v)); }

  /// Smallest member; 0 when empty.
  constexpr Vertex min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b) + 1);
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  static int index(Vertex v) {
    if (v < 1 || v > kMaxVertices) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside supported range");
    }
    return v - 1;
  }

  std::uint64_t bits_ = 0;
};

}  // namespace pfg
