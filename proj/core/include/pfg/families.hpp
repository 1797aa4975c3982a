#pragma once

#include <cstdint>
#include <iterator>

#include <boost/multiprecision/cpp_int.hpp>

#include "pfg/tree.hpp"

namespace pfg {

using BigInt = boost::multiprecision::cpp_int;

/// All n^(n-1) rooted labeled trees on [n], addressed by a dense index so the
/// index space can be split between workers. Index = (root-1) * n^(n-2) +
/// rank of the Pruefer code in base n.
class TreeFamily {
 public:
  TreeFamily(int n, Orientation orientation);

  int order() const { return n_; }
  Orientation orientation() const { return orientation_; }
  std::uint64_t size() const { return size_; }
  RootedTree at(std::uint64_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = RootedTree;
    using difference_type = std::ptrdiff_t;
    iterator(const TreeFamily* fam, std::uint64_t i) : fam_(fam), i_(i) {}
    RootedTree operator*() const { return fam_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const TreeFamily* fam_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  int n_;
  Orientation orientation_;
  std::uint64_t codes_;  // n^(n-2), 1 when n <= 2
  std::uint64_t size_;
};

/// All n^n functions [n] -> [n]; index digits (base n, least significant
/// first) give f(1), f(2), ... minus one.
class MappingFamily {
 public:
  explicit MappingFamily(int n);

  int order() const { return n_; }
  std::uint64_t size() const { return size_; }
  MappingFn at(std::uint64_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MappingFn;
    using difference_type = std::ptrdiff_t;
    iterator(const MappingFamily* fam, std::uint64_t i) : fam_(fam), i_(i) {}
    MappingFn operator*() const { return fam_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const MappingFamily* fam_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  int n_;
  std::uint64_t size_;
};

/// Decodes a Pruefer code (entries in [1, n], length n-2) into the parent
/// array of the tree rooted at `root`.
RootedTree tree_from_pruefer(int n, const std::vector<Vertex>& code, Vertex root,
                             Orientation orientation);

/// Path rooted at an end. As a digraph both orientations give 1 -> 2 -> ... -> n:
/// the sink path is rooted at n, the source path at 1.
RootedTree path_tree(int n, Orientation orientation);
/// Star with center 1 as the root.
RootedTree star_tree(int n, Orientation orientation);
/// f(i) = i + 1, f(n) = 1.
MappingFn cycle_mapping(int n);
MappingFn identity_mapping(int n);

BigInt falling_factorial(std::int64_t a, int k);
BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt power(std::int64_t base, int exp);

/// (n-m+1)(n+1)^(m-1): parking functions of length m on the n-vertex path.
BigInt classical_count(int n, int m);
/// Sum over i of C(m,i) (n-1)^(m-i falling): the source-star count.
BigInt source_star_count(int n, int m);
/// n^(m falling) + C(m,2) (n-1)^(m-1 falling): lower bound over sink trees.
BigInt sink_star_lower(int n, int m);
BigInt catalan(int n);

}  // namespace pfg
