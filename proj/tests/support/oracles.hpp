#pragma once

// Slow reference implementations that share no code with the library beyond
// its plain value types. Tests compare the library against these.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pfg/digraph.hpp"

namespace pfg::oracle {

/// Adjacency lists rebuilt straight from the edge list.
std::vector<std::vector<Vertex>> adjacency(const Digraph& d);

/// R(A) by repeated one-step expansion until nothing changes.
std::uint64_t reach_mask(const Digraph& d, std::uint64_t start);

/// Runs every execution of the nondeterministic parking process. A driver
/// standing on an occupied vertex may step along any out-edge; walks longer
/// than n^2 steps are abandoned. True iff some execution parks everyone.
bool process_parks(const Digraph& d, const std::vector<Vertex>& s);

/// Hall condition checked over all 2^n subsets B.
bool hall_holds(const Digraph& d, const std::vector<Vertex>& s);

/// Distinct R(B) over all 2^n subsets.
std::set<std::uint64_t> filters_by_subsets(const Digraph& d);

/// |{j : s_j >= i}| <= n - i + 1 for every i.
bool classical_condition(int n, const std::vector<Vertex>& s);

/// Every s in [n]^m, lexicographic.
std::vector<std::vector<Vertex>> all_sequences(int n, int m);

/// Number of s in [n]^m on which process_parks holds.
std::uint64_t naive_count(const Digraph& d, int m);

/// Every parent array on [n] (0 marks the root) whose parent pointers reach
/// the root without cycling. n^(n-1) of them.
std::vector<std::vector<Vertex>> all_parent_arrays(int n);

/// Random digraph on [n] with each ordered pair, loops included, present
/// with probability p.
Digraph random_digraph(int n, double p, std::mt19937_64& rng);

}  // namespace pfg::oracle
