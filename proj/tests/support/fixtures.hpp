#pragma once

// The worked examples as library values.

#include "pfg/check.hpp"
#include "pfg/tree.hpp"

namespace pfg::fixtures {

inline Digraph branching() { return Digraph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 2}, {4, 5}}); }
inline PreferenceSequence branching_seq() { return {1, 1, 3, 2, 1}; }

// Source tree rooted at 3 and the inverse mapping digraph sharing s.
inline RootedTree shared_tree() { return RootedTree(3, {3, 1, 0, 1, 4, 3, 1}, Orientation::source); }
inline MappingFn shared_mapping() { return MappingFn({4, 1, 3, 1, 5, 3, 1}); }
inline PreferenceSequence shared_seq() { return {2, 3, 4, 1, 3, 5, 1}; }

// Root 4, 4 - 3, 3 - 1, 3 - 2.
inline RootedTree counter_tree(Orientation o) { return RootedTree(4, {3, 3, 4, 0}, o); }

// Sink tree rooted at 6: 1 -> 2 -> 3 -> 5 -> 6 and 4 -> 5.
inline RootedTree reversal_tree() { return RootedTree(6, {2, 3, 5, 5, 6, 0}, Orientation::sink); }
inline PreferenceSequence reversal_seq() { return {1, 4, 4, 2, 1, 3}; }

// Inverse mapping digraph with cycle 1 -> 4 -> 3 -> 2 -> 1.
inline MappingFn four_cycle_mapping() { return MappingFn({2, 3, 4, 1, 4, 3, 2}); }
inline PreferenceSequence four_cycle_seq() { return {1, 1, 2, 2, 3, 3, 3}; }

}  // namespace pfg::fixtures
