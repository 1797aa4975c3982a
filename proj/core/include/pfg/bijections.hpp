#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pfg/check.hpp"
#include "pfg/tree.hpp"

namespace pfg {

/// The input is not a parking function on the given graph.
class NotParkingFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input cannot have been produced by the forward map.
class NotInImage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One-line form: perm[v-1] is the image of v.
using Permutation = std::vector<Vertex>;

/// Cycle notation without fixed points, e.g. "(15)(23)(46)". Labels are
/// separated by spaces when some label has more than one digit. The identity
/// is "()".
std::string cycle_notation(const Permutation& perm);
PreferenceSequence permute(const Permutation& perm, std::span<const Vertex> s);

/// Result of the leaf-path reversal between sink and source trees.
struct TauResult {
  Permutation permutation;
  PreferenceSequence sequence;
  /// The tree on the other side (source tree for tau, sink tree for its inverse).
  RootedTree tree;
  /// Leaf paths P_1, P_2, ... ordered by leaf label; each runs leaf-first.
  std::vector<std::vector<Vertex>> paths;
};

/// Maps a length-n parking function on a sink tree to one on the reversed
/// source tree. The deterministic run highlights every edge used after a
/// failed attempt; inside each highlighted component the leaves are taken
/// in increasing order and each claims the shortest run toward the root
/// (skipping vertices claimed earlier) that is preferred by exactly as many
/// drivers as it has vertices. tau reverses every such run.
TauResult tau(const RootedTree& sink_tree, std::span<const Vertex> s);

/// Inverse of tau. Components are recovered on the source tree as the pieces
/// left after cutting every edge into a subtree preferred by exactly as many
/// drivers as it has vertices; the same leaf-path rule then rebuilds the
/// permutation. Throws NotInImage when the input is not an image of tau.
TauResult tau_inverse(const RootedTree& source_tree, std::span<const Vertex> s);

/// Cycle edges of an inverse mapping digraph whose removal keeps s a parking
/// function, found by deleting each cycle edge and rechecking.
struct CycleDeletions {
  std::vector<Vertex> cycle;
  std::vector<Edge> deletable;
};
std::vector<CycleDeletions> deletable_cycle_edges(const MappingFn& f, std::span<const Vertex> s);
/// Same, starting from the inverse mapping digraph itself.
std::vector<CycleDeletions> deletable_cycle_edges(const Digraph& inverse_mapping,
                                                  std::span<const Vertex> s);

/// Source tree, parking function on it, and a marked vertex.
struct MarkedTree {
  RootedTree tree;
  PreferenceSequence sequence;
  Vertex mark = 0;

  bool operator==(const MarkedTree&) const = default;
};

struct PsiResult {
  MappingFn mapping;
  PreferenceSequence sequence;
  /// Vertices on the root-to-mark path whose subtree is exactly filled.
  std::vector<Vertex> full_on_path;
  /// The members of full_on_path preferred later than every full ancestor,
  /// in path order. These become one cycle vertex per new component.
  std::vector<Vertex> rewired;
};

/// First index (1-based) at which each vertex appears in s; 0 if absent.
std::vector<int> first_appearance(int n, std::span<const Vertex> s);

/// Turns (source tree, length-n parking function, mark) into an inverse
/// mapping digraph on which the same sequence parks, by rewiring the
/// root-to-mark path at the `rewired` vertices.
PsiResult psi(const MarkedTree& x);
/// Inverse of psi. Throws NotParkingFunction for non-parking inputs.
MarkedTree psi_inverse(const MappingFn& f, std::span<const Vertex> s);

/// Extends a length-m parking function on a digraph to length n: drivers
/// park one by one at a spot that keeps the rest feasible, preferring spots
/// reached with the fewest `avoid` edges, then the smallest label; the free
/// spots are appended in increasing order.
PreferenceSequence extend_parking_function(const Digraph& d, std::span<const Vertex> s,
                                           const std::vector<Edge>& avoid);
/// Extension on a source tree avoiding the root-to-mark path edges.
PreferenceSequence extend_sequence(const RootedTree& source_tree, std::span<const Vertex> s,
                                   Vertex mark);
/// Extension on an inverse mapping digraph avoiding its cycle edges.
PreferenceSequence extend_sequence(const MappingFn& f, std::span<const Vertex> s);

/// psi for sequences of any length m <= n: extend, then apply psi. The
/// result carries the original length-m sequence.
PsiResult psi_nm(const MarkedTree& x);
/// Inverse of psi_nm; the returned sequence has the input's length.
MarkedTree psi_nm_inverse(const MappingFn& f, std::span<const Vertex> s);

}  // namespace pfg
