#include <algorithm>
#include <set>

#include "pfg/bijections.hpp"
#include "pfg/check.hpp"
#include "pfg/enumerate.hpp"
#include "pfg/parallel.hpp"

namespace pfg {

namespace {

class ShardReports {
 public:
  explicit ShardReports(int shards) : reports_(shards) {}

  SweepReport& operator[](int shard) { return reports_[shard]; }

  SweepReport merged() const {
    SweepReport out;
    for (const auto& r : reports_) {
      out.checked += r.checked;
      out.failures += r.failures;
      if (out.first_failure.empty()) out.first_failure = r.first_failure;
    }
    return out;
  }

 private:
  std::vector<SweepReport> reports_;
};

void fail(SweepReport& r, const std::string& what) {
  ++r.failures;
  if (r.first_failure.empty()) r.first_failure = what;
}

std::uint64_t encode(std::span<const Vertex> values, int base) {
  std::uint64_t code = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) code = code * base + (*it - 1);
  return code;
}

std::string describe(const RootedTree& t, std::span<const Vertex> s) {
  return "tree " + format_tree(t) + " s=" + format_sequence(s);
}

}  // namespace

SweepReport sweep_tau_roundtrip(int n, int workers) {
  const TreeFamily trees(n, Orientation::sink);
  ShardReports reports(effective_workers(trees.size(), workers));
  parallel_blocks(trees.size(), workers, [&](int shard, std::uint64_t begin, std::uint64_t end) {
    SweepReport& rep = reports[shard];
    for (std::uint64_t i = begin; i < end; ++i) {
      const RootedTree tree = trees.at(i);
      const Digraph d = tree.as_digraph();
      std::set<PreferenceSequence> images;
      std::uint64_t parked = 0;
      for_each_sequence(n, n, [&](std::span<const Vertex> s) {
        const auto run = simulate_deterministic(d, s);
        if (!run) return;
        ++rep.checked;
        ++parked;
        try {
          const TauResult fwd = tau(tree, s);
          VertexSet touched;
          for (const Edge& e : run->highlighted) {
            touched.insert(e.from);
            touched.insert(e.to);
          }
          for (Vertex v = 1; v <= n; ++v) {
            const Vertex w = fwd.permutation[v - 1];
            if (fwd.permutation[w - 1] != v) return fail(rep, "not an involution: " + describe(tree, s));
            if (!touched.contains(v) && w != v) return fail(rep, "moves a fixed vertex: " + describe(tree, s));
          }
          images.insert(fwd.sequence);
          const TauResult back = tau_inverse(fwd.tree, fwd.sequence);
          if (back.tree != tree || back.sequence != PreferenceSequence(s.begin(), s.end()) ||
              back.permutation != fwd.permutation) {
            fail(rep, "round trip differs: " + describe(tree, s));
          }
        } catch (const std::exception& e) {
          fail(rep, describe(tree, s) + ": " + e.what());
        }
      });
      if (images.size() != parked) fail(rep, "tau not injective on " + format_tree(tree));
    }
  });
  return reports.merged();
}

SweepReport sweep_psi_roundtrip(int n, int m, int workers) {
  const TreeFamily trees(n, Orientation::source);
  const int shards = effective_workers(trees.size(), workers);
  ShardReports reports(shards);
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> keys(shards);
  parallel_blocks(trees.size(), workers, [&](int shard, std::uint64_t begin, std::uint64_t end) {
    SweepReport& rep = reports[shard];
    for (std::uint64_t i = begin; i < end; ++i) {
      const RootedTree tree = trees.at(i);
      const Digraph tree_graph = tree.as_digraph();
      for_each_sequence(n, m, [&](std::span<const Vertex> s) {
        if (!is_source_tree_pf(tree, s)) return;
        const auto rank = first_appearance(n, s);
        for (Vertex v = 1; v <= n; ++v) {
          ++rep.checked;
          const MarkedTree x{tree, PreferenceSequence(s.begin(), s.end()), v};
          try {
            const PsiResult fwd = psi_nm(x);
            const Digraph image = fwd.mapping.inverse_digraph();
            if (!is_parking_function(image, s)) {
              fail(rep, "image does not park: " + describe(tree, s));
              continue;
            }
            if (psi_nm_inverse(fwd.mapping, s) != x) {
              fail(rep, "round trip differs: " + describe(tree, s) + " v=" + std::to_string(v));
              continue;
            }
            keys[shard].emplace_back(encode(fwd.mapping.image(), n), encode(s, n));
            if (m != n) continue;
            // Each cycle holds one rewired vertex, and it outranks every other
            // target of a deletable cycle edge there.
            for (const auto& cd : deletable_cycle_edges(fwd.mapping, s)) {
              std::vector<Vertex> rewired;
              for (Vertex c : cd.cycle) {
                if (std::find(fwd.rewired.begin(), fwd.rewired.end(), c) != fwd.rewired.end()) {
                  rewired.push_back(c);
                }
              }
              const bool ok = rewired.size() == 1 &&
                              std::all_of(cd.deletable.begin(), cd.deletable.end(), [&](const Edge& e) {
                                return e.to == rewired[0] || rank[e.to] < rank[rewired[0]];
                              }) &&
                              std::any_of(cd.deletable.begin(), cd.deletable.end(),
                                          [&](const Edge& e) { return e.to == rewired[0]; });
              if (!ok) fail(rep, "rewired vertex is not the top deletable target: " + describe(tree, s));
            }
            // Edges needed on the tree stay needed on the mapping digraph.
            for (const Edge& e : tree_graph.edges()) {
              if (!image.has_edge(e)) continue;
              if (!is_parking_function(tree_graph.without_edge(e), s) &&
                  is_parking_function(image.without_edge(e), s)) {
                fail(rep, "necessary edge became optional: " + describe(tree, s));
              }
            }
          } catch (const std::exception& e) {
            fail(rep, describe(tree, s) + " v=" + std::to_string(v) + ": " + e.what());
          }
        }
      });
    }
  });
  SweepReport out = reports.merged();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
  for (auto& k : keys) all.insert(all.end(), k.begin(), k.end());
  std::sort(all.begin(), all.end());
  const auto distinct = static_cast<std::uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
  if (distinct != all.size()) fail(out, "images are not distinct");
  const BigInt target = family_sum(Family::inverse_mappings, n, m, workers, SweepLimits{n, n}).value;
  if (BigInt(distinct) != target) {
    fail(out, "image count " + std::to_string(distinct) + " != inverse-mapping total " +
                  target.str());
  }
  return out;
}

SweepReport sweep_cycle_deletion(int n, int workers) {
  const MappingFamily maps(n);
  ShardReports reports(effective_workers(maps.size(), workers));
  parallel_blocks(maps.size(), workers, [&](int shard, std::uint64_t begin, std::uint64_t end) {
    SweepReport& rep = reports[shard];
    for (std::uint64_t i = begin; i < end; ++i) {
      const MappingFn f = maps.at(i);
      const Digraph d = f.inverse_digraph();
      for (int m = 0; m <= n; ++m) {
        for_each_sequence(n, m, [&](std::span<const Vertex> s) {
          if (!is_parking_function(d, s)) return;
          ++rep.checked;
          for (const auto& cd : deletable_cycle_edges(f, s)) {
            if (cd.deletable.empty()) {
              fail(rep, "no deletable edge on a cycle of f=" + format_mapping(f) +
                            " s=" + format_sequence(s));
            }
          }
        });
      }
    }
  });
  return reports.merged();
}

}  // namespace pfg
