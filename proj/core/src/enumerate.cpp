#include "pfg/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>

#include "pfg/check.hpp"
#include "pfg/matching.hpp"
#include "pfg/parallel.hpp"

namespace pfg {

namespace {

struct MultisetCounts {
  std::vector<std::uint64_t> weighted;
  std::vector<std::uint64_t> distinct;
};

class MultisetWalker {
 public:
  MultisetWalker(const Digraph& d, int max_m)
      : d_(d), max_m_(max_m), matcher_(d.order()), multiplicity_(d.order() + 1, 0) {
    out_.weighted.assign(max_m + 1, 0);
    out_.distinct.assign(max_m + 1, 0);
    for (Vertex v = 1; v <= d.order(); ++v) rows_.push_back(d.reachable_from(v));
  }

  MultisetCounts run() {
    visit(1, 0, 1);
    return out_;
  }

 private:
  void visit(Vertex first, int len, std::uint64_t orderings) {
    out_.weighted[len] += orderings;
    out_.distinct[len] += 1;
    if (len == max_m_) return;
    for (Vertex v = first; v <= d_.order(); ++v) {
      if (!matcher_.push(rows_[v - 1])) continue;
      ++multiplicity_[v];
      // len+1 choose positions: orderings * (len+1) / multiplicity stays integral.
      visit(v, len + 1, orderings * static_cast<std::uint64_t>(len + 1) / multiplicity_[v]);
      --multiplicity_[v];
      matcher_.pop();
    }
  }

  const Digraph& d_;
  int max_m_;
  IncrementalMatcher matcher_;
  std::vector<VertexSet> rows_;
  std::vector<int> multiplicity_;
  MultisetCounts out_;
};

MultisetCounts walk_multisets(const Digraph& d, int max_m) {
  if (max_m < 0) throw std::invalid_argument("length must be non-negative");
  max_m = std::min(max_m, d.order());
  if (max_m > 20) throw CapExceeded("sequence length above 20 overflows the ordering weights");
  return MultisetWalker(d, max_m).run();
}

void require_family_cap(int n, const SweepLimits& limits) {
  if (n > limits.family_cap) {
    throw CapExceeded("family sweep on n = " + std::to_string(n) + " exceeds the cap n <= " +
                      std::to_string(limits.family_cap));
  }
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::sink_trees:
      return "sink-trees";
    case Family::source_trees:
      return "source-trees";
    case Family::mappings:
      return "mappings";
    case Family::inverse_mappings:
      return "inverse-mappings";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::sink_trees, Family::source_trees, Family::mappings,
                   Family::inverse_mappings}) {
    if (text == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::uint64_t family_size(Family f, int n) {
  switch (f) {
    case Family::sink_trees:
    case Family::source_trees:
      return TreeFamily(n, Orientation::sink).size();
    case Family::mappings:
    case Family::inverse_mappings:
      return MappingFamily(n).size();
  }
  return 0;
}

Digraph family_member(Family f, int n, std::uint64_t index) {
  switch (f) {
    case Family::sink_trees:
      return TreeFamily(n, Orientation::sink).at(index).as_digraph();
    case Family::source_trees:
      return TreeFamily(n, Orientation::source).at(index).as_digraph();
    case Family::mappings:
      return MappingFamily(n).at(index).mapping_digraph();
    case Family::inverse_mappings:
      return MappingFamily(n).at(index).inverse_digraph();
  }
  throw std::invalid_argument("unknown family");
}

std::vector<std::uint64_t> count_pf_by_length(const Digraph& d, int max_m) {
  auto counts = walk_multisets(d, max_m).weighted;
  counts.resize(max_m + 1, 0);
  return counts;
}

std::vector<std::uint64_t> count_increasing_pf_by_length(const Digraph& d, int max_m) {
  auto counts = walk_multisets(d, max_m).distinct;
  counts.resize(max_m + 1, 0);
  return counts;
}

BigInt count_pf(const Digraph& d, int m, const SweepLimits& limits) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (d.order() > limits.digraph_cap) {
    throw CapExceeded("single-digraph count on n = " + std::to_string(d.order()) +
                      " exceeds the cap n <= " + std::to_string(limits.digraph_cap));
  }
  if (m > d.order()) return 0;
  return BigInt(count_pf_by_length(d, m)[m]);
}

std::uint64_t count_parking_distributions(const Digraph& d, int m) {
  const int n = d.order();
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (m > n) return 0;
  std::uint64_t total = 0;
  if (n == 0) return m == 0 ? 1 : 0;
  std::vector<int> counts(n, 0);
  // Compositions of m into n non-negative parts.
  std::function<void(int, int)> place = [&](int idx, int left) {
    if (idx == n - 1) {
      counts[idx] = left;
      if (is_parking_distribution(d, ParkingDistribution(counts))) ++total;
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[idx] = c;
      place(idx + 1, left - c);
    }
  };
  place(0, m);
  return total;
}

void for_each_sequence(int n, int m, const std::function<void(std::span<const Vertex>)>& fn) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  std::vector<Vertex> s(m, 1);
  if (m > 0 && n < 1) return;
  while (true) {
    fn(s);
    int k = m - 1;
    while (k >= 0 && s[k] == n) s[k--] = 1;
    if (k < 0) return;
    ++s[k];
  }
}

std::vector<std::vector<std::uint64_t>> per_graph_counts(Family f, int n, int workers,
                                                         const SweepLimits& limits) {
  require_family_cap(n, limits);
  const std::uint64_t size = family_size(f, n);
  std::vector<std::vector<std::uint64_t>> out(size);
  parallel_blocks(size, workers, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      out[i] = count_pf_by_length(family_member(f, n, i), n);
    }
  });
  return out;
}

std::vector<CountResult> family_sums(Family f, int n, int workers, const SweepLimits& limits) {
  require_family_cap(n, limits);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t size = family_size(f, n);
  const int shards = effective_workers(size, workers);
  std::vector<std::vector<BigInt>> shard_sums(shards, std::vector<BigInt>(n + 1, 0));
  parallel_blocks(size, workers, [&](int shard, std::uint64_t begin, std::uint64_t end) {
    std::vector<BigInt>& acc = shard_sums[shard];
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto counts = count_pf_by_length(family_member(f, n, i), n);
      for (int m = 0; m <= n; ++m) acc[m] += counts[m];
    }
  });
  const double elapsed = millis_since(start);
  std::vector<CountResult> out;
  for (int m = 0; m <= n; ++m) {
    CountResult r;
    r.family = f;
    r.n = n;
    r.m = m;
    r.instances = size;
    r.millis = elapsed;
    for (const auto& s : shard_sums) {
      r.shard_values.push_back(s[m]);
      r.value += s[m];
    }
    out.push_back(std::move(r));
  }
  return out;
}

CountResult family_sum(Family f, int n, int m, int workers, const SweepLimits& limits) {
  if (m < 0 || m > n) throw std::invalid_argument("family_sum needs 0 <= m <= n");
  return family_sums(f, n, workers, limits)[m];
}

bool IdentityReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.pass; });
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "tilde-nm",      "sink-nm",       "tree-inequality", "extremal-bounds",
      "mapping-bounds", "catalan-distributions", "tau-roundtrip", "psi-roundtrip",
      "cycle-deletion"};
  return names;
}

namespace {

std::string str(const BigInt& v) { return v.str(); }

IntRange clip_m(std::optional<IntRange> m_range, int n) {
  IntRange r = m_range.value_or(IntRange{0, n});
  return {std::max(r.lo, 0), std::min(r.hi, n)};
}

void verify_orientation_pair(IdentityReport& rep, Family tree_family, Family map_family,
                             IntRange n_range, std::optional<IntRange> m_range, int workers,
                             const SweepLimits& limits) {
  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    const auto trees = family_sums(tree_family, n, workers, limits);
    const auto maps = family_sums(map_family, n, workers, limits);
    const IntRange ms = clip_m(m_range, n);
    for (int m = ms.lo; m <= ms.hi; ++m) {
      const BigInt lhs = BigInt(n) * trees[m].value;
      const BigInt& rhs = maps[m].value;
      rep.rows.push_back({n, m, str(lhs), str(rhs), lhs == rhs,
                          "F=" + str(trees[m].value)});
    }
  }
}

void verify_tree_inequality(IdentityReport& rep, IntRange n_range, int workers,
                            const SweepLimits& limits) {
  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    const auto sink = per_graph_counts(Family::sink_trees, n, workers, limits);
    const auto source = per_graph_counts(Family::source_trees, n, workers, limits);
    const TreeFamily trees(n, Orientation::sink);
    BigInt sink_total = 0;
    BigInt source_total = 0;
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < trees.size(); ++i) {
      const std::uint64_t a = sink[i][n];
      const std::uint64_t b = source[i][n];
      sink_total += a;
      source_total += b;
      const bool path = trees.at(i).is_path();
      if (a > b || (a == b) != path) ++violations;
    }
    const bool equal_expected = n <= 2;
    const bool pass = violations == 0 && (sink_total == source_total) == equal_expected &&
                      sink_total <= source_total;
    rep.rows.push_back({n, n, str(sink_total), str(source_total), pass,
                        "tree violations=" + std::to_string(violations)});
  }
}

void verify_extremal_bounds(IdentityReport& rep, IntRange n_range,
                            std::optional<IntRange> m_range, int workers,
                            const SweepLimits& limits) {
  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    const auto source = per_graph_counts(Family::source_trees, n, workers, limits);
    const auto sink = per_graph_counts(Family::sink_trees, n, workers, limits);
    const TreeFamily trees(n, Orientation::source);
    const IntRange ms = clip_m(m_range, n);
    for (int m = ms.lo; m <= ms.hi; ++m) {
      const BigInt lower = source_star_count(n, m);
      const BigInt upper = classical_count(n, m);
      const BigInt sink_lower = sink_star_lower(n, m);
      std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
      std::uint64_t hi = 0;
      std::uint64_t violations = 0;
      for (std::uint64_t i = 0; i < trees.size(); ++i) {
        const RootedTree t = trees.at(i);
        const BigInt p(source[i][m]);
        const BigInt q(sink[i][m]);
        lo = std::min(lo, source[i][m]);
        hi = std::max(hi, source[i][m]);
        if (p < lower || p > upper) ++violations;
        if (t.is_path() && p != upper) ++violations;
        if (t.is_star() && p != lower) ++violations;
        if (q < sink_lower || q > upper) ++violations;
      }
      const bool pass = violations == 0 && BigInt(lo) == lower && BigInt(hi) == upper;
      rep.rows.push_back({n, m, std::to_string(lo), std::to_string(hi), pass,
                          "bounds=[" + str(lower) + "," + str(upper) +
                              "] violations=" + std::to_string(violations)});
    }
  }
}

void verify_mapping_bounds(IdentityReport& rep, IntRange n_range,
                           std::optional<IntRange> m_range, int workers,
                           const SweepLimits& limits) {
  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    const auto inverse = per_graph_counts(Family::inverse_mappings, n, workers, limits);
    const auto forward = per_graph_counts(Family::mappings, n, workers, limits);
    const MappingFamily maps(n);
    std::vector<std::uint64_t> cycles;
    std::uint64_t identity = 0;
    for (std::uint64_t i = 0; i < maps.size(); ++i) {
      const MappingFn f = maps.at(i);
      const auto cyc = f.cycles();
      if (cyc.size() == 1 && static_cast<int>(cyc.front().size()) == n) cycles.push_back(i);
      if (f == identity_mapping(n)) identity = i;
    }
    const IntRange ms = clip_m(m_range, n);
    for (int m = ms.lo; m <= ms.hi; ++m) {
      const BigInt lower = factorial(m);
      const BigInt upper = power(n, m);
      // Distinct preferences always park, so n falling m is the true floor.
      const BigInt floor = falling_factorial(n, m);
      std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
      std::uint64_t hi = 0;
      std::uint64_t violations = 0;
      for (const auto* table : {&inverse, &forward}) {
        for (std::uint64_t i = 0; i < maps.size(); ++i) {
          const BigInt p((*table)[i][m]);
          lo = std::min(lo, (*table)[i][m]);
          hi = std::max(hi, (*table)[i][m]);
          if (p < lower || p > upper) ++violations;
        }
        for (std::uint64_t i : cycles) {
          if (BigInt((*table)[i][m]) != upper) ++violations;
        }
        if (BigInt((*table)[identity][m]) != floor) ++violations;
      }
      const bool pass = violations == 0 && BigInt(hi) == upper && BigInt(lo) == floor;
      rep.rows.push_back({n, m, std::to_string(lo), std::to_string(hi), pass,
                          "bounds=[" + str(lower) + "," + str(upper) + "] identity=" +
                              str(floor) + " violations=" + std::to_string(violations)});
    }
  }
}

void verify_catalan(IdentityReport& rep, IntRange n_range) {
  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    const std::uint64_t count = count_parking_distributions(path_digraph(n), n);
    const BigInt expected = catalan(n);
    rep.rows.push_back({n, n, std::to_string(count), str(expected), BigInt(count) == expected,
                        "parking distributions on the path"});
  }
}

IdentityRow sweep_row(int n, int m, const SweepReport& r) {
  return {n, m, std::to_string(r.checked), std::to_string(r.failures), r.failures == 0,
          r.first_failure.empty() ? "checked vs failures" : r.first_failure};
}

}  // namespace

IdentityReport verify_identity(std::string_view name, IntRange n_range,
                               std::optional<IntRange> m_range, int workers,
                               const SweepLimits& limits) {
  IdentityReport rep;
  rep.identity = std::string(name);
  if (name == "tilde-nm") {
    verify_orientation_pair(rep, Family::source_trees, Family::inverse_mappings, n_range,
                            m_range, workers, limits);
  } else if (name == "sink-nm") {
    verify_orientation_pair(rep, Family::sink_trees, Family::mappings, n_range, m_range, workers,
                            limits);
  } else if (name == "tree-inequality") {
    verify_tree_inequality(rep, n_range, workers, limits);
  } else if (name == "extremal-bounds") {
    verify_extremal_bounds(rep, n_range, m_range, workers, limits);
  } else if (name == "mapping-bounds") {
    verify_mapping_bounds(rep, n_range, m_range, workers, limits);
  } else if (name == "catalan-distributions") {
    verify_catalan(rep, n_range);
  } else if (name == "tau-roundtrip") {
    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
      require_family_cap(n, limits);
      rep.rows.push_back(sweep_row(n, n, sweep_tau_roundtrip(n, workers)));
    }
  } else if (name == "psi-roundtrip") {
    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
      require_family_cap(n, limits);
      const IntRange ms = clip_m(m_range, n);
      for (int m = ms.lo; m <= ms.hi; ++m) {
        rep.rows.push_back(sweep_row(n, m, sweep_psi_roundtrip(n, m, workers)));
      }
    }
  } else if (name == "cycle-deletion") {
    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
      require_family_cap(n, limits);
      rep.rows.push_back(sweep_row(n, n, sweep_cycle_deletion(n, workers)));
    }
  } else {
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  }
  return rep;
}

std::vector<ScanRow> open_question_scan(IntRange n_range, std::optional<IntRange> m_range,
                                        int workers, const SweepLimits& limits) {
  std::vector<ScanRow> rows;
  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    const auto sink = per_graph_counts(Family::sink_trees, n, workers, limits);
    const auto source = per_graph_counts(Family::source_trees, n, workers, limits);
    const TreeFamily trees(n, Orientation::sink);
    const IntRange ms = clip_m(m_range, n);
    for (std::uint64_t i = 0; i < trees.size(); ++i) {
      const RootedTree t = trees.at(i);
      for (int m = ms.lo; m <= ms.hi; ++m) {
        ScanRow r;
        r.tree = format_tree(t);
        r.n = n;
        r.m = m;
        r.sink_count = sink[i][m];
        r.source_count = source[i][m];
        r.sign = (r.sink_count > r.source_count) - (r.sink_count < r.source_count);
        r.is_path = t.is_path();
        r.is_star = t.is_star();
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

}  // namespace pfg
