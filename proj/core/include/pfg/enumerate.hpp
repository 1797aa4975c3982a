#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pfg/digraph.hpp"
#include "pfg/families.hpp"
#include "pfg/io.hpp"

namespace pfg {

enum class Family { sink_trees, source_trees, mappings, inverse_mappings };

std::string_view to_string(Family f);
/// Accepts "sink-trees", "source-trees", "mappings", "inverse-mappings".
Family parse_family(std::string_view text);
std::uint64_t family_size(Family f, int n);
Digraph family_member(Family f, int n, std::uint64_t index);

/// Refusal thresholds for exhaustive work.
struct SweepLimits {
  int family_cap = 6;
  int digraph_cap = 10;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(D, m) for every m in [0, max_m]. Walks weakly increasing preference
/// sequences depth first with an incremental matching, prunes infeasible
/// prefixes, and weights each feasible multiset by its number of orderings.
std::vector<std::uint64_t> count_pf_by_length(const Digraph& d, int max_m);
/// Number of weakly increasing parking functions of each length in [0, max_m].
std::vector<std::uint64_t> count_increasing_pf_by_length(const Digraph& d, int max_m);

/// P(D, m): number of s in [n]^m that park on D.
BigInt count_pf(const Digraph& d, int m, const SweepLimits& limits = {});

/// Parking distributions with total m, found by enumerating demand vectors
/// and testing the filter inequalities directly.
std::uint64_t count_parking_distributions(const Digraph& d, int m);

/// Calls fn for every s in [n]^m in lexicographic order.
void for_each_sequence(int n, int m, const std::function<void(std::span<const Vertex>)>& fn);

struct CountResult {
  Family family = Family::sink_trees;
  int n = 0;
  int m = 0;
  BigInt value = 0;
  std::uint64_t instances = 0;
  double millis = 0.0;
  std::vector<BigInt> shard_values;
};

/// Sum of P(G, m) over the whole family on [n].
CountResult family_sum(Family f, int n, int m, int workers, const SweepLimits& limits = {});
/// family_sum for every m in [0, n] from a single sweep.
std::vector<CountResult> family_sums(Family f, int n, int workers,
                                     const SweepLimits& limits = {});
/// Entry [index][m] = P(family_member(f, n, index), m), m in [0, n].
std::vector<std::vector<std::uint64_t>> per_graph_counts(Family f, int n, int workers,
                                                         const SweepLimits& limits = {});

struct IdentityRow {
  int n = 0;
  int m = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  std::string identity;
  std::vector<IdentityRow> rows;
  bool all_pass() const;
};

/// Names accepted by verify_identity.
const std::vector<std::string>& identity_names();

/// Checks a named identity or bound on every (n, m) in range. An absent
/// m-range means 0..n. Throws std::invalid_argument for unknown names.
IdentityReport verify_identity(std::string_view name, IntRange n_range,
                               std::optional<IntRange> m_range, int workers,
                               const SweepLimits& limits = {});

struct ScanRow {
  std::string tree;
  int n = 0;
  int m = 0;
  std::uint64_t sink_count = 0;
  std::uint64_t source_count = 0;
  int sign = 0;  // sign of sink_count - source_count
  bool is_path = false;
  bool is_star = false;
};

/// P(T, m) against P(T~, m) for every rooted tree. Data only.
std::vector<ScanRow> open_question_scan(IntRange n_range, std::optional<IntRange> m_range,
                                        int workers, const SweepLimits& limits = {});

struct SweepReport {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

/// tau_inverse(tau(T, s)) == (T, s) for every sink tree on [n] and every
/// length-n parking function, plus the involution and image checks.
SweepReport sweep_tau_roundtrip(int n, int workers);
/// psi_nm and psi_nm_inverse invert each other on every marked triple with
/// sequences of length m, the images are distinct, and their number equals
/// the inverse-mapping family sum.
SweepReport sweep_psi_roundtrip(int n, int m, int workers);
/// Every cycle of every inverse mapping parking function on [n] (all m) has
/// at least one deletable edge.
SweepReport sweep_cycle_deletion(int n, int workers);

}  // namespace pfg
