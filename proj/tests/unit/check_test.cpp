#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pfg/check.hpp"
#include "pfg/families.hpp"

namespace pfg {
namespace {

bool uses_edge(const ParkingOutcome& o, Edge e) {
  for (const auto& walk : o.walks) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      if (walk[i] == e.from && walk[i + 1] == e.to) return true;
    }
  }
  return false;
}

TEST(IsParkingFunction, BranchingExample) {
  EXPECT_TRUE(is_parking_function(fixtures::branching(), fixtures::branching_seq()));
}

TEST(IsParkingFunction, EmptySequenceAlwaysParks) {
  EXPECT_TRUE(is_parking_function(Digraph(3), PreferenceSequence{}));
  EXPECT_TRUE(is_parking_function(Digraph(0), PreferenceSequence{}));
}

TEST(IsParkingFunction, CounterTreeSourcePairs) {
  const Digraph d = fixtures::counter_tree(Orientation::source).as_digraph();
  int parks = 0;
  for (const auto& s : oracle::all_sequences(4, 2)) {
    const bool expected = !(s == PreferenceSequence{1, 1} || s == PreferenceSequence{2, 2});
    EXPECT_EQ(is_parking_function(d, s), expected) << s[0] << "," << s[1];
    parks += expected;
  }
  EXPECT_EQ(parks, 14);
}

TEST(IsParkingFunction, TooManyDriversIsFalse) {
  EXPECT_FALSE(is_parking_function(path_digraph(2), PreferenceSequence{1, 1, 1}));
}

TEST(IsParkingFunction, OutOfRangePreferenceThrows) {
  EXPECT_THROW(is_parking_function(path_digraph(2), PreferenceSequence{3}), std::out_of_range);
  EXPECT_THROW(is_parking_function(path_digraph(2), PreferenceSequence{0}), std::out_of_range);
}

TEST(HallWitness, CounterTreeSource) {
  const auto w = hall_witness(fixtures::counter_tree(Orientation::source).as_digraph(), PreferenceSequence{1, 1});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->subset, VertexSet{1});
  EXPECT_EQ(w->reach, VertexSet{1});
  EXPECT_EQ(w->demand, 2);
}

TEST(HallWitness, ClassicalLastSpot) {
  const auto w = hall_witness(path_digraph(2), PreferenceSequence{2, 2});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->subset, VertexSet{2});
  EXPECT_EQ(w->reach, VertexSet{2});
  EXPECT_EQ(w->demand, 2);
}

TEST(HallWitness, NoneForParkingFunction) {
  EXPECT_FALSE(hall_witness(fixtures::shared_tree().as_digraph(), fixtures::shared_seq()));
}

TEST(ParkingSchedule, ClassicalChain) {
  const auto o = parking_schedule(path_digraph(3), PreferenceSequence{1, 1, 1});
  ASSERT_TRUE(o);
  EXPECT_EQ(o->assignment, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(replay_validate(path_digraph(3), PreferenceSequence{1, 1, 1}, *o));
}

TEST(ParkingSchedule, BranchingUsesEdgeOneFour) {
  const auto o = parking_schedule(fixtures::branching(), fixtures::branching_seq());
  ASSERT_TRUE(o);
  EXPECT_TRUE(replay_validate(fixtures::branching(), fixtures::branching_seq(), *o));
  EXPECT_TRUE(uses_edge(*o, {1, 4}));
}

TEST(ParkingSchedule, SharedSourceTree) {
  const Digraph d = fixtures::shared_tree().as_digraph();
  const auto o = parking_schedule(d, fixtures::shared_seq());
  ASSERT_TRUE(o);
  EXPECT_TRUE(replay_validate(d, fixtures::shared_seq(), *o));
  auto spots = o->assignment;
  std::sort(spots.begin(), spots.end());
  EXPECT_EQ(spots, VertexSet::full(7).to_vector());
}

TEST(ParkingSchedule, NoneWhenInfeasible) {
  EXPECT_FALSE(parking_schedule(path_digraph(2), PreferenceSequence{2, 2}));
}

TEST(ReplayValidate, HandExamples) {
  const Digraph p = path_digraph(2);
  const PreferenceSequence s{1, 1};
  EXPECT_TRUE(replay_validate(p, s, {{1, 2}, {{1}, {1, 2}}}));
  EXPECT_FALSE(replay_validate(p, s, {{1, 2}, {{1}, {2}}}));
  // Walk ending on an occupied vertex.
  EXPECT_FALSE(replay_validate(p, s, {{1, 1}, {{1}, {1}}}));
  // Non-edge step.
  EXPECT_FALSE(replay_validate(p, PreferenceSequence{2}, {{1}, {{2, 1}}}));
  // Passing through a free vertex.
  EXPECT_FALSE(replay_validate(path_digraph(3), PreferenceSequence{1}, {{2}, {{1, 2}}}));
  // Length mismatch.
  EXPECT_FALSE(replay_validate(p, s, {{1}, {{1}}}));
}

TEST(ReplayValidate, BranchingDriverTwoTakesFour) {
  const ParkingOutcome o{{1, 4, 3, 2, 5}, {{1}, {1, 4}, {3}, {2}, {1, 2, 5}}};
  EXPECT_TRUE(replay_validate(fixtures::branching(), fixtures::branching_seq(), o));
}

TEST(IsDeterministic, Examples) {
  EXPECT_TRUE(is_deterministic(fixtures::reversal_tree().as_digraph()));
  EXPECT_FALSE(is_deterministic(fixtures::branching()));
  EXPECT_TRUE(is_deterministic(Digraph(3)));
}

TEST(SimulateDeterministic, ReversalTreeAllPark) {
  const auto run = simulate_deterministic(fixtures::reversal_tree().as_digraph(), fixtures::reversal_seq());
  ASSERT_TRUE(run);
  for (Edge e : std::vector<Edge>{{1, 2}, {2, 3}, {3, 5}, {4, 5}, {5, 6}}) {
    EXPECT_NE(std::find(run->highlighted.begin(), run->highlighted.end(), e), run->highlighted.end())
        << e.from << "->" << e.to;
  }
  EXPECT_TRUE(replay_validate(fixtures::reversal_tree().as_digraph(), fixtures::reversal_seq(), run->outcome));
}

TEST(SimulateDeterministic, StuckAndEmpty) {
  EXPECT_FALSE(simulate_deterministic(path_digraph(2), PreferenceSequence{2, 2}));
  const auto run = simulate_deterministic(path_digraph(2), PreferenceSequence{});
  ASSERT_TRUE(run);
  EXPECT_TRUE(run->outcome.assignment.empty());
  EXPECT_TRUE(run->highlighted.empty());
  // A driver circling a full cycle never parks.
  EXPECT_FALSE(simulate_deterministic(Digraph(2, {{1, 2}, {2, 1}}), PreferenceSequence{1, 1, 1}));
  EXPECT_THROW(simulate_deterministic(fixtures::branching(), fixtures::branching_seq()), std::invalid_argument);
}

TEST(SimulateDeterministic, AgreesWithMatchingOnSinkTrees) {
  for (int n = 1; n <= 4; ++n) {
    for (const RootedTree& t : TreeFamily(n, Orientation::sink)) {
      const Digraph d = t.as_digraph();
      for (int m = 0; m <= n; ++m) {
        for (const auto& s : oracle::all_sequences(n, m)) {
          ASSERT_EQ(simulate_deterministic(d, s).has_value(), is_parking_function(d, s));
        }
      }
    }
  }
}

TEST(IsSourceTreePf, Examples) {
  EXPECT_TRUE(is_source_tree_pf(fixtures::shared_tree(), fixtures::shared_seq()));
  EXPECT_FALSE(is_source_tree_pf(fixtures::counter_tree(Orientation::source), PreferenceSequence{1, 1}));
  const RootedTree t = fixtures::shared_tree();
  EXPECT_TRUE(is_source_tree_pf(t, PreferenceSequence(7, t.root())));
  EXPECT_THROW(is_source_tree_pf(fixtures::reversal_tree(), fixtures::reversal_seq()), std::invalid_argument);
}

TEST(IsSourceTreePf, AgreesWithMatchingExhaustively) {
  for (int n = 1; n <= 4; ++n) {
    for (const RootedTree& t : TreeFamily(n, Orientation::source)) {
      const Digraph d = t.as_digraph();
      for (int m = 0; m <= n; ++m) {
        for (const auto& s : oracle::all_sequences(n, m)) {
          ASSERT_EQ(is_source_tree_pf(t, s), is_parking_function(d, s));
        }
      }
    }
  }
}

TEST(IsSourceTreePf, AgreesWithMatchingSampledFive) {
  std::mt19937_64 rng(5);
  const TreeFamily trees(5, Orientation::source);
  for (int trial = 0; trial < 5000; ++trial) {
    const RootedTree t = trees.at(rng() % trees.size());
    const int m = static_cast<int>(rng() % 6);
    PreferenceSequence s(m);
    for (auto& v : s) v = 1 + static_cast<int>(rng() % 5);
    ASSERT_EQ(is_source_tree_pf(t, s), is_parking_function(t.as_digraph(), s));
  }
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(path_digraph(2), PreferenceSequence{1, 1}));
  EXPECT_FALSE(is_prime(path_digraph(2), PreferenceSequence{1, 2}));
  EXPECT_TRUE(is_prime(fixtures::reversal_tree().as_digraph(), fixtures::reversal_seq()));
}

TEST(IsPrime, ClassicalPrimeCounts) {
  // Strict inequality on every proper nonempty R(B), checked over all subsets.
  for (int n = 1; n <= 5; ++n) {
    const Digraph d = path_digraph(n);
    const auto filters = oracle::filters_by_subsets(d);
    std::uint64_t primes = 0;
    for (const auto& s : oracle::all_sequences(n, n)) {
      bool strict = oracle::hall_holds(d, s);
      for (std::uint64_t f : filters) {
        if (f == 0 || f == VertexSet::full(n).bits()) continue;
        int demand = 0;
        for (Vertex v : s) demand += (f >> (v - 1)) & 1;
        strict = strict && demand < __builtin_popcountll(f);
      }
      ASSERT_EQ(is_prime(d, s), strict);
      primes += strict;
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < n - 1; ++i) expected *= n - 1;
    EXPECT_EQ(primes, expected) << "n=" << n;
  }
}

TEST(ParkingDistributionCheck, Examples) {
  const Digraph p3 = path_digraph(3);
  EXPECT_TRUE(is_parking_distribution(p3, ParkingDistribution({1, 1, 1})));
  EXPECT_FALSE(is_parking_distribution(p3, ParkingDistribution({0, 0, 2})));
  EXPECT_FALSE(is_parking_distribution(p3, ParkingDistribution({4, 0, 0})));
  EXPECT_THROW(ParkingDistribution({1, -1, 0}), std::invalid_argument);
  EXPECT_THROW(is_parking_distribution(p3, ParkingDistribution({1, 1})), std::invalid_argument);
}

TEST(ParkingDistributionCheck, CatalanOnPathThree) {
  int count = 0;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      count += is_parking_distribution(path_digraph(3), ParkingDistribution({a, b, 3 - a - b}));
    }
  }
  EXPECT_EQ(count, 5);
}

TEST(ParkingDistributionCheck, AgreesWithSequenceCheck) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Digraph d = oracle::random_digraph(n, 0.3, rng);
    const int m = static_cast<int>(rng() % (n + 1));
    PreferenceSequence s(m);
    for (auto& v : s) v = 1 + static_cast<int>(rng() % n);
    const auto f = ParkingDistribution::of(n, s);
    ASSERT_EQ(is_parking_distribution(d, f), is_parking_function(d, s));
    ASSERT_EQ(is_parking_function(d, f.realize()), is_parking_function(d, s));
  }
}

TEST(Properties, PermutationInvarianceExhaustiveThree) {
  // Every digraph on [3], loops included.
  for (std::uint32_t mask = 0; mask < (1U << 9); ++mask) {
    std::vector<Edge> edges;
    for (int k = 0; k < 9; ++k) {
      if (mask >> k & 1) edges.push_back({k / 3 + 1, k % 3 + 1});
    }
    const Digraph d(3, edges);
    for (int m = 0; m <= 3; ++m) {
      for (auto s : oracle::all_sequences(3, m)) {
        const bool base = is_parking_function(d, s);
        std::sort(s.begin(), s.end());
        do {
          ASSERT_EQ(is_parking_function(d, s), base);
        } while (std::next_permutation(s.begin(), s.end()));
      }
    }
  }
}

TEST(Properties, PermutationInvarianceRandomSix) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Digraph d = oracle::random_digraph(n, 0.2, rng);
    PreferenceSequence s(rng() % (n + 1));
    for (auto& v : s) v = 1 + static_cast<int>(rng() % n);
    auto shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(is_parking_function(d, s), is_parking_function(d, shuffled));
  }
}

TEST(Properties, MatchingAgreesWithProcessAndHall) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const Digraph d = oracle::random_digraph(n, 0.35, rng);
    PreferenceSequence s(rng() % (n + 1));
    for (auto& v : s) v = 1 + static_cast<int>(rng() % n);
    const bool pf = is_parking_function(d, s);
    ASSERT_EQ(pf, oracle::process_parks(d, s));
    ASSERT_EQ(pf, oracle::hall_holds(d, s));
  }
}

TEST(Properties, CertificatesAreSound) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Digraph d = oracle::random_digraph(n, 0.25, rng);
    PreferenceSequence s(rng() % (n + 1));
    for (auto& v : s) v = 1 + static_cast<int>(rng() % n);
    const auto schedule = parking_schedule(d, s);
    const auto witness = hall_witness(d, s);
    ASSERT_NE(schedule.has_value(), witness.has_value());
    if (schedule) {
      ASSERT_TRUE(replay_validate(d, s, *schedule));
    } else {
      ASSERT_EQ(witness->reach, d.reachable_from(witness->subset));
      int demand = 0;
      for (Vertex v : s) demand += witness->reach.contains(v);
      ASSERT_EQ(demand, witness->demand);
      ASSERT_GT(witness->demand, witness->reach.size());
    }
  }
}

TEST(Properties, ClassicalDefinitionOnPath) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (const auto& s : oracle::all_sequences(n, m)) {
        ASSERT_EQ(is_parking_function(path_digraph(n), s), oracle::classical_condition(n, s));
      }
    }
  }
}

TEST(Properties, PrimeImpliesParking) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Digraph d = oracle::random_digraph(n, 0.3, rng);
    PreferenceSequence s(rng() % (n + 1));
    for (auto& v : s) v = 1 + static_cast<int>(rng() % n);
    if (is_prime(d, s)) ASSERT_TRUE(is_parking_function(d, s));
  }
}

}  // namespace
}  // namespace pfg
