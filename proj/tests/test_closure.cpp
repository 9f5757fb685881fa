#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "toughcycle/closure.hpp"
#include "toughcycle/cycles.hpp"
#include "toughcycle/degseq.hpp"
#include "toughcycle/graph.hpp"
#include "toughcycle/toughness.hpp"

using namespace toughcycle;

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

bool is_subgraph(const Graph& a, const Graph& b) {
  for (const Edge& e : a.edges())
    if (!b.adjacent(e.u, e.v)) return false;
  return true;
}

const Graph kOctahedron = join(join(empty_graph(2), empty_graph(2)), empty_graph(2));

}  // namespace

TEST(Closure, Examples) {
  EXPECT_EQ(bondy_chvatal_closure(cycle_graph(6), 0).graph, complete_graph(6));
  const ClosureResult c4 = bondy_chvatal_closure(cycle_graph(4), 4);
  EXPECT_TRUE(c4.is_complete);
  EXPECT_EQ(c4.added_edges.size(), 2U);
  const ClosureResult c7 = bondy_chvatal_closure(cycle_graph(7), 6);
  EXPECT_FALSE(c7.is_complete);
  EXPECT_TRUE(c7.added_edges.empty());
  EXPECT_THROW(bondy_chvatal_closure(cycle_graph(4), -1), PreconditionError);
}

TEST(Closure, DenseSixteenVertexRealizationClosesToComplete) {
  const Graph g = realize(DegreeSequence::parse("4^4,11^10,15^2"));
  ASSERT_EQ(g.order(), 16);
  const ClosureResult r = bondy_chvatal_closure(g, 15);
  EXPECT_TRUE(r.is_complete);
  EXPECT_EQ(r.added_edges.size(), 120U - static_cast<std::size_t>(g.size()));
}

TEST(Closure, ScanOrderMustCoverEveryPair) {
  std::vector<Edge> order = all_pairs(5);
  order.pop_back();
  EXPECT_THROW(bondy_chvatal_closure(cycle_graph(5), 3, order), PreconditionError);
}

TEST(ClosureProperties, IndependentOfScanOrder) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.35, rng);
    const int k = static_cast<int>(rng() % (2 * n));
    const Graph expected = bondy_chvatal_closure(g, k).graph;
    std::vector<Edge> order = all_pairs(n);
    for (int perm = 0; perm < 100; ++perm) {
      std::shuffle(order.begin(), order.end(), rng);
      ASSERT_EQ(bondy_chvatal_closure(g, k, order).graph, expected);
    }
  }
}

TEST(ClosureProperties, FixpointIdempotenceAndMonotonicity) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const int k = static_cast<int>(rng() % (2 * n));
    const ClosureResult r = bondy_chvatal_closure(g, k);
    EXPECT_TRUE(is_subgraph(g, r.graph));
    for (const Edge& e : r.graph.non_edges())
      EXPECT_LT(r.graph.degree(e.u) + r.graph.degree(e.v), k);
    EXPECT_TRUE(bondy_chvatal_closure(r.graph, k).added_edges.empty());
    EXPECT_TRUE(is_subgraph(bondy_chvatal_closure(g, k + 1).graph, r.graph));
  }
}

TEST(ClosureStability, HoldsForEveryTwoToughGraphUpToSevenVertices) {
  CutsetSearchOptions serial;
  serial.policy = ExecPolicy::Serial;
  std::uint64_t checked_pairs = 0;
  for (int n = 3; n <= 7; ++n) {
    oracle::for_each_labeled_graph(n, [&](std::uint64_t mask, const Graph& g) {
      if (!oracle::connected(g) || !is_t_tough(g, Rational(2), serial)) return;
      const bool ham = is_hamiltonian(g);
      for (const Edge& e : g.non_edges()) {
        if (g.degree(e.u) + g.degree(e.v) < n - 1) continue;
        ++checked_pairs;
        ASSERT_EQ(is_hamiltonian(g.with_edge(e.u, e.v)), ham) << n << ' ' << mask;
      }
    });
  }
  EXPECT_GT(checked_pairs, 0U);
}

TEST(Certificate, ToughnessRequirement) {
  EXPECT_EQ(closure_toughness_requirement(1), Rational(2));
  EXPECT_EQ(closure_toughness_requirement(2), Rational(5, 2));
  EXPECT_EQ(closure_toughness_requirement(3), Rational(4));
  EXPECT_THROW(closure_toughness_requirement(0), PreconditionError);
}

TEST(Certificate, Examples) {
  EXPECT_EQ(hamiltonicity_via_closure(kOctahedron, 1), ClosureVerdict::Hamiltonian);
  EXPECT_EQ(hamiltonicity_via_closure(cycle_graph(7), 1), ClosureVerdict::Unknown);
  ClosureCertificateOptions exact;
  exact.exact_fallback = true;
  EXPECT_THROW(hamiltonicity_via_closure(cycle_graph(7), 1, exact), PreconditionError);
  EXPECT_THROW(hamiltonicity_via_closure(join(complete_graph(3), matching_graph(3)), 1),
               PreconditionError);
  EXPECT_EQ(hamiltonicity_via_closure(complete_graph(6), 2), ClosureVerdict::Hamiltonian);
}
