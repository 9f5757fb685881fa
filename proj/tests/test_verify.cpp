#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toughcycle/catalog.hpp"
#include "toughcycle/degseq.hpp"
#include "toughcycle/graph.hpp"
#include "toughcycle/verify.hpp"

using namespace toughcycle;

namespace {

const TheoremCheck& find_check(const ClassificationReport& r, Theorem theorem) {
  for (const TheoremCheck& c : r.theorems)
    if (c.theorem == theorem) return c;
  throw std::logic_error("theorem missing from report");
}

CutsetSearchOptions serial() {
  CutsetSearchOptions o;
  o.policy = ExecPolicy::Serial;
  return o;
}

}  // namespace

TEST(Names, ParseRoundTrip) {
  for (Theorem th : {Theorem::EdgeCount, Theorem::SpectralRadius, Theorem::SignlessPrinted,
                     Theorem::SignlessCorrected, Theorem::HamiltonicityRadius}) {
    EXPECT_EQ(parse_theorem(to_string(th)), th);
  }
  EXPECT_EQ(parse_theorem("edges_2_1"), Theorem::EdgeCount);
  EXPECT_EQ(parse_theorem("q_2_3_printed"), Theorem::SignlessPrinted);
  EXPECT_EQ(parse_theorem("ham_rho_2_6"), Theorem::HamiltonicityRadius);
  EXPECT_FALSE(parse_theorem("dirac").has_value());
  EXPECT_EQ(parse_supporting_prop("P2_9"), SupportingProp::DenseThirdPancyclic);
  EXPECT_EQ(parse_supporting_prop("closure-stability"), SupportingProp::ClosureStability);
  EXPECT_FALSE(parse_supporting_prop("P2_5").has_value());
}

TEST(StatedRange, Floors) {
  EXPECT_FALSE(in_stated_range(Theorem::EdgeCount, 6, 1));
  EXPECT_TRUE(in_stated_range(Theorem::EdgeCount, 7, 1));
  EXPECT_FALSE(in_stated_range(Theorem::SpectralRadius, 15, 2));
  EXPECT_TRUE(in_stated_range(Theorem::SignlessCorrected, 28, 3));
  EXPECT_TRUE(in_stated_range(Theorem::HamiltonicityRadius, 16, 2));
  EXPECT_FALSE(in_stated_range(Theorem::HamiltonicityRadius, 15, 2));
  EXPECT_FALSE(in_stated_range(Theorem::HamiltonicityRadius, 27, 3));
  EXPECT_TRUE(in_stated_range(Theorem::HamiltonicityRadius, 28, 3));
}

TEST(Classify, CompleteGraph) {
  const ClassificationReport r = classify(complete_graph(7), 1);
  EXPECT_EQ(r.m, 21);
  ASSERT_TRUE(r.toughness.has_value());
  EXPECT_TRUE(r.toughness->is_infinite());
  EXPECT_TRUE(r.pancyclic);
  EXPECT_EQ(find_check(r, Theorem::EdgeCount).verdict, Verdict::Confirmed);
}

TEST(Classify, CycleFailsTheEdgeHypothesis) {
  const ClassificationReport r = classify(cycle_graph(7), 1);
  EXPECT_EQ(find_check(r, Theorem::EdgeCount).verdict, Verdict::HypothesisFails);
  EXPECT_TRUE(r.hamiltonian);
  EXPECT_FALSE(r.pancyclic);
}

TEST(Classify, NonadjacentVariantIsConfirmed) {
  const ClassificationReport r = classify(build("1.1.1-nonadjacent", 7), 1);
  EXPECT_EQ(r.m, 13);
  ASSERT_TRUE(r.toughness.has_value());
  EXPECT_TRUE(r.toughness->at_least(Rational(1)));
  EXPECT_TRUE(r.pancyclic);
  EXPECT_EQ(find_check(r, Theorem::EdgeCount).verdict, Verdict::Confirmed);
}

TEST(Classify, RejectsDisconnectedInput) {
  EXPECT_THROW(classify(empty_graph(4), 1), PreconditionError);
  EXPECT_THROW(classify(complete_graph(5), 4), PreconditionError);
}

TEST(Classify, ReportInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_connected_graph(n, 0.3 + 0.6 * (trial % 4) / 4.0, rng);
    const ClassificationReport r = classify(g, 1 + trial % 2);
    if (r.pancyclic) EXPECT_TRUE(r.hamiltonian);
    if (r.bipartite) EXPECT_FALSE(r.pancyclic);
    EXPECT_EQ(r.spectrum.lengths(), oracle::cycle_lengths(g));
    for (const TheoremCheck& c : r.theorems) {
      if (c.verdict == Verdict::Boundary) EXPECT_TRUE(is_spectral(c.theorem));
      if (c.verdict == Verdict::Counterexample) {
        ADD_FAILURE() << "counterexample to " << to_string(c.theorem) << " at n=" << n;
      }
    }
    const nlohmann::json j = to_json(r);
    EXPECT_EQ(j["n"], n);
    EXPECT_EQ(j["theorems"].size(), r.theorems.size());
    EXPECT_FALSE(to_text(r).empty());
  }
}

TEST(CheckTheorem, Examples) {
  EXPECT_EQ(check_theorem(complete_graph(16), 2, Theorem::EdgeCount).verdict, Verdict::Confirmed);
  EXPECT_EQ(check_theorem(build("2.2.1", std::nullopt), 2, Theorem::EdgeCount).verdict,
            Verdict::Confirmed);
  const TheoremCheck low = check_theorem(complete_graph(5), 1, Theorem::EdgeCount);
  EXPECT_EQ(low.verdict, Verdict::HypothesisFails);
  EXPECT_EQ(low.reason, "out of stated range");
  EXPECT_EQ(check_theorem(empty_graph(8), 1, Theorem::EdgeCount).verdict,
            Verdict::HypothesisFails);
}

TEST(CheckTheorem, PrintedSignlessThresholdIsNeverMet) {
  EXPECT_EQ(check_theorem(complete_graph(17), 2, Theorem::SignlessPrinted).verdict,
            Verdict::HypothesisFails);
  EXPECT_EQ(check_theorem(build("2.2.1", std::nullopt), 2, Theorem::SignlessPrinted).verdict,
            Verdict::HypothesisFails);
  EXPECT_EQ(check_theorem(complete_graph(17), 2, Theorem::SignlessCorrected).verdict,
            Verdict::Confirmed);
}

TEST(CheckTheorem, HamiltonicityRadiusOnCompleteGraph) {
  EXPECT_EQ(check_theorem(complete_graph(8), 1, Theorem::HamiltonicityRadius).verdict,
            Verdict::Confirmed);
  EXPECT_EQ(check_theorem(complete_graph(7), 1, Theorem::HamiltonicityRadius).verdict,
            Verdict::HypothesisFails);
}

TEST(CheckTheorem, BoundaryWhenEstimateTouchesThreshold) {
  // rho(K_n) = n - 1 and the threshold for (n, t) = (7, 1) is sqrt(20).
  VerifyOptions wide;
  wide.tolerance = 2.0;
  EXPECT_EQ(check_theorem(complete_graph(7), 1, Theorem::SpectralRadius, wide).verdict,
            Verdict::Boundary);
}

TEST(SupportingProps, Examples) {
  EXPECT_EQ(check_supporting_prop(complete_graph(7), SupportingProp::DenseThirdPancyclic),
            PropOutcome::Holds);
  EXPECT_EQ(check_supporting_prop(cycle_graph(6), SupportingProp::ToughnessMinDegree),
            PropOutcome::Holds);
  EXPECT_EQ(check_supporting_prop(make_S(12), SupportingProp::DenseHalfPancyclic),
            PropOutcome::Holds);
  EXPECT_EQ(check_supporting_prop(cycle_graph(7), SupportingProp::DenseThirdPancyclic),
            PropOutcome::NotApplicable);
  EXPECT_EQ(check_supporting_prop(complete_graph(5), SupportingProp::ToughnessConnectivity),
            PropOutcome::NotApplicable);
}

TEST(SupportingProps, ExceptionalGraphRecognition) {
  for (int n = 4; n <= 20; n += 4) EXPECT_TRUE(is_isomorphic_to_S(make_S(n))) << n;
  const int perm[] = {3, 0, 7, 5, 1, 6, 2, 4};
  EXPECT_TRUE(is_isomorphic_to_S(relabel(make_S(8), perm)));
  EXPECT_FALSE(is_isomorphic_to_S(cycle_graph(8)));
  EXPECT_FALSE(is_isomorphic_to_S(complete_graph(8)));
  EXPECT_TRUE(is_isomorphic_to_S(cycle_graph(4)));
}

TEST(SupportingProps, DegreeConditionStatementsHoldOnAllSmallGraphs) {
  // Premise and conclusion recomputed from the brute-force oracles.
  std::uint64_t premises[3] = {0, 0, 0};
  for (int n = 3; n <= 7; ++n) {
    oracle::for_each_labeled_graph(n, [&](std::uint64_t mask, const Graph& g) {
      if (!oracle::connected(g)) return;
      const DegreeSequence d = degree_sequence(g);
      for (int t = 1; t <= 2; ++t) {
        const PropOutcome ham = check_supporting_prop(g, SupportingProp::DegreeConditionHamiltonian,
                                                      t, serial());
        const PropOutcome pan = check_supporting_prop(g, SupportingProp::DegreeConditionPancyclic,
                                                      t, serial());
        ASSERT_NE(ham, PropOutcome::Violated) << n << ' ' << mask << " t=" << t;
        ASSERT_NE(pan, PropOutcome::Violated) << n << ' ' << mask << " t=" << t;
        if (!predicate_P(d, t).holds) continue;
        const oracle::Ratio tau = oracle::toughness(g);
        if (tau.den != 0 && tau.num < static_cast<long long>(t) * tau.den) continue;
        ++premises[t];
        const std::vector<int> lengths = oracle::cycle_lengths(g);
        ASSERT_FALSE(lengths.empty() || lengths.back() != n) << n << ' ' << mask;
        const bool pancyclic = static_cast<int>(lengths.size()) == n - 2;
        ASSERT_TRUE(pancyclic || is_bipartite(g)) << n << ' ' << mask;
        ASSERT_EQ(ham, PropOutcome::Holds);
        ASSERT_EQ(pan, PropOutcome::Holds);
      }
    });
  }
  EXPECT_GT(premises[1], 0U);
  EXPECT_GT(premises[2], 0U);
}

TEST(SupportingProps, ToughnessStatementsOnRandomGraphs) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_connected_graph(n, 0.5, rng);
    for (SupportingProp p : {SupportingProp::ToughnessMonotone, SupportingProp::ToughnessConnectivity,
                             SupportingProp::ToughnessMinDegree, SupportingProp::ClosureStability,
                             SupportingProp::DenseThirdPancyclic, SupportingProp::DenseHalfPancyclic}) {
      EXPECT_NE(check_supporting_prop(g, p), PropOutcome::Violated) << to_string(p);
    }
  }
}
