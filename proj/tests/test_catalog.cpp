#include <gtest/gtest.h>

#include <random>

#include "toughcycle/catalog.hpp"
#include "toughcycle/cycles.hpp"
#include "toughcycle/degseq.hpp"
#include "toughcycle/graph.hpp"
#include "toughcycle/spectral.hpp"
#include "toughcycle/toughness.hpp"

using namespace toughcycle;

namespace {

int default_n(const CatalogEntry& entry) {
  if (entry.fixed_n) return *entry.fixed_n;
  int n = entry.min_n;
  while (n % entry.n_modulus != 0) ++n;
  return n;
}

std::string refuted_claims(const EntryReport& report) {
  std::string out;
  for (const FactReport& f : report.facts)
    if (f.verdict == FactVerdict::Refuted) out += f.claim + " [" + f.detail + "]; ";
  return out;
}

}  // namespace

TEST(Build, Examples) {
  const Graph adjacent = build("1.1.1-adjacent", 7);
  EXPECT_EQ(degree_sequence(adjacent), DegreeSequence::parse("2^2,4^4,6^1"));
  EXPECT_EQ(adjacent.size(), 13);
  const Graph hub = build("2.2.1", std::nullopt);
  EXPECT_EQ(degree_sequence(hub), DegreeSequence::parse("8^11,16^6"));
  EXPECT_EQ(hub.size(), 92);
  EXPECT_EQ(degree_sequence(build("S", 12)), DegreeSequence::parse("2^6,6^6"));
}

TEST(Build, Errors) {
  EXPECT_THROW(build("no-such-entry", std::nullopt), PreconditionError);
  EXPECT_THROW(build("1.1.1-adjacent", 6), PreconditionError);
  EXPECT_THROW(build("1.1.1-adjacent", std::nullopt), PreconditionError);
  EXPECT_THROW(build("2.2.1", 18), PreconditionError);
  EXPECT_THROW(build("S", 10), PreconditionError);
}

TEST(Build, AdjacentVariantFamily) {
  for (int n = 7; n <= 12; ++n) {
    const Graph g = build("1.1.1-adjacent", n);
    std::vector<int> d(2, 2);
    d.insert(d.end(), static_cast<std::size_t>(n - 3), n - 3);
    d.push_back(n - 1);
    EXPECT_EQ(degree_sequence(g), DegreeSequence(d));
  }
}

TEST(Build, NonadjacentVariantMeetsTheEdgeThresholdExactly) {
  for (int n = 7; n <= 12; ++n) {
    const Graph g = build("1.1.1-nonadjacent", n);
    EXPECT_EQ(g.size(), edge_threshold(n, 1)) << n;
    int degree_two = 0;
    for (int v = 0; v < n; ++v) degree_two += g.degree(v) == 2;
    EXPECT_EQ(degree_two, 2);
  }
}

TEST(Build, PendantTwoFactorVariant) {
  const Graph g = build("2.2.2", std::nullopt);
  EXPECT_EQ(degree_sequence(g), DegreeSequence::parse("6^1,8^10,16^6"));
  EXPECT_EQ(g.size(), 91);
}

TEST(Build, TwoFactorOption) {
  BuildOptions options;
  options.two_factor = {5, 6};
  const Graph g = build("2.2.1", options);
  EXPECT_EQ(degree_sequence(g), DegreeSequence::parse("8^11,16^6"));
  EXPECT_EQ(g.size(), 92);
  EXPECT_NE(g, build("2.2.1", std::nullopt));
  EXPECT_FALSE(check_entry("2.2.1", options).any_refuted());
  options.two_factor = {5, 5};
  EXPECT_THROW(build("2.2.1", options), PreconditionError);
  options.two_factor = {2, 9};
  EXPECT_THROW(build("2.2.1", options), PreconditionError);
}

TEST(Build, HubConstructionIsExactlyTwoTough) {
  const Graph g = build("2.2.1", std::nullopt);
  EXPECT_TRUE(is_t_tough(g, Rational(2)));
  EXPECT_TRUE(is_pancyclic(g));
}

TEST(CheckEntry, AdjacentVariantIsHalfTough) {
  for (int n = 7; n <= 10; ++n) {
    EXPECT_EQ(toughness(build("1.1.1-adjacent", n)), ToughnessValue::finite(Rational(1, 2)));
  }
  const EntryReport report = check_entry("1.1.1-adjacent", BuildOptions{7, {}});
  ASSERT_FALSE(report.facts.empty());
  bool saw_bound = false;
  for (const FactReport& f : report.facts) {
    if (f.claim.find("toughness <= 1/2") != std::string::npos) {
      saw_bound = true;
      EXPECT_EQ(f.verdict, FactVerdict::Verified);
    }
  }
  EXPECT_TRUE(saw_bound);
}

TEST(CheckEntry, EveryEntryHoldsAtItsDefaultOrder) {
  for (const CatalogEntry& entry : catalog_entries()) {
    BuildOptions options;
    options.n = default_n(entry);
    const EntryReport report = check_entry(entry.id, options);
    EXPECT_FALSE(report.any_refuted()) << entry.id << ": " << refuted_claims(report);
    for (const FactReport& f : report.facts) {
      if (f.claim.rfind("degree sequence", 0) == 0) {
        EXPECT_EQ(f.verdict, FactVerdict::Verified) << entry.id;
      }
    }
  }
}

TEST(CheckEntry, ExceptionalGraphIsHamiltonianButNotPancyclic) {
  const Graph s = build("S", 12);
  const CycleSpectrum spectrum = cycle_spectrum(s);
  EXPECT_TRUE(spectrum.contains(12));
  EXPECT_FALSE(spectrum.is_full(12));
  EXPECT_FALSE(is_bipartite(s));
  EXPECT_FALSE(check_entry("S", BuildOptions{12, {}}).any_refuted());
}

TEST(CheckEntry, ParameterizedFamiliesAcrossOrders) {
  for (int n = 7; n <= 11; ++n) {
    EXPECT_FALSE(check_entry("1.1.1-adjacent", BuildOptions{n, {}}).any_refuted()) << n;
    EXPECT_FALSE(check_entry("1.1.1-nonadjacent", BuildOptions{n, {}}).any_refuted()) << n;
  }
  for (int n = 9; n <= 14; ++n)
    EXPECT_FALSE(check_entry("2.1.1", BuildOptions{n, {}}).any_refuted()) << n;
  for (int n = 4; n <= 16; n += 4)
    EXPECT_FALSE(check_entry("S", BuildOptions{n, {}}).any_refuted()) << n;
}

TEST(CheckEntry, TableRowsSurviveRandomEdgeSwitches) {
  std::mt19937_64 rng(101);
  constexpr int kSamples = 100;
  for (int row = 1; row <= 15; ++row) {
    const std::string id = "table1-" + std::to_string(row);
    const Graph base = build(id, std::nullopt);
    const std::vector<Fact> facts = find_entry(id).facts(base.order());
    int refuted = 0;
    for (int i = 0; i < kSamples; ++i) {
      const Graph h = random_edge_switches(base, 10 * base.size(), rng);
      if (!is_connected(h)) continue;
      if (check_facts(id, h, facts).any_refuted()) ++refuted;
    }
    EXPECT_EQ(refuted, 0) << id;
  }
}
