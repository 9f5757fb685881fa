#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "toughcycle/catalog.hpp"
#include "toughcycle/graph_io.hpp"
#include "toughcycle/sweep.hpp"

using namespace toughcycle;

namespace {

ScanReport scan_text(const std::string& text, int t, Theorem theorem, ScanOptions options = {}) {
  std::istringstream in(text);
  return scan_graph6(in, t, theorem, options);
}

}  // namespace

TEST(PairMask, FollowsGraphSixPairOrder) {
  EXPECT_EQ(labeled_graph_count(7), 1ULL << 21);
  EXPECT_EQ(labeled_graph_count(1), 1U);
  EXPECT_THROW(labeled_graph_count(8), PreconditionError);
  const Graph g = graph_from_pair_mask(4, 0b000101);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(graph_from_pair_mask(5, labeled_graph_count(5) - 1), complete_graph(5));
  std::uint64_t index = 0;
  oracle::for_each_labeled_graph(5, [&](std::uint64_t mask, const Graph& h) {
    ASSERT_EQ(mask, index++);
    ASSERT_EQ(graph_from_pair_mask(5, mask), h);
  });
}

TEST(Sweep, BelowTheFloorNothingMeetsTheHypothesis) {
  const ScanReport r = exhaustive_sweep(5, 1, Theorem::EdgeCount);
  EXPECT_EQ(r.counts.examined, 1024U);
  EXPECT_EQ(r.counts.hypothesis_met, 0U);
  EXPECT_EQ(r.counts.connected, 728U);
  EXPECT_THROW(exhaustive_sweep(8, 1, Theorem::EdgeCount), PreconditionError);
}

TEST(Sweep, SerialAndParallelAgree) {
  SweepOptions serial;
  serial.policy = ExecPolicy::Serial;
  for (Theorem th : {Theorem::EdgeCount, Theorem::SpectralRadius}) {
    const ScanReport a = exhaustive_sweep(6, 1, th, serial);
    const ScanReport b = exhaustive_sweep(6, 1, th);
    EXPECT_TRUE(same_findings(a, b));
    EXPECT_EQ(a.counts, b.counts);
  }
}

TEST(Sweep, CountsAreConsistent) {
  const ScanReport r = exhaustive_sweep(6, 1, Theorem::SignlessCorrected);
  EXPECT_EQ(r.counts.hypothesis_met, r.counts.confirmed + r.counts.counterexamples);
  EXPECT_EQ(r.counts.counterexamples, 0U);
  EXPECT_FALSE(r.first_counterexample_index.has_value());
}

TEST(Scan, EmptyStream) {
  const ScanReport r = scan_text("", 1, Theorem::EdgeCount);
  EXPECT_EQ(r.counts, ScanCounts{});
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Scan, MalformedLineIsReportedAndScanContinues) {
  const std::string text = "D!c\n" + graph6_encode(complete_graph(7)) + "\n\n";
  const ScanReport r = scan_text(text, 1, Theorem::EdgeCount);
  ASSERT_EQ(r.diagnostics.size(), 1U);
  EXPECT_EQ(r.diagnostics[0].line, 1U);
  EXPECT_EQ(r.counts.examined, 1U);
  EXPECT_EQ(r.counts.confirmed, 1U);
}

TEST(Scan, SkipLinesResumesByOffset) {
  const std::string k7 = graph6_encode(complete_graph(7));
  const std::string c7 = graph6_encode(cycle_graph(7));
  ScanOptions options;
  options.skip_lines = 1;
  const ScanReport r = scan_text(c7 + "\n" + k7 + "\n", 1, Theorem::EdgeCount, options);
  EXPECT_EQ(r.counts.examined, 1U);
  EXPECT_EQ(r.counts.confirmed, 1U);
}

TEST(Scan, IndependentOfWorkerCount) {
  std::mt19937_64 rng(103);
  std::string text;
  for (int i = 0; i < 3000; ++i) {
    if (i % 500 == 7) text += "not-graph6\n";
    text += graph6_encode(oracle::random_graph(7 + static_cast<int>(rng() % 3), 0.75, rng)) + "\n";
  }
  ScanOptions one;
  one.batch_lines = 64;
  ScanOptions eight = one;
  eight.workers = 8;
  for (Theorem th : {Theorem::EdgeCount, Theorem::SpectralRadius}) {
    const ScanReport a = scan_text(text, 1, th, one);
    const ScanReport b = scan_text(text, 1, th, eight);
    EXPECT_TRUE(same_findings(a, b));
    EXPECT_EQ(a.diagnostics, b.diagnostics);
    EXPECT_EQ(a.counts.examined, 3000U);
    EXPECT_GT(a.counts.hypothesis_met, 0U);
    EXPECT_EQ(to_json(a)["counts"], to_json(b)["counts"]);
  }
}

TEST(Scan, TableRowsWithTwoToughnessAreConfirmed) {
  std::string text;
  for (int row = 1; row <= 15; ++row)
    text += graph6_encode(build("table1-" + std::to_string(row), std::nullopt)) + "\n";
  ScanOptions options;
  options.workers = 4;
  const ScanReport r = scan_text(text, 2, Theorem::EdgeCount, options);
  EXPECT_EQ(r.counts.examined, 15U);
  EXPECT_EQ(r.counts.counterexamples, 0U);
  EXPECT_EQ(r.counts.hypothesis_met, r.counts.confirmed);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Report, JsonShape) {
  const ScanReport r = exhaustive_sweep(4, 1, Theorem::EdgeCount);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["tool_version"], kToolVersion);
  for (const char* key : {"examined", "connected", "hypothesis_met", "confirmed",
                          "counterexamples", "boundary"}) {
    EXPECT_TRUE(j["counts"].contains(key)) << key;
  }
  EXPECT_TRUE(j.contains("first_counterexample_graph6"));
  EXPECT_TRUE(j["diagnostics"].is_array());
  EXPECT_EQ(j["params"]["n"], 4);
  EXPECT_FALSE(to_text(r).empty());
}
