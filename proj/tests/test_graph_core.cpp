#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "toughcycle/degseq.hpp"
#include "toughcycle/graph.hpp"
#include "toughcycle/graph_io.hpp"

using namespace toughcycle;

namespace {

DegreeSequence ds(std::initializer_list<int> d) { return DegreeSequence(std::vector<int>(d)); }

}  // namespace

TEST(StandardGraphs, CompleteFour) {
  const Graph g = complete_graph(4);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(degree_sequence(g), ds({3, 3, 3, 3}));
}

TEST(StandardGraphs, CycleFiveIsTwoRegular) {
  const Graph g = cycle_graph(5);
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(g.min_degree(), 2);
  EXPECT_EQ(g.max_degree(), 2);
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(g.adjacent(i, (i + 1) % 5));
}

TEST(StandardGraphs, CompleteBipartiteTwoThree) {
  const Graph g = complete_bipartite(2, 3);
  EXPECT_EQ(g.size(), 6);
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_EQ(degree_sequence(g), ds({2, 2, 2, 3, 3}));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(StandardGraphs, InvalidParametersAreRejected) {
  EXPECT_THROW(cycle_graph(2), PreconditionError);
  EXPECT_THROW(complete_graph(-1), PreconditionError);
  EXPECT_THROW(complete_graph(65), PreconditionError);
  const int params[] = {2};
  EXPECT_THROW(standard_graph(StandardKind::CompleteBipartite, params), PreconditionError);
}

TEST(StandardGraphs, MatchingHasTwoKVertices) {
  const Graph g = matching_graph(3);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(4, 5));
}

TEST(StandardGraphs, KindNamesParse) {
  EXPECT_EQ(parse_standard_kind("cycle"), StandardKind::Cycle);
  EXPECT_EQ(parse_standard_kind("complete_bipartite"), StandardKind::CompleteBipartite);
  EXPECT_FALSE(parse_standard_kind("wheel").has_value());
}

TEST(Join, ApexOverCliqueAndEdge) {
  const Graph g = join(complete_graph(1), disjoint_union(complete_graph(4), complete_graph(2)));
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 13);
  EXPECT_EQ(degree_sequence(g), ds({2, 2, 4, 4, 4, 4, 6}));
}

TEST(Join, TriangleOverThreeEdges) {
  const Graph g = join(complete_graph(3), matching_graph(3));
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 24);
  EXPECT_EQ(degree_sequence(g), ds({4, 4, 4, 4, 4, 4, 8, 8, 8}));
}

TEST(Join, EmptyGraphIsIdentity) {
  const Graph h = cycle_graph(5);
  EXPECT_EQ(join(empty_graph(0), h), h);
}

TEST(Join, DegreeMultisetProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
    const Graph h = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
    const Graph j = join(g, h);
    std::vector<int> expected;
    for (int v = 0; v < g.order(); ++v) expected.push_back(g.degree(v) + h.order());
    for (int v = 0; v < h.order(); ++v) expected.push_back(h.degree(v) + g.order());
    EXPECT_EQ(degree_sequence(j), DegreeSequence(expected));
    EXPECT_EQ(j.size(), g.size() + h.size() + g.order() * h.order());
  }
}

TEST(Union, CopiesAndUnion) {
  const Graph three = k_copies(3, complete_graph(2));
  EXPECT_EQ(three.order(), 6);
  EXPECT_EQ(three.size(), 3);
  EXPECT_EQ(three.min_degree(), 1);
  EXPECT_EQ(three.max_degree(), 1);

  const Graph inner = disjoint_union(matching_graph(2), complete_graph(1));
  EXPECT_EQ(inner.order(), 5);
  EXPECT_EQ(inner.size(), 2);

  EXPECT_EQ(k_copies(1, cycle_graph(5)), cycle_graph(5));
  EXPECT_EQ(k_copies(0, cycle_graph(5)).order(), 0);
}

TEST(DegreeSequenceOf, Examples) {
  EXPECT_EQ(degree_sequence(empty_graph(4)), ds({0, 0, 0, 0}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    EXPECT_EQ(degree_sequence(g).sum(), 2LL * g.size());
  }
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(is_bipartite(cycle_graph(4)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  const auto coloring = bipartition(complete_bipartite(2, 3));
  ASSERT_TRUE(coloring.has_value());
  const Graph g = complete_bipartite(2, 3);
  for (const Edge& e : g.edges()) EXPECT_NE((*coloring)[e.u], (*coloring)[e.v]);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(k_copies(3, complete_graph(2))), 3);
  EXPECT_EQ(components(complete_graph(7)), 1);
  const Graph g = join(complete_graph(1), disjoint_union(complete_graph(4), complete_graph(2)));
  const InducedSubgraph rest = delete_vertices(g, bit(0));
  EXPECT_EQ(components(rest.graph), 2);
  EXPECT_EQ(rest.label_map.front(), 1);
}

TEST(Components, DeleteOutsideVertexSetIsRejected) {
  const int outside[] = {5};
  EXPECT_THROW(delete_vertices(cycle_graph(4), outside), PreconditionError);
  EXPECT_THROW(delete_vertices(cycle_graph(4), bit(7)), PreconditionError);
}

TEST(Components, AgreesWithUnionFind) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const VertexMask removed = rng() & low_mask(n);
    std::vector<bool> keep(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) keep[v] = ((removed >> v) & 1U) == 0;
    const int expected = oracle::components(g, keep);
    EXPECT_EQ(components(delete_vertices(g, removed).graph), expected);
    EXPECT_EQ(count_components(g.rows(), g.vertices() & ~removed), expected);
  }
}

TEST(Graph6, FormatExamples) {
  EXPECT_EQ(graph6_decode("A_"), complete_graph(2));
  EXPECT_EQ(graph6_decode("Bw"), complete_graph(3));
  EXPECT_EQ(graph6_encode(cycle_graph(5)), "Dhc");
  EXPECT_EQ(graph6_decode(">>graph6<<Dhc\n"), cycle_graph(5));
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
}

TEST(Graph6, MalformedInputReportsOffset) {
  try {
    graph6_decode("D!c");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  EXPECT_THROW(graph6_decode("Dh"), ParseError);
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("~??"), ParseError);
  EXPECT_THROW(graph6_decode("A`"), ParseError);
}

TEST(Graph6, EncodeRejectsLargeOrders) {
  EXPECT_THROW(graph6_encode(empty_graph(63)), PreconditionError);
  EXPECT_NO_THROW(graph6_encode(empty_graph(62)));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  }
  const Graph big = oracle::random_graph(62, 0.5, rng);
  EXPECT_EQ(graph6_decode(graph6_encode(big)), big);
}

TEST(EdgeList, RoundTripAndErrors) {
  const Graph g = make_S(8);
  std::istringstream in(edge_list_string(g));
  EXPECT_EQ(read_edge_list(in), g);

  std::istringstream comments("# header\n3 2\n0 1\n# mid\n1 2\n");
  EXPECT_EQ(read_edge_list(comments).size(), 2);

  std::istringstream loop("3 1\n1 1\n");
  EXPECT_THROW(read_edge_list(loop), ParseError);
  std::istringstream duplicate("3 2\n0 1\n1 0\n");
  EXPECT_THROW(read_edge_list(duplicate), ParseError);
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), ParseError);
}

TEST(MakeS, DegreesAndErrors) {
  const Graph s8 = make_S(8);
  EXPECT_EQ(degree_sequence(s8), DegreeSequence({2, 2, 2, 2, 4, 4, 4, 4}));
  EXPECT_EQ(s8.size(), 12);
  EXPECT_EQ(degree_sequence(make_S(12)), DegreeSequence({2, 2, 2, 2, 2, 2, 6, 6, 6, 6, 6, 6}));
  EXPECT_THROW(make_S(10), PreconditionError);
  EXPECT_TRUE(s8.adjacent(0, 4));
  EXPECT_TRUE(s8.adjacent(4, 5));
}

TEST(Relabel, PreservesStructure) {
  const Graph g = make_S(8);
  const int perm[] = {7, 6, 5, 4, 3, 2, 1, 0};
  const Graph h = relabel(g, perm);
  EXPECT_EQ(degree_sequence(h), degree_sequence(g));
  EXPECT_TRUE(h.adjacent(7, 3));
}
