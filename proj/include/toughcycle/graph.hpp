// Simple undirected graphs on at most 64 vertices, stored as one adjacency
// bitset row per vertex, plus the elementary constructors and combinators.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toughcycle {

/// Bitset over vertex labels 0..63.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Thrown when an operation's documented precondition is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask low_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Calls f(v) for each set bit v of mask in increasing order.
template <class F>
constexpr void for_each_bit(VertexMask mask, F&& f) {
  while (mask != 0) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class DegreeSequence;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  VertexMask vertices() const noexcept { return low_mask(n_); }
  std::span<const VertexMask> rows() const noexcept { return rows_; }

  int min_degree() const noexcept;
  int max_degree() const noexcept;
  bool is_complete() const noexcept {
    return static_cast<long long>(m_) * 2 == static_cast<long long>(n_) * (n_ - 1);
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Nonadjacent pairs (u, v), u < v, in lexicographic order.
  std::vector<Edge> non_edges() const;

  /// Adding an existing edge or removing a missing one is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Graph with_edge(int u, int v) const;
  void clear_edges() noexcept {
    std::fill(rows_.begin(), rows_.end(), VertexMask{0});
    m_ = 0;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> rows_;
};

// ---------------------------------------------------------------------------
// Standard graphs. Labeling: bipartition blocks are contiguous (first block
// 0..a-1), cycle edges are i -- (i+1 mod n), matching edges are 2i -- 2i+1.
// ---------------------------------------------------------------------------

enum class StandardKind { Complete, CompleteBipartite, Cycle, Empty, Matching };

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph empty_graph(int n);
/// kK2 on 2k vertices.
Graph matching_graph(int k);
Graph star_graph(int n);

Graph standard_graph(StandardKind kind, std::span<const int> params);
std::optional<StandardKind> parse_standard_kind(const std::string& name);

/// G v H; H's labels are shifted by G.order().
Graph join(const Graph& g, const Graph& h);
/// G + H; H's labels are shifted by G.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// kG. k == 0 yields the graph on zero vertices.
Graph k_copies(int k, const Graph& g);

DegreeSequence degree_sequence(const Graph& g);

/// A proper 2-coloring (colors 0/1, vertex 0 of each component colored 0)
/// or nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

int components(const Graph& g);
bool is_connected(const Graph& g);

/// Number of connected components of G[alive]. Hot path of the cutset
/// searches; rows must have at least as many entries as the highest bit set.
int count_components(std::span<const VertexMask> rows, VertexMask alive) noexcept;

struct InducedSubgraph {
  Graph graph;
  /// label_map[new label] = old label.
  std::vector<int> label_map;
};

/// G - S with labels compacted in increasing order.
InducedSubgraph delete_vertices(const Graph& g, VertexMask removed);
InducedSubgraph delete_vertices(const Graph& g, std::span<const int> removed);

/// S_n: clique on 0..n/2-1, matching (n/2+2i, n/2+2i+1) and cross edges
/// i -- n/2+i. Requires n divisible by 4.
Graph make_S(int n);

/// Applies a vertex relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace toughcycle
