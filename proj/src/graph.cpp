#include "toughcycle/graph.hpp"

#include <algorithm>
#include <string>

#include "toughcycle/degseq.hpp"

namespace toughcycle {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  require(n >= 0 && n <= kMaxVertices,
          "graph order must be in [0, " + std::to_string(kMaxVertices) + "], got " +
              std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  require(u >= 0 && u < n_ && v >= 0 && v < n_,
          "vertex out of range: " + std::to_string(u) + "," + std::to_string(v));
  require(u != v, "loops are not allowed: " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (adjacent(u, v)) return;
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!adjacent(u, v)) return;
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
  --m_;
}

Graph Graph::with_edge(int u, int v) const {
  Graph copy = *this;
  copy.add_edge(u, v);
  return copy;
}

int Graph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for_each_bit(rows_[u] & ~low_mask(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    const VertexMask missing = ~rows_[u] & low_mask(n_) & ~low_mask(u + 1);
    for_each_bit(missing, [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs both sides >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph(n);
}

Graph matching_graph(int k) {
  require(k >= 1, "matching needs k >= 1");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph star_graph(int n) {
  require(n >= 2, "star needs n >= 2");
  return complete_bipartite(1, n - 1);
}

Graph standard_graph(StandardKind kind, std::span<const int> params) {
  const auto need = [&](std::size_t count) {
    require(params.size() == count, "expected " + std::to_string(count) + " parameter(s)");
  };
  switch (kind) {
    case StandardKind::Complete:
      need(1);
      return complete_graph(params[0]);
    case StandardKind::CompleteBipartite:
      need(2);
      return complete_bipartite(params[0], params[1]);
    case StandardKind::Cycle:
      need(1);
      return cycle_graph(params[0]);
    case StandardKind::Empty:
      need(1);
      return empty_graph(params[0]);
    case StandardKind::Matching:
      need(1);
      return matching_graph(params[0]);
  }
  throw PreconditionError("unknown standard graph kind");
}

std::optional<StandardKind> parse_standard_kind(const std::string& name) {
  if (name == "complete") return StandardKind::Complete;
  if (name == "complete_bipartite") return StandardKind::CompleteBipartite;
  if (name == "cycle") return StandardKind::Cycle;
  if (name == "empty") return StandardKind::Empty;
  if (name == "matching") return StandardKind::Matching;
  return std::nullopt;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  Graph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + offset, e.v + offset);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph k_copies(int k, const Graph& g) {
  require(k >= 0, "number of copies must be >= 0");
  Graph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> degrees(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) degrees[static_cast<std::size_t>(v)] = g.degree(v);
  return DegreeSequence(std::move(degrees));
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      bool clash = false;
      for_each_bit(g.neighbors(u), [&](int v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int count_components(std::span<const VertexMask> rows, VertexMask alive) noexcept {
  int count = 0;
  while (alive != 0) {
    VertexMask frontier = alive & (~alive + 1);
    VertexMask reached = frontier;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](int v) { next |= rows[v]; });
      frontier = next & alive & ~reached;
      reached |= frontier;
    }
    alive &= ~reached;
    ++count;
  }
  return count;
}

int components(const Graph& g) { return count_components(g.rows(), g.vertices()); }

bool is_connected(const Graph& g) { return components(g) <= 1; }

InducedSubgraph delete_vertices(const Graph& g, VertexMask removed) {
  require((removed & ~g.vertices()) == 0, "vertex set is not a subset of V(G)");
  InducedSubgraph out;
  std::vector<int> new_label(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if ((removed >> v) & 1U) continue;
    new_label[v] = static_cast<int>(out.label_map.size());
    out.label_map.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.label_map.size()));
  for (const Edge& e : g.edges()) {
    if (new_label[e.u] >= 0 && new_label[e.v] >= 0)
      out.graph.add_edge(new_label[e.u], new_label[e.v]);
  }
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const int> removed) {
  VertexMask mask = 0;
  for (int v : removed) {
    require(v >= 0 && v < g.order(),
            "vertex " + std::to_string(v) + " is not in V(G)");
    mask |= bit(v);
  }
  return delete_vertices(g, mask);
}

Graph make_S(int n) {
  require(n >= 4 && n % 4 == 0,
          "S_n needs n divisible by 4 (a perfect matching on n/2 vertices), got " +
              std::to_string(n));
  const int half = n / 2;
  Graph g(n);
  for (int u = 0; u < half; ++u)
    for (int v = u + 1; v < half; ++v) g.add_edge(u, v);
  for (int i = 0; i < half / 2; ++i) g.add_edge(half + 2 * i, half + 2 * i + 1);
  for (int i = 0; i < half; ++i) g.add_edge(i, half + i);
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == g.order(), "permutation size mismatch");
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace toughcycle
