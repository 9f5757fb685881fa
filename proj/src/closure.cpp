#include "toughcycle/closure.hpp"

#include <string>

#include "toughcycle/cycles.hpp"

namespace toughcycle {

namespace {

// Joins the first qualifying pair of `order` and reports whether one existed.
bool add_first_qualifying(Graph& g, int k, std::span<const Edge> order,
                          std::vector<Edge>& added) {
  for (const Edge& e : order) {
    if (g.adjacent(e.u, e.v)) continue;
    if (g.degree(e.u) + g.degree(e.v) >= k) {
      g.add_edge(e.u, e.v);
      added.push_back(e);
      return true;
    }
  }
  return false;
}

std::vector<Edge> lexicographic_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

}  // namespace

ClosureResult bondy_chvatal_closure(const Graph& g, int k) {
  const std::vector<Edge> order = lexicographic_pairs(g.order());
  return bondy_chvatal_closure(g, k, order);
}

ClosureResult bondy_chvatal_closure(const Graph& g, int k, std::span<const Edge> scan_order) {
  if (k < 0) throw PreconditionError("closure parameter k must be >= 0");
  const auto pairs = static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2;
  if (scan_order.size() != pairs)
    throw PreconditionError("scan order must list each vertex pair exactly once");
  ClosureResult result{g, {}, false};
  while (add_first_qualifying(result.graph, k, scan_order, result.added_edges)) {
  }
  result.is_complete = result.graph.is_complete();
  return result;
}

Rational closure_toughness_requirement(int offset) {
  if (offset < 1) throw PreconditionError("closure offset must be >= 1");
  if (offset == 1) return Rational(2);
  return Rational(3LL * offset - 1, 2);
}

ClosureVerdict hamiltonicity_via_closure(const Graph& g, int offset,
                                         const ClosureCertificateOptions& options) {
  if (g.order() < 3) throw PreconditionError("Hamiltonicity needs n >= 3");
  const Rational required = closure_toughness_requirement(offset);
  const int k = g.order() - offset;
  const ClosureResult closure = bondy_chvatal_closure(g, std::max(k, 0));

  if (!closure.is_complete && !options.exact_fallback) return ClosureVerdict::Unknown;

  if (!is_t_tough(g, required, options.cutset)) {
    throw PreconditionError("the " + std::to_string(k) + "-closure certificate needs a " +
                            required.to_string() + "-tough graph; exact search found a cutset " +
                            "violating it");
  }
  if (closure.is_complete) return ClosureVerdict::Hamiltonian;
  return is_hamiltonian(closure.graph) ? ClosureVerdict::Hamiltonian
                                       : ClosureVerdict::NotHamiltonian;
}

const char* to_string(ClosureVerdict verdict) {
  switch (verdict) {
    case ClosureVerdict::Hamiltonian:
      return "Hamiltonian";
    case ClosureVerdict::NotHamiltonian:
      return "NotHamiltonian";
    case ClosureVerdict::Unknown:
      return "Unknown";
  }
  return "?";
}

}  // namespace toughcycle
