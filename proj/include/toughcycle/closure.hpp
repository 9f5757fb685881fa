// Bondy-Chvatal k-closure and closure-based Hamiltonicity certificates.
#pragma once

#include <span>
#include <vector>

#include "toughcycle/graph.hpp"
#include "toughcycle/toughness.hpp"

namespace toughcycle {

struct ClosureResult {
  Graph graph;
  /// Edges in the order they were added.
  std::vector<Edge> added_edges;
  bool is_complete = false;
};

/// Repeatedly joins the lexicographically first nonadjacent pair with degree
/// sum >= k, restarting the scan after every addition, until no pair remains.
ClosureResult bondy_chvatal_closure(const Graph& g, int k);

/// Same fixpoint, scanning pairs in the given order instead. The order must
/// list every unordered pair once.
ClosureResult bondy_chvatal_closure(const Graph& g, int k,
                                    std::span<const Edge> scan_order);

enum class ClosureVerdict { Hamiltonian, NotHamiltonian, Unknown };

struct ClosureCertificateOptions {
  /// Decide the Hamiltonicity of an incomplete closure exactly by cycle
  /// search. Exponential; off by default.
  bool exact_fallback = false;
  CutsetSearchOptions cutset;
};

/// Toughness a graph needs for Hamiltonicity to be (n - offset)-stable:
/// 2 for offset 1, (3*offset - 1)/2 for offset >= 2.
Rational closure_toughness_requirement(int offset);

/// Computes the (n - offset)-closure. A complete closure certifies
/// Hamiltonicity once the toughness requirement has been verified by exact
/// search; a failed requirement is a PreconditionError. An incomplete closure
/// yields Unknown unless exact_fallback is set, in which case the toughness
/// requirement is checked and the closure itself is searched for a
/// Hamiltonian cycle.
ClosureVerdict hamiltonicity_via_closure(const Graph& g, int offset,
                                         const ClosureCertificateOptions& options = {});

const char* to_string(ClosureVerdict verdict);

}  // namespace toughcycle
