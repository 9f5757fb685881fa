// Exact toughness, t-toughness and vertex connectivity by exhaustive cutset
// search.
//
// Every vertex adjacent to all others lies in every cutset, so the search
// fixes those vertices in S and enumerates subsets of the remaining ones. The
// default kernel splits the enumeration by subset prefix across OpenMP
// threads and reduces deterministically (smallest ratio, then smallest mask).
// The *_reference functions are the plain serial loops over all 2^n subsets,
// kept as the oracle for the parallel kernels.
#pragma once

#include <cstdint>

#include "toughcycle/graph.hpp"
#include "toughcycle/rational.hpp"

namespace toughcycle {

enum class ExecPolicy { Serial, Parallel };

struct CutsetSearchOptions {
  /// Inputs with more vertices are rejected; raise deliberately.
  int max_vertices = 24;
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct ToughnessResult {
  ToughnessValue value = ToughnessValue::infinite();
  /// A cutset attaining the minimum (smallest mask among ties); 0 when
  /// the graph is complete.
  VertexMask witness = 0;
  int witness_components = 0;
};

/// Requires a connected graph.
ToughnessResult toughness_with_witness(const Graph& g,
                                       const CutsetSearchOptions& options = {});
ToughnessValue toughness(const Graph& g, const CutsetSearchOptions& options = {});

/// Whether t * c(G - S) <= |S| for every cutset S. Subsets are visited in
/// increasing size and the search stops at the first violation, or once no
/// larger subset can violate (t * (n - |S|) <= |S|).
bool is_t_tough(const Graph& g, const Rational& t,
                const CutsetSearchOptions& options = {});

/// n - 1 for complete graphs, otherwise the smallest cutset size.
int vertex_connectivity(const Graph& g, const CutsetSearchOptions& options = {});

ToughnessValue toughness_reference(const Graph& g);
bool is_t_tough_reference(const Graph& g, const Rational& t);

}  // namespace toughcycle
