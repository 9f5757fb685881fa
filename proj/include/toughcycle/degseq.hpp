// Degree sequences: graphicality, realization, labeled enumeration, the
// P(t) degree condition and the degree-sum bound used by the edge theorem.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "toughcycle/graph.hpp"

namespace toughcycle {

/// Non-decreasing list of degrees d_1 <= ... <= d_n with 0 <= d_i <= n-1.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Sorts its input; throws PreconditionError on a degree outside [0, n-1].
  explicit DegreeSequence(std::vector<int> degrees);

  /// Accepts "8^11,14^1,16^5", "(3^5, 5^1, 6^1)" or "2,2,2".
  static DegreeSequence parse(std::string_view text);

  int length() const noexcept { return static_cast<int>(degrees_.size()); }
  long long sum() const noexcept;
  const std::vector<int>& values() const noexcept { return degrees_; }
  /// 1-based access, matching the usual d_1..d_n notation.
  int d(int i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }

  /// Multiplicity notation, e.g. "(4^6, 8^3)".
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

/// Erdos-Gallai test.
bool is_graphical(const DegreeSequence& seq);

/// Havel-Hakimi realization: repeatedly saturate the vertex of highest
/// remaining degree (smallest label on ties) against the next highest. Vertex
/// i receives degree seq.d(i+1).
Graph realize(const DegreeSequence& seq);

struct EnumerationLimits {
  std::size_t limit = 1'000'000;
  int max_vertices = 10;
};

/// Visits every labeled graph in which vertex i has degree seq.d(i+1), until
/// the visitor returns false or limits.limit graphs have been produced.
/// Returns the number of graphs visited.
std::size_t for_each_realization(const DegreeSequence& seq,
                                 const std::function<bool(const Graph&)>& visit,
                                 const EnumerationLimits& limits = {});

std::vector<Graph> enumerate_realizations(const DegreeSequence& seq,
                                          const EnumerationLimits& limits = {});

/// Degree-preserving double edge swaps: ab, cd -> ad, cb. Attempts that would
/// create a loop or a multi-edge are skipped.
Graph random_edge_switches(Graph g, int attempts, std::mt19937_64& rng);

struct PredicateResult {
  bool holds = true;
  /// Smallest violating 1-based index i when !holds.
  std::optional<int> witness;
};

/// P(t): for every integer i with t <= i < n/2, d_i <= i implies
/// d_{n-i+t} >= n-i.
PredicateResult predicate_P(const DegreeSequence& seq, int t);

/// n^2 - n + 3k^2 + k(1 - 2n - t): the largest possible degree sum of a graph
/// violating P(t) at index k. Requires 1 <= t <= k < n/2.
long long degree_sum_bound(int n, int k, int t);

/// The same bound in its factored form
/// 2*C(n-2t, 2) + 6t^2 - (k-2t)(2n-3k-5t-1).
long long degree_sum_bound_factored(int n, int k, int t);

/// The fifteen degree sequences on 17 vertices with 90 edges from the t = 2,
/// m = 90 case analysis, in table order.
std::vector<DegreeSequence> table1_sequences();

}  // namespace toughcycle
