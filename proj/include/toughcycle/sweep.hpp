// Exhaustive labeled-graph sweeps and graph6 stream scans.
//
// Both come in a serial reference form and an OpenMP form; the parallel form
// processes fixed chunks independently and merges them in input order, so
// its report is identical to the serial one for any thread count.
#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toughcycle/graph.hpp"
#include "toughcycle/verify.hpp"

namespace toughcycle {

inline constexpr int kSweepMaxOrder = 7;

/// Number of labeled graphs on n vertices, 2^C(n,2).
std::uint64_t labeled_graph_count(int n);

/// Decodes a sweep index: bit b selects the b-th vertex pair in graph6 order
/// (0,1), (0,2), (1,2), (0,3), ...
void fill_from_pair_mask(Graph& g, int n, std::uint64_t mask);
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// Visits all labeled graphs on n vertices. visit(acc, index, graph) folds
/// into an accumulator; merge(into, from) must combine accumulators of
/// consecutive index ranges. The parallel path uses one accumulator per
/// chunk and merges them in index order.
template <class Acc, class Visit, class Merge>
Acc sweep_labeled_graphs(int n, ExecPolicy policy, const Acc& init, Visit visit,
                         Merge merge) {
  const std::uint64_t total = labeled_graph_count(n);
  if (policy == ExecPolicy::Serial) {
    Acc acc = init;
    Graph g(n);
    for (std::uint64_t index = 0; index < total; ++index) {
      fill_from_pair_mask(g, n, index);
      visit(acc, index, std::as_const(g));
    }
    return acc;
  }

  constexpr std::uint64_t kChunk = 1U << 12;
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<Acc> partial(static_cast<std::size_t>(chunks), init);
#pragma omp parallel
  {
    Graph g(n);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      Acc& acc = partial[static_cast<std::size_t>(c)];
      for (std::uint64_t index = begin; index < end; ++index) {
        fill_from_pair_mask(g, n, index);
        visit(acc, index, std::as_const(g));
      }
    }
  }
  Acc result = init;
  for (const Acc& acc : partial) merge(result, acc);
  return result;
}

struct ScanCounts {
  std::uint64_t examined = 0;
  std::uint64_t connected = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t confirmed = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t boundary = 0;

  ScanCounts& operator+=(const ScanCounts& other);
  friend bool operator==(const ScanCounts&, const ScanCounts&) = default;
};

struct Diagnostic {
  /// 1-based input line.
  std::uint64_t line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ScanReport {
  std::string mode;
  int n = 0;
  int t = 1;
  Theorem theorem = Theorem::EdgeCount;
  double tolerance = kDefaultSpectralTolerance;
  int workers = 1;
  std::uint64_t seed = 0;
  ScanCounts counts;
  /// Sweep index or 1-based line number of the first counterexample.
  std::optional<std::uint64_t> first_counterexample_index;
  std::optional<std::string> first_counterexample_graph6;
  std::vector<Diagnostic> diagnostics;
};

bool same_findings(const ScanReport& a, const ScanReport& b);

struct SweepOptions {
  ExecPolicy policy = ExecPolicy::Parallel;
  VerifyOptions verify;
};

/// All labeled graphs on n <= 7 vertices; disconnected graphs are counted
/// as examined only.
ScanReport exhaustive_sweep(int n, int t, Theorem theorem,
                            const SweepOptions& options = {});

struct ScanOptions {
  int workers = 1;
  /// Lines to skip before scanning (resume by line offset).
  std::uint64_t skip_lines = 0;
  std::size_t batch_lines = 1024;
  VerifyOptions verify;
};

/// One graph6 graph per line; blank lines are ignored, malformed lines are
/// reported as diagnostics and the scan continues.
ScanReport scan_graph6(std::istream& in, int t, Theorem theorem,
                       const ScanOptions& options = {});

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json to_json(const ScanReport& report);
std::string to_text(const ScanReport& report);

}  // namespace toughcycle
