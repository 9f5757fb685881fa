#include "toughcycle/toughness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <string>
#include <vector>

#include <omp.h>

namespace toughcycle {

namespace {

constexpr std::uint64_t kChunk = 1U << 12;
// Levels with fewer subsets than this run on the calling thread.
constexpr std::uint64_t kParallelThreshold = 1U << 14;

struct Binomials {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  Binomials() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const Binomials& binomials() {
  static const Binomials table;
  return table;
}

// Subsets of the non-universal vertices, addressed by compact bitmasks over
// their k positions. Subsets of one size are visited in Gosper (colex) order.
class CutsetSpace {
 public:
  explicit CutsetSpace(const Graph& g) : rows_(g.rows()), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      if (g.degree(v) == n_ - 1) {
        universal_ |= bit(v);
      } else {
        positions_.push_back(v);
        rest_ |= bit(v);
      }
    }
    for (std::size_t b = 0; b < tables_.size(); ++b) {
      for (unsigned byte = 0; byte < 256; ++byte) {
        VertexMask mask = 0;
        for (unsigned i = 0; i < 8; ++i) {
          const std::size_t index = b * 8 + i;
          if (((byte >> i) & 1U) && index < positions_.size()) mask |= bit(positions_[index]);
        }
        tables_[b][byte] = mask;
      }
    }
  }

  int n() const { return n_; }
  int k() const { return static_cast<int>(positions_.size()); }
  int universal_count() const { return std::popcount(universal_); }
  VertexMask universal() const { return universal_; }
  VertexMask rest() const { return rest_; }
  std::span<const VertexMask> rows() const { return rows_; }

  VertexMask expand(std::uint64_t compact) const {
    VertexMask mask = 0;
    for (std::size_t b = 0; compact != 0; ++b, compact >>= 8) mask |= tables_[b][compact & 0xFF];
    return mask;
  }

  // The index-th s-subset of {0..k-1} in colex order.
  std::uint64_t unrank(int s, std::uint64_t index) const {
    const auto& c = binomials().c;
    std::uint64_t compact = 0;
    int top = k();
    for (int i = s; i >= 1; --i) {
      int pos = i - 1;
      while (pos + 1 < top && c[pos + 1][i] <= index) ++pos;
      index -= c[pos][i];
      compact |= std::uint64_t{1} << pos;
      top = pos;
    }
    return compact;
  }

 private:
  std::span<const VertexMask> rows_;
  int n_;
  VertexMask universal_ = 0;
  VertexMask rest_ = 0;
  std::vector<int> positions_;
  std::array<std::array<VertexMask, 256>, 8> tables_{};
};

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return (((ripple ^ x) >> 2) / lowest) | ripple;
}

// Visits every s-subset of the non-universal vertices. visit(acc, subset)
// returns false to abandon the whole level; accumulators are per chunk and
// returned in enumeration order.
template <class Acc, class Visit>
std::vector<Acc> run_level(const CutsetSpace& space, int s, ExecPolicy policy, Visit visit) {
  const std::uint64_t total = binomials().c[space.k()][s];
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Acc> partial(static_cast<std::size_t>(chunks));
  std::atomic<bool> stop{false};

  const auto run_chunk = [&](std::uint64_t chunk) {
    if (stop.load(std::memory_order_relaxed)) return;
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    Acc& acc = partial[static_cast<std::size_t>(chunk)];
    std::uint64_t compact = space.unrank(s, begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (!visit(acc, space.expand(compact))) {
        stop.store(true, std::memory_order_relaxed);
        return;
      }
      if (s > 0 && i + 1 < end) compact = next_combination(compact);
    }
  };

  if (policy == ExecPolicy::Parallel && total >= kParallelThreshold && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
      run_chunk(static_cast<std::uint64_t>(chunk));
    }
  } else {
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) run_chunk(chunk);
  }
  return partial;
}

void check_input(const Graph& g, const CutsetSearchOptions& options) {
  if (g.order() > options.max_vertices) {
    throw PreconditionError("cutset search is limited to n <= " +
                            std::to_string(options.max_vertices) + " (got n=" +
                            std::to_string(g.order()) + "); raise max_vertices deliberately");
  }
  if (g.order() == 0 || !is_connected(g)) {
    throw PreconditionError("toughness is defined here for connected graphs only");
  }
}

// |S| / c as an exact pair; ordered by ratio, then by mask.
struct Candidate {
  long long size = 0;
  long long parts = 0;
  VertexMask mask = 0;

  bool valid() const { return parts > 0; }
  bool better_than(const Candidate& other) const {
    if (!other.valid()) return valid();
    if (!valid()) return false;
    const long long lhs = size * other.parts;
    const long long rhs = other.size * parts;
    if (lhs != rhs) return lhs < rhs;
    return mask < other.mask;
  }
};

}  // namespace

ToughnessResult toughness_with_witness(const Graph& g, const CutsetSearchOptions& options) {
  check_input(g, options);
  if (g.is_complete()) return {};

  const CutsetSpace space(g);
  const auto rows = space.rows();
  const int u = space.universal_count();
  Candidate best;
  for (int s = 0; s <= space.k(); ++s) {
    const long long size = u + s;
    const long long alive_count = space.k() - s;
    if (alive_count < 2) break;
    // c(G - S) <= n - |S|, so |S| / (n - |S|) bounds this level from below.
    if (best.valid() && size * best.parts > best.size * alive_count) break;
    const auto partial = run_level<Candidate>(
        space, s, options.policy, [&](Candidate& acc, VertexMask removed) {
          const VertexMask alive = space.rest() & ~removed;
          const int parts = count_components(rows, alive);
          if (parts >= 2) {
            const Candidate candidate{size, parts, removed | space.universal()};
            if (candidate.better_than(acc)) acc = candidate;
          }
          return true;
        });
    for (const Candidate& c : partial) {
      if (c.better_than(best)) best = c;
    }
  }
  ToughnessResult result;
  result.value = ToughnessValue::finite(Rational(best.size, best.parts));
  result.witness = best.mask;
  result.witness_components = static_cast<int>(best.parts);
  return result;
}

ToughnessValue toughness(const Graph& g, const CutsetSearchOptions& options) {
  return toughness_with_witness(g, options).value;
}

bool is_t_tough(const Graph& g, const Rational& t, const CutsetSearchOptions& options) {
  check_input(g, options);
  if (g.is_complete() || t.num() <= 0) return true;

  const CutsetSpace space(g);
  const auto rows = space.rows();
  const int u = space.universal_count();
  for (int s = 0; s <= space.k(); ++s) {
    const long long size = u + s;
    const long long alive_count = space.k() - s;
    // A violation needs t * c > |S| with c <= n - |S|.
    if (static_cast<wide_int>(t.num()) * alive_count <= static_cast<wide_int>(t.den()) * size)
      return true;
    const auto partial = run_level<char>(space, s, options.policy, [&](char& violated, VertexMask removed) {
      const int parts = count_components(rows, space.rest() & ~removed);
      if (parts >= 2 && static_cast<wide_int>(t.num()) * parts > static_cast<wide_int>(t.den()) * size) {
        violated = 1;
        return false;
      }
      return true;
    });
    if (std::any_of(partial.begin(), partial.end(), [](char v) { return v != 0; })) return false;
  }
  return true;
}

int vertex_connectivity(const Graph& g, const CutsetSearchOptions& options) {
  check_input(g, options);
  if (g.is_complete()) return g.order() - 1;

  const CutsetSpace space(g);
  const auto rows = space.rows();
  for (int s = 0; s <= space.k() - 2; ++s) {
    const auto partial = run_level<char>(space, s, options.policy, [&](char& found, VertexMask removed) {
      if (count_components(rows, space.rest() & ~removed) >= 2) {
        found = 1;
        return false;
      }
      return true;
    });
    if (std::any_of(partial.begin(), partial.end(), [](char v) { return v != 0; }))
      return space.universal_count() + s;
  }
  // Unreachable for a non-complete graph: two nonadjacent vertices are
  // separated by removing everything else.
  return g.order() - 2;
}

ToughnessValue toughness_reference(const Graph& g) {
  check_input(g, {.max_vertices = 20, .policy = ExecPolicy::Serial});
  if (g.is_complete()) return ToughnessValue::infinite();
  const int n = g.order();
  long long best_size = 0;
  long long best_parts = 0;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    const int parts = count_components(g.rows(), g.vertices() & ~s);
    if (parts < 2) continue;
    const long long size = std::popcount(s);
    if (best_parts == 0 || size * best_parts < best_size * parts) {
      best_size = size;
      best_parts = parts;
    }
  }
  return ToughnessValue::finite(Rational(best_size, best_parts));
}

bool is_t_tough_reference(const Graph& g, const Rational& t) {
  check_input(g, {.max_vertices = 20, .policy = ExecPolicy::Serial});
  const int n = g.order();
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    const int parts = count_components(g.rows(), g.vertices() & ~s);
    if (parts < 2) continue;
    if (static_cast<wide_int>(t.num()) * parts > static_cast<wide_int>(t.den()) * std::popcount(s))
      return false;
  }
  return true;
}

}  // namespace toughcycle
