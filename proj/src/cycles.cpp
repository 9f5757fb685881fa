#include "toughcycle/cycles.hpp"

#include <sstream>

namespace toughcycle {

namespace {

// Depth-first extension of a path anchor -> ... -> end over vertices larger
// than the anchor. Cycles are counted once per direction: the vertex after
// the anchor must be smaller than the vertex closing the cycle.
class FixedLengthSearch {
 public:
  FixedLengthSearch(const Graph& g, int length) : rows_(g.rows()), length_(length) {}

  bool run(int n) {
    for (anchor_ = 0; anchor_ + length_ <= n; ++anchor_) {
      const VertexMask allowed = low_mask(n) & ~low_mask(anchor_ + 1);
      const VertexMask anchor_nbrs = rows_[anchor_] & allowed;
      if (std::popcount(anchor_nbrs) < 2) continue;
      closers_ = anchor_nbrs;
      int order[kMaxVertices];
      const int count = constrained_order(anchor_nbrs, allowed, order);
      for (int i = 0; i < count; ++i) {
        const int first = order[i];
        // The closing vertex must exceed `first`; some candidate must remain.
        if ((closers_ & ~low_mask(first + 1)) == 0) continue;
        first_ = first;
        if (extend(first, 2, allowed & ~bit(first))) return true;
      }
    }
    return false;
  }

 private:
  // Candidates sorted by degree into `pool`, fewest first (stable).
  int constrained_order(VertexMask candidates, VertexMask pool, int* order) const {
    int degree[kMaxVertices];
    int count = 0;
    for_each_bit(candidates, [&](int v) {
      const int d = std::popcount(rows_[v] & pool);
      int i = count++;
      while (i > 0 && degree[i - 1] > d) {
        order[i] = order[i - 1];
        degree[i] = degree[i - 1];
        --i;
      }
      order[i] = v;
      degree[i] = d;
    });
    return count;
  }

  // `depth` vertices are on the path; `free` are the unused candidates.
  bool extend(int end, int depth, VertexMask free) {
    const VertexMask valid_closers = closers_ & ~low_mask(first_ + 1);
    if (depth == length_) return false;
    if (depth == length_ - 1) return (rows_[end] & free & valid_closers) != 0;

    // Every cycle vertex needs two neighbors among the unused vertices and the
    // two path ends. Vertices without them must be skipped, and at most
    // `slack` vertices can be.
    const int slack = std::popcount(free) - (length_ - depth);
    const VertexMask ends = bit(end) | bit(anchor_);
    VertexMask usable = free;
    for (bool changed = true; changed;) {
      changed = false;
      const VertexMask pool = usable | ends;
      for_each_bit(usable, [&](int v) {
        if (std::popcount(rows_[v] & pool) < 2) {
          usable &= ~bit(v);
          changed = true;
        }
      });
      if (std::popcount(free & ~usable) > slack) return false;
    }

    // Reachability cut: the remaining length_ - depth vertices must lie in
    // the part of `usable` reachable from `end`, which must contain a closer.
    VertexMask reached = 0;
    VertexMask frontier = rows_[end] & usable;
    while (frontier != 0) {
      reached |= frontier;
      VertexMask next = 0;
      for_each_bit(frontier, [&](int v) { next |= rows_[v]; });
      frontier = next & usable & ~reached;
    }
    if (std::popcount(reached) < length_ - depth) return false;
    if ((reached & valid_closers) == 0) return false;

    int order[kMaxVertices];
    const int count = constrained_order(rows_[end] & usable, usable, order);
    bool found = false;
    for (int i = 0; i < count && !found; ++i) {
      found = extend(order[i], depth + 1, free & ~bit(order[i]));
    }
    return found;
  }

  std::span<const VertexMask> rows_;
  int length_;
  int anchor_ = 0;
  int first_ = 0;
  VertexMask closers_ = 0;
};

void require_order(const Graph& g) {
  if (g.order() < 3)
    throw PreconditionError("cycle properties need n >= 3, got n=" + std::to_string(g.order()));
}

}  // namespace

std::vector<int> CycleSpectrum::lengths() const {
  std::vector<int> out;
  for_each_bit(bits_, [&](int length) { out.push_back(length); });
  return out;
}

bool CycleSpectrum::is_full(int n) const noexcept {
  for (int length = 3; length <= n; ++length) {
    if (!contains(length)) return false;
  }
  return true;
}

std::string CycleSpectrum::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int length : lengths()) {
    out << (first ? "" : ",") << length;
    first = false;
  }
  out << '}';
  return out.str();
}

bool has_cycle_of_length(const Graph& g, int length) {
  if (length < 3 || length > g.order()) {
    throw PreconditionError("cycle length " + std::to_string(length) + " outside [3, " +
                            std::to_string(g.order()) + "]");
  }
  FixedLengthSearch search(g, length);
  return search.run(g.order());
}

CycleSpectrum cycle_spectrum(const Graph& g) {
  CycleSpectrum spectrum;
  for (int length = 3; length <= g.order(); ++length) {
    if (has_cycle_of_length(g, length)) spectrum.insert(length);
  }
  return spectrum;
}

bool is_hamiltonian(const Graph& g) {
  require_order(g);
  if (g.min_degree() < 2) return false;
  return has_cycle_of_length(g, g.order());
}

bool is_pancyclic(const Graph& g) {
  require_order(g);
  if (g.min_degree() < 2) return false;
  for (int length = 3; length <= g.order(); ++length) {
    if (!has_cycle_of_length(g, length)) return false;
  }
  return true;
}

}  // namespace toughcycle
