// Cycle lengths: fixed-length cycle search, cycle spectrum, Hamiltonicity
// and pancyclicity.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toughcycle/graph.hpp"

namespace toughcycle {

/// Set of lengths L in [3, n] for which the graph has a simple L-cycle.
class CycleSpectrum {
 public:
  CycleSpectrum() = default;

  void insert(int length) { bits_ |= std::uint64_t{1} << length; }
  bool contains(int length) const noexcept {
    return length >= 0 && length < 64 && ((bits_ >> length) & 1U);
  }
  bool empty() const noexcept { return bits_ == 0; }
  std::vector<int> lengths() const;
  /// Whether every length 3..n is present.
  bool is_full(int n) const noexcept;
  std::string to_string() const;

  friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;
  CycleSpectrum& operator|=(const CycleSpectrum& other) {
    bits_ |= other.bits_;
    return *this;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Exhaustive backtracking; the cycle is anchored at its smallest vertex and
/// partial paths are cut when the reachable unvisited region is too small.
/// Requires 3 <= length <= n.
bool has_cycle_of_length(const Graph& g, int length);

CycleSpectrum cycle_spectrum(const Graph& g);

/// Both require n >= 3.
bool is_hamiltonian(const Graph& g);
bool is_pancyclic(const Graph& g);

}  // namespace toughcycle
