// Spectral radii of the adjacency and signless Laplacian matrices, the
// edge-count bounds on both, and the threshold formulas of the pancyclicity
// and Hamiltonicity results.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toughcycle/graph.hpp"
#include "toughcycle/rational.hpp"

namespace toughcycle {

inline constexpr double kDefaultSpectralTolerance = 1e-9;

/// Largest eigenvalue with a certified bracket lower <= lambda <= upper and
/// upper - lower <= tolerance.
struct SpectralEstimate {
  double value = 0.0;
  double tolerance = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// Number of squarings of the iteration matrix performed.
  int squarings = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PowerIterationOptions {
  double tolerance = kDefaultSpectralTolerance;
  /// Seed of the random start vector used if the all-ones start stagnates.
  std::uint64_t seed = 0x5eed;
  int max_squarings = 64;
};

/// Power iteration on A + I, shifted back by one. The identity shift makes
/// the Perron root strictly dominant for bipartite graphs. Requires a
/// connected graph. The caller-facing alias in the literature is mu(G).
SpectralEstimate adjacency_spectral_radius(const Graph& g,
                                           const PowerIterationOptions& options = {});

/// Power iteration on Q = D + A, which is nonnegative and positive
/// semidefinite. Requires a connected graph.
SpectralEstimate signless_laplacian_radius(const Graph& g,
                                           const PowerIterationOptions& options = {});

/// sqrt(2m - n + 1).
double rho_edge_bound(int n, int m);
/// 2m / (n - 1) + n - 2.
double q_edge_bound(int n, int m);

/// Smallest order for which the t-tough pancyclicity results are stated:
/// 7, 16, 28 for t = 1, 2, 3.
int pancyclicity_min_order(int t);

/// C(n - 2t, 2) + 3t^2. Requires t in {1,2,3} and n >= pancyclicity_min_order(t).
long long edge_threshold(int n, int t);

/// n^2 - 4tn - 2n + 10t^2 + 2t + 1 (pancyclicity) and the same with -1
/// (Hamiltonicity). Require t in {1,2,3}.
long long rho_threshold_radicand(int n, int t);
long long hamiltonicity_rho_threshold_radicand(int n, int t);
/// Square roots of the above; negative radicands are rejected.
double rho_threshold(int n, int t);
double hamiltonicity_rho_threshold(int n, int t);

enum class QMode { Printed, Corrected };

/// Printed: (2n^2 + 10t^2 - 4tn + 2t - n)/(n - 1) + n - 2.
/// Corrected: 2 * edge_threshold(n, t)/(n - 1) + n - 2, the value that makes
/// the q-bound argument reduce to the edge theorem. The printed form exceeds
/// the corrected one by n^2/(n - 1), which puts it above 2n - 2 >= q(G).
Rational q_threshold_exact(int n, int t, QMode mode);
double q_threshold(int n, int t, QMode mode);

std::string to_string(QMode mode);

struct ThresholdRow {
  int n = 0;
  int t = 0;
  long long edge_threshold = 0;
  double rho_threshold = 0.0;
  double q_printed = 0.0;
  double q_corrected = 0.0;
};

std::vector<ThresholdRow> threshold_table(int t, int n_from, int n_to);
/// Header "n,t,edge_threshold,rho_threshold,q_printed,q_corrected".
std::string threshold_table_csv(const std::vector<ThresholdRow>& rows);

}  // namespace toughcycle
