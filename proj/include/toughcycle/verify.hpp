// Hypothesis/conclusion evaluation of the t-tough pancyclicity theorems and
// of the supporting statements they rest on.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toughcycle/cycles.hpp"
#include "toughcycle/graph.hpp"
#include "toughcycle/rational.hpp"
#include "toughcycle/spectral.hpp"
#include "toughcycle/toughness.hpp"

namespace toughcycle {

/// Sufficient conditions for "pancyclic or bipartite" (the first four) and
/// for Hamiltonicity (the last), each on t-tough connected graphs.
enum class Theorem {
  /// m >= C(n - 2t, 2) + 3t^2.
  EdgeCount,
  /// rho(G) >= rho_threshold(n, t).
  SpectralRadius,
  /// q(G) >= q_threshold(n, t, printed).
  SignlessPrinted,
  /// q(G) >= q_threshold(n, t, corrected).
  SignlessCorrected,
  /// rho(G) >= hamiltonicity_rho_threshold(n, t); n >= 8t (t <= 2), n > 9t (t = 3).
  HamiltonicityRadius,
};

enum class Verdict { HypothesisFails, Confirmed, Counterexample, Boundary };

const char* to_string(Theorem theorem);
const char* to_string(Verdict verdict);
/// Accepts the names printed by to_string plus the aliases edges_2_1,
/// rho_2_2, q_2_3_printed, q_2_3_corrected and ham_rho_2_6.
std::optional<Theorem> parse_theorem(const std::string& name);
bool is_spectral(Theorem theorem);
/// Whether (n, t) lies in the range the theorem is stated for.
bool in_stated_range(Theorem theorem, int n, int t);

struct VerifyOptions {
  double tolerance = kDefaultSpectralTolerance;
  std::uint64_t seed = 0x5eed;
  CutsetSearchOptions cutset;
};

struct TheoremCheck {
  Theorem theorem = Theorem::EdgeCount;
  int t = 1;
  Verdict verdict = Verdict::HypothesisFails;
  std::string reason;
  /// Threshold the graph's invariant is compared against, when evaluated.
  std::optional<double> threshold;
  std::optional<double> invariant;
};

/// Evaluates the hypothesis cheapest part first (range, edge count, spectral
/// estimate, toughness), then the conclusion. Graphs outside the stated range
/// or disconnected graphs fail the hypothesis; they are not errors. A
/// spectral estimate within tolerance of its threshold yields Boundary.
TheoremCheck check_theorem(const Graph& g, int t, Theorem theorem,
                           const VerifyOptions& options = {});

struct ClassificationReport {
  int n = 0;
  int m = 0;
  int t = 1;
  std::optional<ToughnessValue> toughness;
  int delta = 0;
  std::optional<int> kappa;
  SpectralEstimate rho;
  SpectralEstimate q;
  bool bipartite = false;
  bool hamiltonian = false;
  bool pancyclic = false;
  CycleSpectrum spectrum;
  std::vector<TheoremCheck> theorems;
};

/// Requires a connected graph with n >= 3 and t in {1,2,3}. Toughness and
/// connectivity are left empty when n exceeds the cutset search guard.
ClassificationReport classify(const Graph& g, int t, const VerifyOptions& options = {});

nlohmann::json to_json(const TheoremCheck& check);
nlohmann::json to_json(const ClassificationReport& report);
std::string to_text(const ClassificationReport& report);

/// Supporting statements used in the proofs, checked on a single graph.
enum class SupportingProp {
  /// tau(G) <= tau(G + e) for every non-edge e.
  ToughnessMonotone,
  /// tau(G) <= kappa(G)/2 for non-complete G.
  ToughnessConnectivity,
  /// 2 tau(G) <= delta(G) for non-complete G.
  ToughnessMinDegree,
  /// For 2-tough G and nonadjacent x, y with d(x) + d(y) >= n - 1:
  /// G + xy Hamiltonian iff G Hamiltonian.
  ClosureStability,
  /// t-tough + P(t) => Hamiltonian, t in {1,2,3}.
  DegreeConditionHamiltonian,
  /// t-tough + P(t) + Hamiltonian => pancyclic or bipartite.
  DegreeConditionPancyclic,
  /// Hamiltonian with more than n/3 vertices of degree > n/2 => pancyclic.
  DenseThirdPancyclic,
  /// Hamiltonian with at least n/2 vertices of degree >= n/2 => pancyclic,
  /// bipartite, or isomorphic to S_n.
  DenseHalfPancyclic,
};

enum class PropOutcome { Holds, NotApplicable, Violated };

const char* to_string(SupportingProp prop);
const char* to_string(PropOutcome outcome);
/// Accepts to_string names and the aliases P2_1 ... P2_10.
std::optional<SupportingProp> parse_supporting_prop(const std::string& name);

/// t applies to the two degree-condition statements; when absent every
/// t in {1,2,3} is tried and the outcome is Violated if any is, Holds if any
/// premise held, otherwise NotApplicable. Requires a connected graph.
PropOutcome check_supporting_prop(const Graph& g, SupportingProp prop,
                                  std::optional<int> t = std::nullopt,
                                  const CutsetSearchOptions& cutset = {});

/// Structural recognition of S_n (see make_S).
bool is_isomorphic_to_S(const Graph& g);

}  // namespace toughcycle
