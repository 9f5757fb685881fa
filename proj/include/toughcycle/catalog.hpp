// Witness graphs from the case analysis of the t-tough pancyclicity proofs,
// each with the facts claimed about it in machine-checkable form.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toughcycle/degseq.hpp"
#include "toughcycle/graph.hpp"
#include "toughcycle/rational.hpp"

namespace toughcycle {

enum class FactKind {
  DegreeSequenceIs,
  EdgeCountIs,
  ToughnessAtMost,
  ToughnessAtLeast,
  Hamiltonian,
  NotHamiltonian,
  Pancyclic,
  NotPancyclic,
  NotBipartite,
  /// The (n - closure_offset)-closure is complete.
  ClosureComplete,
  /// Every realization of the entry's degree sequence that is t-tough is
  /// pancyclic (exhaustive; small n only).
  ToughRealizationsPancyclic,
};

struct Fact {
  FactKind kind = FactKind::DegreeSequenceIs;
  /// Case the claim belongs to, e.g. "t=2, n=17, m=92".
  std::string source;
  std::optional<DegreeSequence> sequence;
  long long count = 0;
  Rational bound;
  int closure_offset = 1;
  /// When set, the claim is made only for graphs that are this tough; the
  /// fact is Skipped if the graph is not and the conclusion fails.
  std::optional<Rational> if_tough;
};

struct BuildOptions {
  std::optional<int> n;
  /// Cycle lengths of the 2-factor used by the "2.2.1" and "2.2.2" entries;
  /// empty means a single Hamilton cycle.
  std::vector<int> two_factor;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::optional<int> fixed_n;
  int min_n = 0;
  /// Extra constraint on n, e.g. divisibility for S_n.
  int n_modulus = 1;
  std::function<Graph(int n, const BuildOptions&)> builder;
  std::function<std::vector<Fact>(int n)> facts;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& find_entry(const std::string& id);

/// Throws PreconditionError for unknown ids or an invalid n.
Graph build(const std::string& id, const BuildOptions& options = {});
Graph build(const std::string& id, std::optional<int> n);

enum class FactVerdict { Verified, Refuted, Skipped };

struct FactReport {
  std::string claim;
  std::string source;
  FactVerdict verdict = FactVerdict::Skipped;
  std::string detail;
};

struct EntryReport {
  std::string id;
  int n = 0;
  std::vector<FactReport> facts;

  bool any_refuted() const;
};

EntryReport check_entry(const std::string& id, const BuildOptions& options = {});
/// Checks the facts of an entry against an arbitrary graph, e.g. a randomized
/// realization of the entry's degree sequence.
EntryReport check_facts(const std::string& id, const Graph& g,
                        const std::vector<Fact>& facts);

const char* to_string(FactVerdict verdict);
std::string describe(const Fact& fact);

}  // namespace toughcycle
