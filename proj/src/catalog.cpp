#include "toughcycle/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toughcycle/closure.hpp"
#include "toughcycle/cycles.hpp"
#include "toughcycle/spectral.hpp"
#include "toughcycle/toughness.hpp"

namespace toughcycle {

namespace {

// Raised so the t = 3 constructions (up to 25 non-universal vertices at
// n = 28) can be checked exactly.
constexpr int kCatalogCutsetGuard = 32;

DegreeSequence seq(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> degrees;
  for (const auto& [degree, count] : blocks) degrees.insert(degrees.end(), count, degree);
  return DegreeSequence(std::move(degrees));
}

Fact make_fact(FactKind kind, std::string source) {
  Fact f;
  f.kind = kind;
  f.source = std::move(source);
  return f;
}

Fact degree_fact(DegreeSequence s, std::string source) {
  Fact f = make_fact(FactKind::DegreeSequenceIs, std::move(source));
  f.sequence = std::move(s);
  return f;
}

Fact count_fact(long long m, std::string source) {
  Fact f = make_fact(FactKind::EdgeCountIs, std::move(source));
  f.count = m;
  return f;
}

Fact bound_fact(FactKind kind, Rational bound, std::string source) {
  Fact f = make_fact(kind, std::move(source));
  f.bound = bound;
  return f;
}

Fact closure_fact(int offset, std::string source, std::optional<Rational> if_tough = {}) {
  Fact f = make_fact(FactKind::ClosureComplete, std::move(source));
  f.closure_offset = offset;
  f.if_tough = if_tough;
  return f;
}

Fact plain_fact(FactKind kind, std::string source, std::optional<Rational> if_tough = {}) {
  Fact f = make_fact(kind, std::move(source));
  f.if_tough = if_tough;
  return f;
}

// Disjoint union of cycles with the given lengths; empty means one cycle of
// length n.
Graph two_factor(int n, const std::vector<int>& lengths) {
  if (lengths.empty()) return cycle_graph(n);
  if (std::accumulate(lengths.begin(), lengths.end(), 0) != n)
    throw PreconditionError("2-factor cycle lengths must sum to " + std::to_string(n));
  Graph g(0);
  for (int length : lengths) {
    if (length < 3) throw PreconditionError("2-factor cycles need length >= 3");
    g = disjoint_union(g, cycle_graph(length));
  }
  return g;
}

Graph join_two_factor_k6(const BuildOptions& options) {
  return join(two_factor(11, options.two_factor), complete_graph(6));
}

// apex 0, clique 1..n-3 without the edge 1-2, w = n-2 on 1, z = n-1 on 2.
Graph nonadjacent_variant(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  for (int u = 1; u <= n - 3; ++u)
    for (int v = u + 1; v <= n - 3; ++v) g.add_edge(u, v);
  g.remove_edge(1, 2);
  g.add_edge(1, n - 2);
  g.add_edge(2, n - 1);
  return g;
}

// Three universal hubs, six independent low vertices of degree 6, and a near
// clique X on n - 9 vertices: eighteen of them are paired off (the pair is a
// non-edge) and each of those is attached to one low vertex.
Graph three_hub_construction(int n) {
  Graph g(n);
  const int x_begin = 3;
  const int x_end = n - 6;
  const int low_begin = n - 6;
  for (int h = 0; h < 3; ++h)
    for (int v = 0; v < n; ++v)
      if (v != h) g.add_edge(h, v);
  for (int u = x_begin; u < x_end; ++u)
    for (int v = u + 1; v < x_end; ++v) g.add_edge(u, v);
  for (int i = 0; i < 18; i += 2) g.remove_edge(x_begin + i, x_begin + i + 1);
  // Low vertex j takes X vertices 3j, 3j+1, 3j+2.
  for (int i = 0; i < 18; ++i) g.add_edge(x_begin + i, low_begin + i / 3);
  return g;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> entries;
  const Rational two(2);
  const Rational three(3);

  entries.push_back(
      {"1.1.1-adjacent", "K1 join (K_{n-3} + K2); the degree-2 vertices are adjacent", std::nullopt, 7,
       1,
       [](int n, const BuildOptions&) {
         return join(complete_graph(1), disjoint_union(complete_graph(n - 3), complete_graph(2)));
       },
       [](int n) {
         const std::string src = "t=1, k=2, adjacent degree-2 vertices";
         return std::vector<Fact>{
             degree_fact(seq({{2, 2}, {n - 3, n - 3}, {n - 1, 1}}), src),
             count_fact(edge_threshold(n, 1), src),
             bound_fact(FactKind::ToughnessAtMost, Rational(1, 2), src)};
       }});

  entries.push_back(
      {"1.1.1-nonadjacent", "K1 join (K_{n-3} - uv + uw + vz); the degree-2 vertices are nonadjacent",
       std::nullopt, 7, 1, [](int n, const BuildOptions&) { return nonadjacent_variant(n); },
       [](int n) {
         const std::string src = "t=1, k=2, nonadjacent degree-2 vertices";
         return std::vector<Fact>{
             degree_fact(seq({{2, 2}, {n - 3, n - 3}, {n - 1, 1}}), src),
             count_fact(edge_threshold(n, 1), src),
             bound_fact(FactKind::ToughnessAtLeast, Rational(1), "case hypothesis t=1"),
             plain_fact(FactKind::Hamiltonian, src), plain_fact(FactKind::Pancyclic, src)};
       }});

  entries.push_back({"1.1.2", "K3 join 3K2", 9, 9, 1,
                     [](int, const BuildOptions&) {
                       return join(complete_graph(3), matching_graph(3));
                     },
                     [](int) {
                       const std::string src = "t=1, k=4, n=9";
                       return std::vector<Fact>{degree_fact(seq({{4, 6}, {8, 3}}), src),
                                                plain_fact(FactKind::Hamiltonian, src),
                                                plain_fact(FactKind::Pancyclic, src)};
                     }});

  entries.push_back(
      {"1.2-join", "K2 join (2K2 + K1)", 7, 7, 1,
       [](int, const BuildOptions&) {
         return join(complete_graph(2), disjoint_union(matching_graph(2), complete_graph(1)));
       },
       [](int) {
         const std::string src = "t=1, k=3, n=7, m=13";
         return std::vector<Fact>{degree_fact(seq({{2, 1}, {3, 4}, {6, 2}}), src),
                                  count_fact(13, src),
                                  bound_fact(FactKind::ToughnessAtMost, Rational(2, 3), src)};
       }});

  entries.push_back(
      {"fig2", "canonical realization of (3^5, 5^1, 6^1)", 7, 7, 1,
       [](int, const BuildOptions&) { return realize(seq({{3, 5}, {5, 1}, {6, 1}})); },
       [](int) {
         const std::string src = "t=1, k=3, n=7, m=13, second sequence";
         Fact all = bound_fact(FactKind::ToughRealizationsPancyclic, Rational(1), src);
         all.sequence = seq({{3, 5}, {5, 1}, {6, 1}});
         return std::vector<Fact>{degree_fact(seq({{3, 5}, {5, 1}, {6, 1}}), src),
                                  count_fact(13, src), plain_fact(FactKind::Pancyclic, src), all};
       }});

  entries.push_back(
      {"2.1.1", "canonical realization of (4^4, (n-5)^{n-6}, (n-1)^2)", std::nullopt, 9, 1,
       [](int n, const BuildOptions&) {
         return realize(seq({{4, 4}, {n - 5, n - 6}, {n - 1, 2}}));
       },
       [](int n) {
         const std::string src = "t=2, k=4";
         std::vector<Fact> facts{degree_fact(seq({{4, 4}, {n - 5, n - 6}, {n - 1, 2}}), src),
                                 closure_fact(1, src)};
         if (n >= pancyclicity_min_order(2)) facts.push_back(count_fact(edge_threshold(n, 2), src));
         facts.push_back(plain_fact(FactKind::Hamiltonian, src, Rational(2)));
         facts.push_back(plain_fact(FactKind::Pancyclic, src, Rational(2)));
         return facts;
       }});

  entries.push_back({"2.1.2-n19", "canonical realization of (9^12, 18^7)", 19, 19, 1,
                     [](int, const BuildOptions&) { return realize(seq({{9, 12}, {18, 7}})); },
                     [two](int) {
                       const std::string src = "t=2, k=9, n=19";
                       return std::vector<Fact>{degree_fact(seq({{9, 12}, {18, 7}}), src),
                                                count_fact(117, src), closure_fact(1, src, two),
                                                plain_fact(FactKind::Hamiltonian, src, two),
                                                plain_fact(FactKind::Pancyclic, src, two)};
                     }});

  entries.push_back(
      {"2.1.2-n16", "canonical realization of (7^7, 8^4, 15^5)", 16, 16, 1,
       [](int, const BuildOptions&) { return realize(seq({{7, 7}, {8, 4}, {15, 5}})); },
       [two](int) {
         const std::string src = "t=2, k=7, n=16";
         return std::vector<Fact>{degree_fact(seq({{7, 7}, {8, 4}, {15, 5}}), src),
                                  count_fact(78, src), closure_fact(1, src, two),
                                  plain_fact(FactKind::Hamiltonian, src, two),
                                  plain_fact(FactKind::Pancyclic, src, two)};
       }});

  entries.push_back(
      {"2.2.1", "P join K6 with P a 2-factor of order 11 (default C11)", 17, 17, 1,
       [](int, const BuildOptions& options) { return join_two_factor_k6(options); },
       [two](int) {
         const std::string src = "t=2, n=17, m=92";
         return std::vector<Fact>{degree_fact(seq({{8, 11}, {16, 6}}), src), count_fact(92, src),
                                  bound_fact(FactKind::ToughnessAtLeast, two, "case hypothesis t=2"),
                                  closure_fact(1, src), plain_fact(FactKind::Hamiltonian, src),
                                  plain_fact(FactKind::Pancyclic, src)};
       }});

  struct Deleted {
    const char* id;
    const char* where;
    int u;
    int v;
    DegreeSequence degrees;
  };
  const Deleted deleted[] = {
      {"2.2.2-a", "an edge inside K6", 11, 12, seq({{8, 11}, {15, 2}, {16, 4}})},
      {"2.2.2-b", "an edge of the 2-factor", 0, 1, seq({{7, 2}, {8, 9}, {16, 6}})},
      {"2.2.2-c", "an edge between the 2-factor and K6", 0, 11,
       seq({{7, 1}, {8, 10}, {15, 1}, {16, 5}})},
  };
  for (const Deleted& d : deleted) {
    const int u = d.u;
    const int v = d.v;
    const DegreeSequence degrees = d.degrees;
    entries.push_back({d.id, std::string("P join K6 minus ") + d.where, 17, 17, 1,
                       [u, v](int, const BuildOptions& options) {
                         Graph g = join_two_factor_k6(options);
                         g.remove_edge(u, v);
                         return g;
                       },
                       [degrees, two](int) {
                         const std::string src = "t=2, n=17, m=91, one edge removed";
                         return std::vector<Fact>{degree_fact(degrees, src), count_fact(91, src),
                                                  closure_fact(1, src, two),
                                                  plain_fact(FactKind::Hamiltonian, src, two),
                                                  plain_fact(FactKind::Pancyclic, src, two)};
                       }});
  }

  entries.push_back(
      {"2.2.2", "(P + K1) join K6 with P a 2-factor of order 10 (default C10)", 17, 17, 1,
       [](int, const BuildOptions& options) {
         return join(disjoint_union(two_factor(10, options.two_factor), complete_graph(1)),
                     complete_graph(6));
       },
       [two](int) {
         const std::string src = "t=2, n=17, m=91";
         return std::vector<Fact>{degree_fact(seq({{6, 1}, {8, 10}, {16, 6}}), src),
                                  count_fact(91, src), closure_fact(1, src, two),
                                  plain_fact(FactKind::Hamiltonian, src, two),
                                  plain_fact(FactKind::Pancyclic, src, two)};
       }});

  entries.push_back(
      {"fig3", "canonical realization of (8^11, 14^1, 16^5)", 17, 17, 1,
       [](int, const BuildOptions&) { return realize(seq({{8, 11}, {14, 1}, {16, 5}})); },
       [two](int) {
         const std::string src = "t=2, n=17, m=91, last sequence";
         return std::vector<Fact>{degree_fact(seq({{8, 11}, {14, 1}, {16, 5}}), src),
                                  count_fact(91, src), closure_fact(1, src, two),
                                  plain_fact(FactKind::Hamiltonian, src, two),
                                  plain_fact(FactKind::Pancyclic, src, two)};
       }});

  const std::vector<DegreeSequence> table = table1_sequences();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const DegreeSequence degrees = table[i];
    const std::string id = "table1-" + std::to_string(i + 1);
    entries.push_back({id, "canonical realization of " + degrees.to_string(), 17, 17, 1,
                       [degrees](int, const BuildOptions&) { return realize(degrees); },
                       [degrees, two, i](int) {
                         const std::string src = "t=2, n=17, m=90, row " + std::to_string(i + 1);
                         return std::vector<Fact>{degree_fact(degrees, src), count_fact(90, src),
                                                  closure_fact(1, src, two),
                                                  plain_fact(FactKind::Hamiltonian, src, two),
                                                  plain_fact(FactKind::Pancyclic, src, two)};
                       }});
  }

  entries.push_back(
      {"3.1.1", "three universal hubs over a near clique with six degree-6 vertices",
       std::nullopt, 28, 1, [](int n, const BuildOptions&) { return three_hub_construction(n); },
       [three](int n) {
         const std::string src = "t=3, k=6";
         return std::vector<Fact>{
             degree_fact(seq({{6, 6}, {n - 7, n - 9}, {n - 1, 3}}), src),
             count_fact(edge_threshold(n, 3), src),
             bound_fact(FactKind::ToughnessAtLeast, three, "case hypothesis t=3"),
             closure_fact(2, src), plain_fact(FactKind::Hamiltonian, src),
             plain_fact(FactKind::Pancyclic, src)};
       }});

  entries.push_back({"3.1.2", "canonical realization of (14^18, 28^11)", 29, 29, 1,
                     [](int, const BuildOptions&) { return realize(seq({{14, 18}, {28, 11}})); },
                     [three](int) {
                       const std::string src = "t=3, k=14, n=29";
                       return std::vector<Fact>{degree_fact(seq({{14, 18}, {28, 11}}), src),
                                                count_fact(280, src), closure_fact(2, src, three),
                                                plain_fact(FactKind::Hamiltonian, src, three),
                                                plain_fact(FactKind::Pancyclic, src, three)};
                     }});

  entries.push_back({"S", "S_n: clique K_{n/2} matched to a perfect matching on n/2 vertices",
                     std::nullopt, 4, 4, [](int n, const BuildOptions&) { return make_S(n); },
                     [](int n) {
                       const std::string src = "exception graph of the half-dense statement";
                       std::vector<Fact> facts{
                           degree_fact(seq({{2, n / 2}, {n / 2, n / 2}}), src),
                           plain_fact(FactKind::Hamiltonian, src),
                           plain_fact(FactKind::NotPancyclic, src)};
                       // S_4 is C_4.
                       if (n >= 8) facts.push_back(plain_fact(FactKind::NotBipartite, src));
                       return facts;
                     }});
  return entries;
}

int resolve_n(const CatalogEntry& entry, std::optional<int> n) {
  if (entry.fixed_n) {
    if (n && *n != *entry.fixed_n)
      throw PreconditionError("entry " + entry.id + " has fixed order " +
                              std::to_string(*entry.fixed_n));
    return *entry.fixed_n;
  }
  if (!n) throw PreconditionError("entry " + entry.id + " needs --n");
  if (*n < entry.min_n)
    throw PreconditionError("entry " + entry.id + " needs n >= " + std::to_string(entry.min_n));
  if (*n % entry.n_modulus != 0)
    throw PreconditionError("entry " + entry.id + " needs n divisible by " +
                            std::to_string(entry.n_modulus));
  if (*n > kMaxVertices) throw PreconditionError("n exceeds " + std::to_string(kMaxVertices));
  return *n;
}

// Toughness of one graph, computed at most once per report.
class ToughnessCache {
 public:
  explicit ToughnessCache(const Graph& g) : g_(g) {}

  const ToughnessValue& value() {
    if (!value_) value_ = toughness(g_, options());
    return *value_;
  }
  bool at_least(const Rational& t) {
    if (value_) return value_->at_least(t);
    return is_t_tough(g_, t, options());
  }

 private:
  static CutsetSearchOptions options() {
    CutsetSearchOptions o;
    o.max_vertices = kCatalogCutsetGuard;
    return o;
  }
  const Graph& g_;
  std::optional<ToughnessValue> value_;
};

FactReport evaluate(const Graph& g, const Fact& fact, ToughnessCache& tough) {
  FactReport report;
  report.claim = describe(fact);
  report.source = fact.source;
  const auto set = [&](bool holds, std::string detail) {
    report.verdict = holds ? FactVerdict::Verified : FactVerdict::Refuted;
    report.detail = std::move(detail);
  };

  switch (fact.kind) {
    case FactKind::DegreeSequenceIs: {
      const DegreeSequence actual = degree_sequence(g);
      set(fact.sequence && actual == *fact.sequence, "actual " + actual.to_string());
      break;
    }
    case FactKind::EdgeCountIs:
      set(g.size() == fact.count, "m=" + std::to_string(g.size()));
      break;
    case FactKind::ToughnessAtMost: {
      const ToughnessValue& tau = tough.value();
      set(!tau.is_infinite() && tau.value() <= fact.bound, "toughness " + tau.to_string());
      break;
    }
    case FactKind::ToughnessAtLeast:
      set(tough.at_least(fact.bound), "exact cutset search");
      break;
    case FactKind::Hamiltonian:
      set(is_hamiltonian(g), "");
      break;
    case FactKind::NotHamiltonian:
      set(!is_hamiltonian(g), "");
      break;
    case FactKind::Pancyclic:
    case FactKind::NotPancyclic: {
      const CycleSpectrum spectrum = cycle_spectrum(g);
      const bool full = spectrum.is_full(g.order());
      set(fact.kind == FactKind::Pancyclic ? full : !full, "cycle spectrum " + spectrum.to_string());
      break;
    }
    case FactKind::NotBipartite:
      set(!is_bipartite(g), "");
      break;
    case FactKind::ClosureComplete: {
      const int k = g.order() - fact.closure_offset;
      const ClosureResult closure = bondy_chvatal_closure(g, k);
      set(closure.is_complete, std::to_string(closure.added_edges.size()) + " edges added");
      break;
    }
    case FactKind::ToughRealizationsPancyclic: {
      if (!fact.sequence) {
        set(false, "no degree sequence");
        break;
      }
      std::size_t tough_count = 0;
      std::size_t failures = 0;
      const std::size_t total = for_each_realization(*fact.sequence, [&](const Graph& h) {
        if (!is_connected(h) || !is_t_tough(h, fact.bound, {})) return true;
        ++tough_count;
        if (!is_pancyclic(h)) ++failures;
        return true;
      });
      set(failures == 0, std::to_string(total) + " realizations, " + std::to_string(tough_count) +
                             " tough, " + std::to_string(failures) + " not pancyclic");
      break;
    }
  }

  if (fact.if_tough && report.verdict == FactVerdict::Refuted) {
    if (!tough.at_least(*fact.if_tough)) {
      report.verdict = FactVerdict::Skipped;
      report.detail = "graph is not " + fact.if_tough->to_string() + "-tough; claim does not apply";
    }
  }
  return report;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.id == id) return entry;
  }
  throw PreconditionError("unknown catalog id '" + id + "'");
}

Graph build(const std::string& id, const BuildOptions& options) {
  const CatalogEntry& entry = find_entry(id);
  return entry.builder(resolve_n(entry, options.n), options);
}

Graph build(const std::string& id, std::optional<int> n) {
  BuildOptions options;
  options.n = n;
  return build(id, options);
}

bool EntryReport::any_refuted() const {
  return std::any_of(facts.begin(), facts.end(),
                     [](const FactReport& f) { return f.verdict == FactVerdict::Refuted; });
}

EntryReport check_facts(const std::string& id, const Graph& g, const std::vector<Fact>& facts) {
  EntryReport report;
  report.id = id;
  report.n = g.order();
  ToughnessCache tough(g);
  for (const Fact& fact : facts) report.facts.push_back(evaluate(g, fact, tough));
  return report;
}

EntryReport check_entry(const std::string& id, const BuildOptions& options) {
  const CatalogEntry& entry = find_entry(id);
  const int n = resolve_n(entry, options.n);
  const Graph g = entry.builder(n, options);
  return check_facts(id, g, entry.facts(n));
}

const char* to_string(FactVerdict verdict) {
  switch (verdict) {
    case FactVerdict::Verified:
      return "Verified";
    case FactVerdict::Refuted:
      return "Refuted";
    case FactVerdict::Skipped:
      return "Skipped";
  }
  return "?";
}

std::string describe(const Fact& fact) {
  std::ostringstream out;
  switch (fact.kind) {
    case FactKind::DegreeSequenceIs:
      out << "degree sequence " << (fact.sequence ? fact.sequence->to_string() : "?");
      break;
    case FactKind::EdgeCountIs:
      out << "m = " << fact.count;
      break;
    case FactKind::ToughnessAtMost:
      out << "toughness <= " << fact.bound.to_string();
      break;
    case FactKind::ToughnessAtLeast:
      out << "toughness >= " << fact.bound.to_string();
      break;
    case FactKind::Hamiltonian:
      out << "Hamiltonian";
      break;
    case FactKind::NotHamiltonian:
      out << "not Hamiltonian";
      break;
    case FactKind::Pancyclic:
      out << "pancyclic";
      break;
    case FactKind::NotPancyclic:
      out << "not pancyclic";
      break;
    case FactKind::NotBipartite:
      out << "not bipartite";
      break;
    case FactKind::ClosureComplete:
      out << "(n-" << fact.closure_offset << ")-closure is complete";
      break;
    case FactKind::ToughRealizationsPancyclic:
      out << "every " << fact.bound.to_string() << "-tough realization of "
          << (fact.sequence ? fact.sequence->to_string() : "?") << " is pancyclic";
      break;
  }
  if (fact.if_tough) out << " (if " << fact.if_tough->to_string() << "-tough)";
  return out.str();
}

}  // namespace toughcycle
