#include "toughcycle/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "toughcycle/degseq.hpp"
#include "toughcycle/graph_io.hpp"

namespace toughcycle {

namespace {

// Lazily computed invariants shared by the theorem checks of one graph.
class Evaluation {
 public:
  Evaluation(const Graph& g, const VerifyOptions& options) : g_(g), options_(options) {}

  const Graph& graph() const { return g_; }

  bool connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
  }
  bool t_tough(int t) {
    auto& slot = tough_[t];
    if (!slot) slot = is_t_tough(g_, Rational(t), options_.cutset);
    return *slot;
  }
  const SpectralEstimate& rho() {
    if (!rho_) rho_ = adjacency_spectral_radius(g_, power_options());
    return *rho_;
  }
  const SpectralEstimate& q() {
    if (!q_) q_ = signless_laplacian_radius(g_, power_options());
    return *q_;
  }
  bool bipartite() {
    if (!bipartite_) bipartite_ = is_bipartite(g_);
    return *bipartite_;
  }
  bool hamiltonian() {
    if (!hamiltonian_) hamiltonian_ = is_hamiltonian(g_);
    return *hamiltonian_;
  }
  bool pancyclic() {
    if (!pancyclic_) pancyclic_ = hamiltonian() && is_pancyclic(g_);
    return *pancyclic_;
  }

 private:
  PowerIterationOptions power_options() const {
    PowerIterationOptions p;
    p.tolerance = options_.tolerance;
    p.seed = options_.seed;
    return p;
  }

  const Graph& g_;
  const VerifyOptions& options_;
  std::optional<bool> connected_;
  std::optional<bool> tough_[4];
  std::optional<SpectralEstimate> rho_;
  std::optional<SpectralEstimate> q_;
  std::optional<bool> bipartite_;
  std::optional<bool> hamiltonian_;
  std::optional<bool> pancyclic_;
};

TheoremCheck evaluate(Evaluation& eval, int t, Theorem theorem, double tolerance) {
  TheoremCheck check;
  check.theorem = theorem;
  check.t = t;
  const Graph& g = eval.graph();
  const int n = g.order();
  const auto fail = [&](std::string reason) {
    check.verdict = Verdict::HypothesisFails;
    check.reason = std::move(reason);
    return check;
  };

  if (!in_stated_range(theorem, n, t)) return fail("out of stated range");
  if (!eval.connected()) return fail("disconnected");

  bool boundary = false;
  switch (theorem) {
    case Theorem::EdgeCount: {
      const long long threshold = edge_threshold(n, t);
      check.threshold = static_cast<double>(threshold);
      check.invariant = g.size();
      if (g.size() < threshold) return fail("edge count below threshold");
      break;
    }
    case Theorem::SpectralRadius:
    case Theorem::HamiltonicityRadius:
    case Theorem::SignlessPrinted:
    case Theorem::SignlessCorrected: {
      double threshold = 0.0;
      if (theorem == Theorem::SpectralRadius) {
        threshold = rho_threshold(n, t);
      } else if (theorem == Theorem::HamiltonicityRadius) {
        threshold = hamiltonicity_rho_threshold(n, t);
      } else {
        threshold = q_threshold(n, t,
                                theorem == Theorem::SignlessPrinted ? QMode::Printed
                                                                    : QMode::Corrected);
      }
      const bool adjacency =
          theorem == Theorem::SpectralRadius || theorem == Theorem::HamiltonicityRadius;
      const SpectralEstimate& estimate = adjacency ? eval.rho() : eval.q();
      check.threshold = threshold;
      check.invariant = estimate.value;
      const double diff = estimate.value - threshold;
      if (diff < -tolerance)
        return fail(adjacency ? "spectral radius below threshold"
                              : "signless Laplacian radius below threshold");
      boundary = diff <= tolerance;
      break;
    }
  }

  if (!eval.t_tough(t)) return fail("not " + std::to_string(t) + "-tough");
  if (boundary) {
    check.verdict = Verdict::Boundary;
    check.reason = "spectral estimate within tolerance of threshold";
    return check;
  }

  bool conclusion = false;
  if (theorem == Theorem::HamiltonicityRadius) {
    conclusion = eval.hamiltonian();
    check.reason = conclusion ? "Hamiltonian" : "not Hamiltonian";
  } else {
    if (eval.bipartite()) {
      conclusion = true;
      check.reason = "bipartite";
    } else {
      conclusion = eval.pancyclic();
      check.reason = conclusion ? "pancyclic" : "neither pancyclic nor bipartite";
    }
  }
  check.verdict = conclusion ? Verdict::Confirmed : Verdict::Counterexample;
  return check;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

nlohmann::json spectral_json(const SpectralEstimate& e) {
  return {{"value", e.value}, {"tolerance", e.tolerance}, {"lower", e.lower}, {"upper", e.upper}};
}

}  // namespace

const char* to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::EdgeCount:
      return "edges";
    case Theorem::SpectralRadius:
      return "rho";
    case Theorem::SignlessPrinted:
      return "q-printed";
    case Theorem::SignlessCorrected:
      return "q-corrected";
    case Theorem::HamiltonicityRadius:
      return "ham-rho";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::HypothesisFails:
      return "HypothesisFails";
    case Verdict::Confirmed:
      return "Confirmed";
    case Verdict::Counterexample:
      return "Counterexample";
    case Verdict::Boundary:
      return "Boundary";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(const std::string& name) {
  if (name == "edges" || name == "edges_2_1") return Theorem::EdgeCount;
  if (name == "rho" || name == "rho_2_2") return Theorem::SpectralRadius;
  if (name == "q-printed" || name == "q_2_3_printed") return Theorem::SignlessPrinted;
  if (name == "q-corrected" || name == "q_2_3_corrected") return Theorem::SignlessCorrected;
  if (name == "ham-rho" || name == "ham_rho_2_6") return Theorem::HamiltonicityRadius;
  return std::nullopt;
}

bool is_spectral(Theorem theorem) { return theorem != Theorem::EdgeCount; }

bool in_stated_range(Theorem theorem, int n, int t) {
  if (t < 1 || t > 3) return false;
  if (theorem == Theorem::HamiltonicityRadius) return t <= 2 ? n >= 8 * t : n > 9 * t;
  return n >= pancyclicity_min_order(t);
}

TheoremCheck check_theorem(const Graph& g, int t, Theorem theorem, const VerifyOptions& options) {
  Evaluation eval(g, options);
  return evaluate(eval, t, theorem, options.tolerance);
}

ClassificationReport classify(const Graph& g, int t, const VerifyOptions& options) {
  if (t < 1 || t > 3) throw PreconditionError("t must be 1, 2 or 3");
  if (g.order() < 3) throw PreconditionError("classification needs n >= 3");
  if (!is_connected(g)) throw PreconditionError("classification needs a connected graph");

  Evaluation eval(g, options);
  ClassificationReport report;
  report.n = g.order();
  report.m = g.size();
  report.t = t;
  report.delta = g.min_degree();
  if (g.order() <= options.cutset.max_vertices) {
    report.toughness = toughness(g, options.cutset);
    report.kappa = vertex_connectivity(g, options.cutset);
  }
  report.rho = eval.rho();
  report.q = eval.q();
  report.bipartite = eval.bipartite();
  report.spectrum = cycle_spectrum(g);
  report.hamiltonian = report.spectrum.contains(g.order());
  report.pancyclic = report.spectrum.is_full(g.order());
  for (Theorem theorem : {Theorem::EdgeCount, Theorem::SpectralRadius, Theorem::SignlessPrinted,
                          Theorem::SignlessCorrected, Theorem::HamiltonicityRadius}) {
    report.theorems.push_back(evaluate(eval, t, theorem, options.tolerance));
  }
  return report;
}

nlohmann::json to_json(const TheoremCheck& check) {
  nlohmann::json j = {{"theorem", to_string(check.theorem)},
                      {"t", check.t},
                      {"verdict", to_string(check.verdict)},
                      {"reason", check.reason}};
  if (check.threshold) j["threshold"] = *check.threshold;
  if (check.invariant) j["invariant"] = *check.invariant;
  return j;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json theorems = nlohmann::json::array();
  for (const TheoremCheck& c : r.theorems) theorems.push_back(to_json(c));
  nlohmann::json j = {{"n", r.n},
                      {"m", r.m},
                      {"t", r.t},
                      {"delta", r.delta},
                      {"rho", spectral_json(r.rho)},
                      {"q", spectral_json(r.q)},
                      {"bipartite", r.bipartite},
                      {"hamiltonian", r.hamiltonian},
                      {"pancyclic", r.pancyclic},
                      {"cycle_spectrum", r.spectrum.lengths()},
                      {"theorems", theorems}};
  j["toughness"] = r.toughness ? nlohmann::json(r.toughness->to_string()) : nlohmann::json(nullptr);
  j["kappa"] = r.kappa ? nlohmann::json(*r.kappa) : nlohmann::json(nullptr);
  return j;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " m=" << r.m << " delta=" << r.delta << '\n';
  out << "toughness: " << (r.toughness ? r.toughness->to_string() : "not computed (n above guard)")
      << '\n';
  out << "kappa: " << (r.kappa ? std::to_string(*r.kappa) : "not computed") << '\n';
  out << "rho: " << format_double(r.rho.value) << " (+/- " << r.rho.tolerance << ")\n";
  out << "q: " << format_double(r.q.value) << " (+/- " << r.q.tolerance << ")\n";
  out << "bipartite: " << std::boolalpha << r.bipartite << '\n';
  out << "hamiltonian: " << r.hamiltonian << '\n';
  out << "pancyclic: " << r.pancyclic << '\n';
  out << "cycle spectrum: " << r.spectrum.to_string() << '\n';
  for (const TheoremCheck& c : r.theorems) {
    out << "theorem " << to_string(c.theorem) << " (t=" << c.t << "): " << to_string(c.verdict);
    if (!c.reason.empty()) out << " - " << c.reason;
    if (c.invariant && c.threshold)
      out << " [" << format_double(*c.invariant) << " vs " << format_double(*c.threshold) << "]";
    out << '\n';
  }
  return out.str();
}

const char* to_string(SupportingProp prop) {
  switch (prop) {
    case SupportingProp::ToughnessMonotone:
      return "toughness-monotone";
    case SupportingProp::ToughnessConnectivity:
      return "toughness-connectivity";
    case SupportingProp::ToughnessMinDegree:
      return "toughness-min-degree";
    case SupportingProp::ClosureStability:
      return "closure-stability";
    case SupportingProp::DegreeConditionHamiltonian:
      return "degree-condition-hamiltonian";
    case SupportingProp::DegreeConditionPancyclic:
      return "degree-condition-pancyclic";
    case SupportingProp::DenseThirdPancyclic:
      return "dense-third-pancyclic";
    case SupportingProp::DenseHalfPancyclic:
      return "dense-half-pancyclic";
  }
  return "?";
}

const char* to_string(PropOutcome outcome) {
  switch (outcome) {
    case PropOutcome::Holds:
      return "Holds";
    case PropOutcome::NotApplicable:
      return "NotApplicable";
    case PropOutcome::Violated:
      return "Violated";
  }
  return "?";
}

std::optional<SupportingProp> parse_supporting_prop(const std::string& name) {
  static const std::pair<const char*, SupportingProp> kAliases[] = {
      {"P2_1", SupportingProp::ToughnessMonotone},
      {"P2_2", SupportingProp::ToughnessConnectivity},
      {"P2_3", SupportingProp::ToughnessMinDegree},
      {"P2_4", SupportingProp::ClosureStability},
      {"P2_7", SupportingProp::DegreeConditionHamiltonian},
      {"P2_8", SupportingProp::DegreeConditionPancyclic},
      {"P2_9", SupportingProp::DenseThirdPancyclic},
      {"P2_10", SupportingProp::DenseHalfPancyclic},
  };
  for (const auto& [alias, prop] : kAliases) {
    if (name == alias || name == to_string(prop)) return prop;
  }
  return std::nullopt;
}

bool is_isomorphic_to_S(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 4 != 0) return false;
  if (n == 4) {
    return g.size() == 4 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
  }
  const int half = n / 2;
  VertexMask high = 0;
  VertexMask low = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == half) {
      high |= bit(v);
    } else if (g.degree(v) == 2) {
      low |= bit(v);
    } else {
      return false;
    }
  }
  if (std::popcount(high) != half || std::popcount(low) != half) return false;
  bool ok = true;
  for_each_bit(high, [&](int v) {
    if ((g.neighbors(v) & high) != (high & ~bit(v))) ok = false;
    if (std::popcount(g.neighbors(v) & low) != 1) ok = false;
  });
  for_each_bit(low, [&](int v) {
    if (std::popcount(g.neighbors(v) & high) != 1) ok = false;
    if (std::popcount(g.neighbors(v) & low) != 1) ok = false;
  });
  return ok;
}

PropOutcome check_supporting_prop(const Graph& g, SupportingProp prop, std::optional<int> t,
                                  const CutsetSearchOptions& cutset) {
  if (g.order() == 0 || !is_connected(g))
    throw PreconditionError("supporting statements are checked on connected graphs");
  const int n = g.order();
  const auto verdict = [](bool conclusion) {
    return conclusion ? PropOutcome::Holds : PropOutcome::Violated;
  };

  switch (prop) {
    case SupportingProp::ToughnessMonotone: {
      if (g.is_complete()) return PropOutcome::NotApplicable;
      const ToughnessValue base = toughness(g, cutset);
      for (const Edge& e : g.non_edges()) {
        if (toughness(g.with_edge(e.u, e.v), cutset) < base) return PropOutcome::Violated;
      }
      return PropOutcome::Holds;
    }
    case SupportingProp::ToughnessConnectivity: {
      if (g.is_complete()) return PropOutcome::NotApplicable;
      const ToughnessValue tau = toughness(g, cutset);
      return verdict(tau.value() <= Rational(vertex_connectivity(g, cutset), 2));
    }
    case SupportingProp::ToughnessMinDegree: {
      if (g.is_complete()) return PropOutcome::NotApplicable;
      const ToughnessValue tau = toughness(g, cutset);
      return verdict(Rational(2) * tau.value() <= Rational(g.min_degree()));
    }
    case SupportingProp::ClosureStability: {
      if (n < 3 || !is_t_tough(g, Rational(2), cutset)) return PropOutcome::NotApplicable;
      std::vector<Edge> pairs;
      for (const Edge& e : g.non_edges()) {
        if (g.degree(e.u) + g.degree(e.v) >= n - 1) pairs.push_back(e);
      }
      if (pairs.empty()) return PropOutcome::NotApplicable;
      const bool base = is_hamiltonian(g);
      for (const Edge& e : pairs) {
        if (is_hamiltonian(g.with_edge(e.u, e.v)) != base) return PropOutcome::Violated;
      }
      return PropOutcome::Holds;
    }
    case SupportingProp::DegreeConditionHamiltonian:
    case SupportingProp::DegreeConditionPancyclic: {
      if (n < 3) return PropOutcome::NotApplicable;
      const bool pancyclic_form = prop == SupportingProp::DegreeConditionPancyclic;
      if (t && (*t < 1 || (!pancyclic_form && *t > 3)))
        throw PreconditionError("t out of range for this statement");
      const DegreeSequence seq = degree_sequence(g);
      std::vector<int> ts;
      if (t) {
        ts.push_back(*t);
      } else {
        ts = {1, 2, 3};
      }
      bool applied = false;
      std::optional<bool> hamiltonian;
      std::optional<bool> conclusion;
      for (int tt : ts) {
        if (!predicate_P(seq, tt).holds || !is_t_tough(g, Rational(tt), cutset)) continue;
        if (!hamiltonian) hamiltonian = is_hamiltonian(g);
        if (!pancyclic_form) {
          applied = true;
          if (!*hamiltonian) return PropOutcome::Violated;
          continue;
        }
        if (!*hamiltonian) continue;
        applied = true;
        if (!conclusion) conclusion = is_bipartite(g) || is_pancyclic(g);
        if (!*conclusion) return PropOutcome::Violated;
      }
      return applied ? PropOutcome::Holds : PropOutcome::NotApplicable;
    }
    case SupportingProp::DenseThirdPancyclic:
    case SupportingProp::DenseHalfPancyclic: {
      if (n < 3) return PropOutcome::NotApplicable;
      const bool third = prop == SupportingProp::DenseThirdPancyclic;
      int count = 0;
      for (int v = 0; v < n; ++v) {
        const int d2 = 2 * g.degree(v);
        count += third ? (d2 > n ? 1 : 0) : (d2 >= n ? 1 : 0);
      }
      const bool dense = third ? 3 * count > n : 2 * count >= n;
      if (!dense || !is_hamiltonian(g)) return PropOutcome::NotApplicable;
      if (third) return verdict(is_pancyclic(g));
      return verdict(is_pancyclic(g) || is_bipartite(g) || is_isomorphic_to_S(g));
    }
  }
  return PropOutcome::NotApplicable;
}

}  // namespace toughcycle
