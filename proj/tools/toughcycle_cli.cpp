// toughcycle: command-line front end for the toughness / pancyclicity toolkit.
//
// Exit codes: 0 no counterexample, 1 counterexample (or refuted catalog fact),
// 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "toughcycle/catalog.hpp"
#include "toughcycle/closure.hpp"
#include "toughcycle/cycles.hpp"
#include "toughcycle/degseq.hpp"
#include "toughcycle/graph_io.hpp"
#include "toughcycle/spectral.hpp"
#include "toughcycle/sweep.hpp"
#include "toughcycle/toughness.hpp"
#include "toughcycle/verify.hpp"

namespace tc = toughcycle;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string graph6;
  std::string edgelist;
  std::string degseq;
  std::string id;
  std::optional<int> n;
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--graph6", in.graph6, "graph in graph6 format");
  auto* el = cmd->add_option("--edgelist", in.edgelist, "edge-list file ('-' for stdin)");
  auto* ds = cmd->add_option("--degseq", in.degseq, "canonical realization of a degree sequence");
  auto* id = cmd->add_option("--id", in.id, "catalog construction id");
  cmd->add_option("--n", in.n, "order for parameterized catalog entries");
  g6->excludes(el, ds, id);
  el->excludes(ds, id);
  ds->excludes(id);
}

tc::Graph load_graph(const GraphInput& in) {
  if (!in.graph6.empty()) return tc::graph6_decode(in.graph6);
  if (!in.edgelist.empty()) {
    if (in.edgelist == "-") return tc::read_edge_list(std::cin);
    std::ifstream file(in.edgelist);
    if (!file) throw UsageError("cannot open " + in.edgelist);
    return tc::read_edge_list(file);
  }
  if (!in.degseq.empty()) {
    const tc::DegreeSequence seq = tc::DegreeSequence::parse(in.degseq);
    if (!tc::is_graphical(seq)) throw UsageError(seq.to_string() + " is not graphical");
    return tc::realize(seq);
  }
  if (!in.id.empty()) return tc::build(in.id, in.n);
  throw UsageError("no graph given; use --graph6, --edgelist, --degseq or --id");
}

struct Common {
  double tolerance = tc::kDefaultSpectralTolerance;
  std::uint64_t seed = 0x5eed;
  int max_cutset = 24;
  bool json = false;

  tc::VerifyOptions verify() const {
    tc::VerifyOptions v;
    v.tolerance = tolerance;
    v.seed = seed;
    v.cutset.max_vertices = max_cutset;
    return v;
  }
};

void add_common(CLI::App* cmd, Common& c, bool spectral) {
  if (spectral) {
    cmd->add_option("--tolerance", c.tolerance, "spectral certification tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "seed for randomized restarts");
  }
  cmd->add_option("--max-cutset", c.max_cutset, "largest order for exact cutset search")
      ->check(CLI::Range(1, 64));
  cmd->add_flag("--json", c.json, "JSON output");
}

tc::Theorem resolve_theorem(const std::string& name, const std::string& q_mode) {
  if (q_mode != "printed" && q_mode != "corrected")
    throw UsageError("--q-mode must be printed or corrected");
  if (name == "q")
    return q_mode == "printed" ? tc::Theorem::SignlessPrinted : tc::Theorem::SignlessCorrected;
  const auto theorem = tc::parse_theorem(name);
  if (!theorem) throw UsageError("unknown theorem '" + name + "'");
  return *theorem;
}

std::string vertex_list(tc::VertexMask mask) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  tc::for_each_bit(mask, [&](int v) {
    out << (first ? "" : ",") << v;
    first = false;
  });
  out << '}';
  return out.str();
}

nlohmann::json spectral_json(const tc::SpectralEstimate& e) {
  return {{"value", e.value}, {"lower", e.lower}, {"upper", e.upper}, {"tolerance", e.tolerance}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

void print_entry_report(const tc::EntryReport& report, bool json) {
  if (json) {
    nlohmann::json facts = nlohmann::json::array();
    for (const tc::FactReport& f : report.facts) {
      facts.push_back({{"claim", f.claim},
                       {"source", f.source},
                       {"verdict", tc::to_string(f.verdict)},
                       {"detail", f.detail}});
    }
    std::cout << nlohmann::json{{"id", report.id}, {"n", report.n}, {"facts", facts}}.dump(2)
              << '\n';
    return;
  }
  std::cout << report.id << " (n=" << report.n << ")\n";
  for (const tc::FactReport& f : report.facts) {
    std::cout << "  " << tc::to_string(f.verdict) << ": " << f.claim << " [" << f.source << "]";
    if (!f.detail.empty()) std::cout << " - " << f.detail;
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness, cycle spectra, closures and spectral thresholds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tc::kToolVersion));

  // classify
  GraphInput classify_in;
  Common classify_opts;
  int classify_t = 1;
  auto* classify = app.add_subcommand("classify", "full invariant report and theorem verdicts");
  add_graph_input(classify, classify_in);
  add_common(classify, classify_opts, true);
  classify->add_option("--t", classify_t, "toughness parameter")->check(CLI::Range(1, 3));

  // toughness
  GraphInput tough_in;
  Common tough_opts;
  std::string tough_t;
  bool tough_serial = false;
  auto* tough = app.add_subcommand("toughness", "exact toughness by cutset search");
  add_graph_input(tough, tough_in);
  add_common(tough, tough_opts, false);
  tough->add_option("--t", tough_t, "only test t-toughness (rational, e.g. 3/2)");
  tough->add_flag("--serial", tough_serial, "use the serial search");

  // closure
  GraphInput closure_in;
  Common closure_opts;
  std::optional<int> closure_k;
  std::optional<int> closure_certify;
  bool closure_fallback = false;
  auto* closure = app.add_subcommand("closure", "Bondy-Chvatal k-closure");
  add_graph_input(closure, closure_in);
  add_common(closure, closure_opts, false);
  closure->add_option("--k", closure_k, "closure parameter (default n)");
  closure->add_option("--certify", closure_certify,
                      "Hamiltonicity via the (n - offset)-closure of a tough graph");
  closure->add_flag("--exact-fallback", closure_fallback,
                    "decide an incomplete closure by exact cycle search");

  // spectrum
  GraphInput spectrum_in;
  Common spectrum_opts;
  bool thresholds = false;
  int threshold_t = 1;
  int threshold_from = 1;
  int threshold_to = 40;
  auto* spectrum = app.add_subcommand("spectrum", "spectral radii and cycle spectrum");
  add_graph_input(spectrum, spectrum_in);
  add_common(spectrum, spectrum_opts, true);
  spectrum->add_flag("--thresholds", thresholds, "print the threshold table as CSV instead");
  spectrum->add_option("--t", threshold_t, "t for --thresholds")->check(CLI::Range(1, 3));
  spectrum->add_option("--from", threshold_from, "first n for --thresholds");
  spectrum->add_option("--to", threshold_to, "last n for --thresholds");

  // construct
  std::string construct_id;
  std::optional<int> construct_n;
  std::string construct_format = "graph6";
  std::string two_factor;
  bool construct_list = false;
  bool construct_check = false;
  int samples = 0;
  std::uint64_t construct_seed = 1;
  bool construct_json = false;
  auto* construct = app.add_subcommand("construct", "build a cataloged construction");
  construct->add_option("--id", construct_id, "catalog id");
  construct->add_option("--n", construct_n, "order for parameterized entries");
  construct->add_option("--format", construct_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  construct->add_option("--two-factor", two_factor, "cycle lengths of the 2-factor, e.g. 5,6");
  construct->add_flag("--list", construct_list, "list catalog ids");
  construct->add_flag("--check", construct_check, "check the entry's claimed facts");
  construct->add_option("--samples", samples,
                        "with --check: also check this many degree-preserving perturbations")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--seed", construct_seed, "seed for --samples");
  construct->add_flag("--json", construct_json, "JSON output for --check");

  // verify
  GraphInput verify_in;
  Common verify_opts;
  std::string verify_theorem = "edges";
  std::string verify_q_mode = "corrected";
  int verify_t = 1;
  auto* verify = app.add_subcommand("verify", "check one theorem on one graph");
  add_graph_input(verify, verify_in);
  add_common(verify, verify_opts, true);
  verify->add_option("--theorem", verify_theorem, "edges, rho, q, q-printed, q-corrected, ham-rho");
  verify->add_option("--q-mode", verify_q_mode, "printed or corrected (for --theorem q)");
  verify->add_option("--t", verify_t, "toughness parameter")->check(CLI::Range(1, 3));

  // sweep
  Common sweep_opts;
  int sweep_n = 7;
  int sweep_t = 1;
  std::string sweep_theorem = "edges";
  std::string sweep_q_mode = "corrected";
  bool sweep_serial = false;
  auto* sweep = app.add_subcommand("sweep", "all labeled graphs on n <= 7 vertices");
  add_common(sweep, sweep_opts, true);
  sweep->add_option("--n", sweep_n, "order")->check(CLI::Range(1, tc::kSweepMaxOrder));
  sweep->add_option("--t", sweep_t, "toughness parameter")->check(CLI::Range(1, 3));
  sweep->add_option("--theorem", sweep_theorem, "theorem selector");
  sweep->add_option("--q-mode", sweep_q_mode, "printed or corrected");
  sweep->add_flag("--serial", sweep_serial, "serial reference path");

  // scan
  Common scan_opts;
  std::string scan_input = "-";
  int scan_t = 1;
  std::string scan_theorem = "edges";
  std::string scan_q_mode = "corrected";
  int workers = 1;
  std::uint64_t skip = 0;
  auto* scan = app.add_subcommand("scan", "graph6 stream, one graph per line");
  add_common(scan, scan_opts, true);
  scan->add_option("--input", scan_input, "file or '-' for stdin");
  scan->add_option("--t", scan_t, "toughness parameter")->check(CLI::Range(1, 3));
  scan->add_option("--theorem", scan_theorem, "theorem selector");
  scan->add_option("--q-mode", scan_q_mode, "printed or corrected");
  scan->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));
  scan->add_option("--skip", skip, "lines to skip (resume offset)");

  // prop
  GraphInput prop_in;
  Common prop_opts;
  std::string prop_name;
  std::optional<int> prop_t;
  auto* prop = app.add_subcommand("prop", "check a supporting statement on one graph");
  add_graph_input(prop, prop_in);
  add_common(prop, prop_opts, false);
  prop->add_option("--prop", prop_name, "P2_1 ... P2_10 or its name")->required();
  prop->add_option("--t", prop_t, "t for the degree-condition statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) {
      const tc::Graph g = load_graph(classify_in);
      const tc::ClassificationReport report = tc::classify(g, classify_t, classify_opts.verify());
      if (classify_opts.json) {
        std::cout << tc::to_json(report).dump(2) << '\n';
      } else {
        std::cout << tc::to_text(report);
      }
      for (const tc::TheoremCheck& c : report.theorems)
        if (c.verdict == tc::Verdict::Counterexample) return kExitCounterexample;
      return 0;
    }

    if (*tough) {
      const tc::Graph g = load_graph(tough_in);
      tc::CutsetSearchOptions options = tough_opts.verify().cutset;
      if (tough_serial) options.policy = tc::ExecPolicy::Serial;
      if (!tough_t.empty()) {
        const tc::Rational t = tc::Rational::parse(tough_t);
        const bool holds = tc::is_t_tough(g, t, options);
        if (tough_opts.json) {
          std::cout << nlohmann::json{{"t", t.to_string()}, {"t_tough", holds}}.dump(2) << '\n';
        } else {
          std::cout << (holds ? "" : "not ") << t.to_string() << "-tough\n";
        }
        return 0;
      }
      const tc::ToughnessResult r = tc::toughness_with_witness(g, options);
      if (tough_opts.json) {
        nlohmann::json j = {{"toughness", r.value.to_string()}};
        if (!r.value.is_infinite()) {
          j["witness"] = vertex_list(r.witness);
          j["components"] = r.witness_components;
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "toughness: " << r.value.to_string() << '\n';
        if (!r.value.is_infinite()) {
          std::cout << "witness cutset: " << vertex_list(r.witness) << " leaving "
                    << r.witness_components << " components\n";
        }
      }
      return 0;
    }

    if (*closure) {
      const tc::Graph g = load_graph(closure_in);
      if (closure_certify) {
        tc::ClosureCertificateOptions options;
        options.exact_fallback = closure_fallback;
        options.cutset = closure_opts.verify().cutset;
        const tc::ClosureVerdict verdict = tc::hamiltonicity_via_closure(g, *closure_certify, options);
        if (closure_opts.json) {
          std::cout << nlohmann::json{{"verdict", tc::to_string(verdict)}}.dump(2) << '\n';
        } else {
          std::cout << tc::to_string(verdict) << '\n';
        }
        return 0;
      }
      const int k = closure_k.value_or(g.order());
      const tc::ClosureResult r = tc::bondy_chvatal_closure(g, k);
      if (closure_opts.json) {
        nlohmann::json added = nlohmann::json::array();
        for (const tc::Edge& e : r.added_edges) added.push_back({e.u, e.v});
        std::cout << nlohmann::json{{"k", k},
                                    {"added_edges", added},
                                    {"complete", r.is_complete},
                                    {"closure_graph6", tc::graph6_encode(r.graph)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << k << "-closure: " << r.added_edges.size() << " edges added";
        std::cout << (r.is_complete ? ", complete\n" : ", not complete\n");
        for (const tc::Edge& e : r.added_edges) std::cout << e.u << ' ' << e.v << '\n';
      }
      return 0;
    }

    if (*spectrum) {
      if (thresholds) {
        std::cout << tc::threshold_table_csv(
            tc::threshold_table(threshold_t, threshold_from, threshold_to));
        return 0;
      }
      const tc::Graph g = load_graph(spectrum_in);
      tc::PowerIterationOptions options;
      options.tolerance = spectrum_opts.tolerance;
      options.seed = spectrum_opts.seed;
      const tc::SpectralEstimate rho = tc::adjacency_spectral_radius(g, options);
      const tc::SpectralEstimate q = tc::signless_laplacian_radius(g, options);
      const tc::CycleSpectrum cycles = tc::cycle_spectrum(g);
      if (spectrum_opts.json) {
        std::cout << nlohmann::json{{"rho", spectral_json(rho)},
                                    {"q", spectral_json(q)},
                                    {"cycle_spectrum", cycles.lengths()}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout.precision(12);
        std::cout << "rho: " << rho.value << " in [" << rho.lower << ", " << rho.upper << "]\n";
        std::cout << "q: " << q.value << " in [" << q.lower << ", " << q.upper << "]\n";
        std::cout << "cycle spectrum: " << cycles.to_string() << '\n';
      }
      return 0;
    }

    if (*construct) {
      if (construct_list) {
        for (const tc::CatalogEntry& e : tc::catalog_entries()) {
          std::cout << e.id << "  ";
          if (e.fixed_n) {
            std::cout << "n=" << *e.fixed_n;
          } else {
            std::cout << "n>=" << e.min_n;
            if (e.n_modulus > 1) std::cout << ", n%" << e.n_modulus << "=0";
          }
          std::cout << "  " << e.description << '\n';
        }
        return 0;
      }
      if (construct_id.empty()) throw UsageError("construct needs --id or --list");
      tc::BuildOptions options;
      options.n = construct_n;
      options.two_factor = parse_int_list(two_factor);
      if (construct_check) {
        const tc::EntryReport report = tc::check_entry(construct_id, options);
        print_entry_report(report, construct_json);
        bool refuted = report.any_refuted();
        if (samples > 0) {
          const tc::CatalogEntry& entry = tc::find_entry(construct_id);
          const tc::Graph base = tc::build(construct_id, options);
          const std::vector<tc::Fact> facts = entry.facts(base.order());
          std::mt19937_64 rng(construct_seed);
          int sample_refuted = 0;
          for (int i = 0; i < samples; ++i) {
            const tc::Graph h = tc::random_edge_switches(base, 10 * base.size(), rng);
            if (!tc::is_connected(h)) continue;
            const tc::EntryReport r = tc::check_facts(construct_id, h, facts);
            if (r.any_refuted()) {
              ++sample_refuted;
              std::cerr << "sample " << i << " refutes a fact: " << tc::graph6_encode(h) << '\n';
            }
          }
          std::cout << samples << " perturbed samples, " << sample_refuted
                    << " with a refuted fact\n";
          refuted = refuted || sample_refuted > 0;
        }
        return refuted ? kExitCounterexample : 0;
      }
      const tc::Graph g = tc::build(construct_id, options);
      if (construct_format == "graph6") {
        std::cout << tc::graph6_encode(g) << '\n';
      } else {
        tc::write_edge_list(std::cout, g);
      }
      return 0;
    }

    if (*verify) {
      const tc::Graph g = load_graph(verify_in);
      const tc::Theorem theorem = resolve_theorem(verify_theorem, verify_q_mode);
      const tc::TheoremCheck check = tc::check_theorem(g, verify_t, theorem, verify_opts.verify());
      if (verify_opts.json) {
        nlohmann::json j = tc::to_json(check);
        if (tc::is_spectral(theorem) && tc::in_stated_range(theorem, g.order(), verify_t) &&
            (theorem == tc::Theorem::SignlessPrinted || theorem == tc::Theorem::SignlessCorrected)) {
          j["q_threshold_printed"] = tc::q_threshold(g.order(), verify_t, tc::QMode::Printed);
          j["q_threshold_corrected"] = tc::q_threshold(g.order(), verify_t, tc::QMode::Corrected);
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << tc::to_string(check.theorem) << " (t=" << check.t
                  << "): " << tc::to_string(check.verdict);
        if (!check.reason.empty()) std::cout << " - " << check.reason;
        std::cout << '\n';
      }
      return check.verdict == tc::Verdict::Counterexample ? kExitCounterexample : 0;
    }

    if (*sweep) {
      tc::SweepOptions options;
      options.policy = sweep_serial ? tc::ExecPolicy::Serial : tc::ExecPolicy::Parallel;
      options.verify = sweep_opts.verify();
      const tc::ScanReport report = tc::exhaustive_sweep(
          sweep_n, sweep_t, resolve_theorem(sweep_theorem, sweep_q_mode), options);
      std::cout << (sweep_opts.json ? tc::to_json(report).dump(2) + "\n" : tc::to_text(report));
      return report.counts.counterexamples > 0 ? kExitCounterexample : 0;
    }

    if (*scan) {
      tc::ScanOptions options;
      options.workers = workers;
      options.skip_lines = skip;
      options.verify = scan_opts.verify();
      const tc::Theorem theorem = resolve_theorem(scan_theorem, scan_q_mode);
      tc::ScanReport report;
      if (scan_input == "-") {
        report = tc::scan_graph6(std::cin, scan_t, theorem, options);
      } else {
        std::ifstream file(scan_input);
        if (!file) throw UsageError("cannot open " + scan_input);
        report = tc::scan_graph6(file, scan_t, theorem, options);
      }
      std::cout << (scan_opts.json ? tc::to_json(report).dump(2) + "\n" : tc::to_text(report));
      return report.counts.counterexamples > 0 ? kExitCounterexample : 0;
    }

    if (*prop) {
      const tc::Graph g = load_graph(prop_in);
      const auto which = tc::parse_supporting_prop(prop_name);
      if (!which) throw UsageError("unknown statement '" + prop_name + "'");
      const tc::PropOutcome outcome =
          tc::check_supporting_prop(g, *which, prop_t, prop_opts.verify().cutset);
      if (prop_opts.json) {
        std::cout << nlohmann::json{{"prop", tc::to_string(*which)},
                                    {"outcome", tc::to_string(outcome)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << tc::to_string(*which) << ": " << tc::to_string(outcome) << '\n';
      }
      return outcome == tc::PropOutcome::Violated ? kExitCounterexample : 0;
    }
  } catch (const tc::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tc::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
