#include "toughcycle/sweep.hpp"

#include <istream>
#include <sstream>

#include <omp.h>

#include "toughcycle/graph_io.hpp"

namespace toughcycle {

namespace {

struct SweepAcc {
  ScanCounts counts;
  std::optional<std::uint64_t> first;
};

void tally(ScanCounts& counts, Verdict verdict) {
  switch (verdict) {
    case Verdict::HypothesisFails:
      break;
    case Verdict::Confirmed:
      ++counts.hypothesis_met;
      ++counts.confirmed;
      break;
    case Verdict::Counterexample:
      ++counts.hypothesis_met;
      ++counts.counterexamples;
      break;
    case Verdict::Boundary:
      ++counts.boundary;
      break;
  }
}

void require_t(int t) {
  if (t < 1 || t > 3) throw PreconditionError("t must be 1, 2 or 3, got " + std::to_string(t));
}

// Outcome of one scanned line.
struct LineResult {
  enum class Kind { Blank, Diagnostic, Evaluated } kind = Kind::Blank;
  bool connected = false;
  Verdict verdict = Verdict::HypothesisFails;
  std::string message;
};

LineResult scan_line(const std::string& line, int t, Theorem theorem,
                     const VerifyOptions& verify) {
  LineResult result;
  if (line.find_first_not_of(" \t\r") == std::string::npos) return result;
  Graph g;
  try {
    g = graph6_decode(line);
  } catch (const ParseError& e) {
    result.kind = LineResult::Kind::Diagnostic;
    result.message = e.what();
    return result;
  }
  result.kind = LineResult::Kind::Evaluated;
  result.connected = g.order() > 0 && is_connected(g);
  try {
    result.verdict = check_theorem(g, t, theorem, verify).verdict;
  } catch (const std::exception& e) {
    result.kind = LineResult::Kind::Diagnostic;
    result.message = std::string("evaluation failed: ") + e.what();
  }
  return result;
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > kSweepMaxOrder)
    throw PreconditionError("exhaustive sweeps support n <= " + std::to_string(kSweepMaxOrder) +
                            "; stream larger graphs through scan_graph6");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void fill_from_pair_mask(Graph& g, int n, std::uint64_t mask) {
  if (g.order() != n) {
    g = Graph(n);
  } else {
    g.clear_edges();
  }
  int b = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++b) {
      if ((mask >> b) & 1U) g.add_edge(u, v);
    }
  }
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  Graph g(n);
  fill_from_pair_mask(g, n, mask);
  return g;
}

ScanCounts& ScanCounts::operator+=(const ScanCounts& other) {
  examined += other.examined;
  connected += other.connected;
  hypothesis_met += other.hypothesis_met;
  confirmed += other.confirmed;
  counterexamples += other.counterexamples;
  boundary += other.boundary;
  return *this;
}

bool same_findings(const ScanReport& a, const ScanReport& b) {
  return a.counts == b.counts && a.first_counterexample_index == b.first_counterexample_index &&
         a.first_counterexample_graph6 == b.first_counterexample_graph6 &&
         a.diagnostics == b.diagnostics;
}

ScanReport exhaustive_sweep(int n, int t, Theorem theorem, const SweepOptions& options) {
  require_t(t);
  labeled_graph_count(n);
  VerifyOptions verify = options.verify;
  verify.cutset.policy = ExecPolicy::Serial;

  const SweepAcc acc = sweep_labeled_graphs(
      n, options.policy, SweepAcc{},
      [&](SweepAcc& a, std::uint64_t index, const Graph& g) {
        ++a.counts.examined;
        if (g.order() == 0 || count_components(g.rows(), g.vertices()) != 1) return;
        ++a.counts.connected;
        const Verdict verdict = check_theorem(g, t, theorem, verify).verdict;
        tally(a.counts, verdict);
        if (verdict == Verdict::Counterexample && !a.first) a.first = index;
      },
      [](SweepAcc& into, const SweepAcc& from) {
        into.counts += from.counts;
        if (!into.first) into.first = from.first;
      });

  ScanReport report;
  report.mode = "sweep";
  report.n = n;
  report.t = t;
  report.theorem = theorem;
  report.tolerance = verify.tolerance;
  report.workers = options.policy == ExecPolicy::Parallel ? omp_get_max_threads() : 1;
  report.seed = verify.seed;
  report.counts = acc.counts;
  report.first_counterexample_index = acc.first;
  if (acc.first) report.first_counterexample_graph6 = graph6_encode(graph_from_pair_mask(n, *acc.first));
  return report;
}

ScanReport scan_graph6(std::istream& in, int t, Theorem theorem, const ScanOptions& options) {
  require_t(t);
  if (options.workers < 1) throw PreconditionError("workers must be >= 1");
  if (options.batch_lines == 0) throw PreconditionError("batch size must be positive");
  VerifyOptions verify = options.verify;
  if (options.workers > 1) verify.cutset.policy = ExecPolicy::Serial;

  ScanReport report;
  report.mode = "scan";
  report.t = t;
  report.theorem = theorem;
  report.tolerance = verify.tolerance;
  report.workers = options.workers;
  report.seed = verify.seed;

  std::uint64_t line_number = 0;
  std::string line;
  while (line_number < options.skip_lines && std::getline(in, line)) ++line_number;

  const std::size_t batch_size = options.batch_lines * static_cast<std::size_t>(options.workers);
  std::vector<std::string> batch;
  std::vector<LineResult> results;
  bool more = true;
  while (more) {
    batch.clear();
    const std::uint64_t first_line = line_number + 1;
    while (batch.size() < batch_size) {
      if (!std::getline(in, line)) {
        more = false;
        break;
      }
      ++line_number;
      batch.push_back(line);
    }
    results.assign(batch.size(), LineResult{});
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for num_threads(options.workers) schedule(dynamic, 16) if (options.workers > 1)
    for (std::int64_t i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] =
          scan_line(batch[static_cast<std::size_t>(i)], t, theorem, verify);
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
      const LineResult& r = results[i];
      const std::uint64_t number = first_line + i;
      if (r.kind == LineResult::Kind::Blank) continue;
      if (r.kind == LineResult::Kind::Diagnostic) {
        report.diagnostics.push_back({number, r.message});
        continue;
      }
      ++report.counts.examined;
      if (r.connected) ++report.counts.connected;
      tally(report.counts, r.verdict);
      if (r.verdict == Verdict::Counterexample && !report.first_counterexample_index) {
        report.first_counterexample_index = number;
        std::string text = batch[i];
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
          text.pop_back();
        report.first_counterexample_graph6 = text;
      }
    }
  }
  return report;
}

nlohmann::json to_json(const ScanReport& report) {
  nlohmann::json params = {{"mode", report.mode},
                           {"t", report.t},
                           {"theorem", to_string(report.theorem)},
                           {"tolerance", report.tolerance},
                           {"workers", report.workers},
                           {"seed", report.seed}};
  if (report.mode == "sweep") params["n"] = report.n;
  nlohmann::json diagnostics = nlohmann::json::array();
  for (const Diagnostic& d : report.diagnostics)
    diagnostics.push_back({{"line", d.line}, {"message", d.message}});
  const ScanCounts& c = report.counts;
  nlohmann::json j = {{"tool_version", kToolVersion},
                      {"params", params},
                      {"counts",
                       {{"examined", c.examined},
                        {"connected", c.connected},
                        {"hypothesis_met", c.hypothesis_met},
                        {"confirmed", c.confirmed},
                        {"counterexamples", c.counterexamples},
                        {"boundary", c.boundary}}},
                      {"diagnostics", diagnostics}};
  j["first_counterexample_graph6"] = report.first_counterexample_graph6
                                         ? nlohmann::json(*report.first_counterexample_graph6)
                                         : nlohmann::json(nullptr);
  j["first_counterexample_index"] = report.first_counterexample_index
                                        ? nlohmann::json(*report.first_counterexample_index)
                                        : nlohmann::json(nullptr);
  return j;
}

std::string to_text(const ScanReport& report) {
  std::ostringstream out;
  out << report.mode << ": theorem " << to_string(report.theorem) << ", t=" << report.t;
  if (report.mode == "sweep") out << ", n=" << report.n;
  out << ", workers=" << report.workers << '\n';
  const ScanCounts& c = report.counts;
  out << "examined " << c.examined << ", connected " << c.connected << ", hypothesis met "
      << c.hypothesis_met << ", confirmed " << c.confirmed << ", counterexamples "
      << c.counterexamples << ", boundary " << c.boundary << '\n';
  if (report.first_counterexample_graph6) {
    out << "first counterexample: " << *report.first_counterexample_graph6 << " (index "
        << *report.first_counterexample_index << ")\n";
  }
  for (const Diagnostic& d : report.diagnostics)
    out << "line " << d.line << ": " << d.message << '\n';
  return out.str();
}

}  // namespace toughcycle
