#include "toughcycle/degseq.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace toughcycle {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw PreconditionError("malformed degree sequence term: \"" + std::string(text) + "\"");
  return value;
}

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '(' || c == ')'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end());
  const int n = length();
  for (int d : degrees_) {
    if (d < 0 || d > n - 1) {
      throw PreconditionError("degree " + std::to_string(d) + " outside [0, " +
                              std::to_string(n - 1) + "] for a sequence of length " +
                              std::to_string(n));
    }
  }
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::vector<int> degrees;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view term = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (term.empty()) throw PreconditionError("empty degree sequence term");
    const auto caret = term.find('^');
    const int degree = parse_int(trim(term.substr(0, caret)));
    const int count = caret == std::string_view::npos ? 1 : parse_int(trim(term.substr(caret + 1)));
    if (count < 0) throw PreconditionError("negative multiplicity");
    degrees.insert(degrees.end(), static_cast<std::size_t>(count), degree);
  }
  return DegreeSequence(std::move(degrees));
}

long long DegreeSequence::sum() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < degrees_.size();) {
    std::size_t j = i;
    while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
    if (i != 0) out << ", ";
    out << degrees_[i] << '^' << (j - i);
    i = j;
  }
  out << ')';
  return out.str();
}

bool is_graphical(const DegreeSequence& seq) {
  if (seq.sum() % 2 != 0) return false;
  std::vector<long long> d(seq.values().rbegin(), seq.values().rend());
  const auto n = static_cast<long long>(d.size());
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += d[static_cast<std::size_t>(k - 1)];
    long long rest = 0;
    for (long long i = k; i < n; ++i) rest += std::min(d[static_cast<std::size_t>(i)], k);
    if (prefix > k * (k - 1) + rest) return false;
  }
  return true;
}

Graph realize(const DegreeSequence& seq) {
  const int n = seq.length();
  Graph g(n);
  std::vector<int> residual = seq.values();
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (residual[v] > 0 && (pick < 0 || residual[v] > residual[pick])) pick = v;
    }
    if (pick < 0) break;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    int need = residual[pick];
    residual[pick] = 0;
    for (int v : order) {
      if (need == 0) break;
      if (v == pick || residual[v] == 0) continue;
      g.add_edge(pick, v);
      --residual[v];
      --need;
    }
    if (need > 0) {
      throw PreconditionError("degree sequence " + seq.to_string() + " is not graphical");
    }
  }
  return g;
}

std::size_t for_each_realization(const DegreeSequence& seq,
                                 const std::function<bool(const Graph&)>& visit,
                                 const EnumerationLimits& limits) {
  const int n = seq.length();
  if (n > limits.max_vertices) {
    throw PreconditionError("labeled enumeration is limited to n <= " +
                            std::to_string(limits.max_vertices) + " (got n=" +
                            std::to_string(n) +
                            "); sample realizations with random_edge_switches instead");
  }
  if (!is_graphical(seq)) return 0;

  std::vector<int> residual = seq.values();
  Graph g(n);
  std::size_t produced = 0;
  bool stop = false;

  // Assign the neighbors of u among u+1..n-1, then recurse on u+1.
  std::function<void(int)> vertex_step;
  std::function<void(int, int, int)> choose;

  vertex_step = [&](int u) {
    if (stop) return;
    if (u == n) {
      ++produced;
      if (!visit(g) || produced >= limits.limit) stop = true;
      return;
    }
    int candidates = 0;
    for (int v = u + 1; v < n; ++v) candidates += residual[v] > 0 ? 1 : 0;
    if (residual[u] > candidates) return;
    choose(u, u + 1, residual[u]);
  };

  choose = [&](int u, int from, int remaining) {
    if (stop) return;
    if (remaining == 0) {
      // Vertices after u can only be joined to later vertices.
      for (int v = u + 1; v < n; ++v) {
        if (residual[v] > n - 1 - (u + 1)) return;
      }
      const int saved = residual[u];
      residual[u] = 0;
      vertex_step(u + 1);
      residual[u] = saved;
      return;
    }
    for (int v = from; v < n && n - v >= remaining; ++v) {
      if (residual[v] == 0) continue;
      --residual[v];
      g.add_edge(u, v);
      choose(u, v + 1, remaining - 1);
      g.remove_edge(u, v);
      ++residual[v];
      if (stop) return;
    }
  };

  vertex_step(0);
  return produced;
}

std::vector<Graph> enumerate_realizations(const DegreeSequence& seq,
                                          const EnumerationLimits& limits) {
  std::vector<Graph> out;
  for_each_realization(
      seq,
      [&](const Graph& g) {
        out.push_back(g);
        return true;
      },
      limits);
  return out;
}

Graph random_edge_switches(Graph g, int attempts, std::mt19937_64& rng) {
  std::vector<Edge> edges = g.edges();
  if (edges.size() < 2) return g;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < attempts; ++i) {
    const std::size_t x = pick(rng);
    const std::size_t y = pick(rng);
    if (x == y) continue;
    const int a = edges[x].u;
    const int b = edges[x].v;
    int c = edges[y].u;
    int d = edges[y].v;
    if (flip(rng)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (g.adjacent(a, d) || g.adjacent(c, b)) continue;
    g.remove_edge(a, b);
    g.remove_edge(c, d);
    g.add_edge(a, d);
    g.add_edge(c, b);
    edges[x] = {std::min(a, d), std::max(a, d)};
    edges[y] = {std::min(c, b), std::max(c, b)};
  }
  return g;
}

PredicateResult predicate_P(const DegreeSequence& seq, int t) {
  if (t < 1) throw PreconditionError("P(t) needs t >= 1");
  const int n = seq.length();
  for (int i = t; 2 * i < n; ++i) {
    if (seq.d(i) <= i && seq.d(n - i + t) < n - i) return {false, i};
  }
  return {true, std::nullopt};
}

long long degree_sum_bound(int n, int k, int t) {
  if (!(1 <= t && t <= k && 2 * k < n)) {
    throw PreconditionError("degree_sum_bound needs 1 <= t <= k < n/2 (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
  }
  const long long nn = n;
  const long long kk = k;
  const long long tt = t;
  return nn * nn - nn + 3 * kk * kk + kk * (1 - 2 * nn - tt);
}

long long degree_sum_bound_factored(int n, int k, int t) {
  if (!(1 <= t && t <= k && 2 * k < n))
    throw PreconditionError("degree_sum_bound_factored needs 1 <= t <= k < n/2");
  const long long nn = n;
  const long long kk = k;
  const long long tt = t;
  return 2 * choose2(nn - 2 * tt) + 6 * tt * tt - (kk - 2 * tt) * (2 * nn - 3 * kk - 5 * tt - 1);
}

std::vector<DegreeSequence> table1_sequences() {
  static const char* const kRows[] = {
      "5^1,8^10,15^1,16^5",       "6^1,7^2,8^8,16^6",   "6^1,7^1,8^9,15^1,16^5",
      "6^1,8^10,14^1,16^5",       "6^1,8^10,15^2,16^4", "6^2,8^9,16^6",
      "7^4,8^7,16^6",             "7^3,8^8,15^1,16^5",  "7^2,8^9,15^2,16^4",
      "7^2,8^9,14^1,16^5",        "7^1,8^10,13^1,16^5", "7^1,8^10,14^1,15^1,16^4",
      "7^1,8^10,15^3,16^3",       "8^11,12^1,16^5",     "8^11,14^2,16^4",
  };
  std::vector<DegreeSequence> out;
  for (const char* row : kRows) out.push_back(DegreeSequence::parse(row));
  return out;
}

}  // namespace toughcycle
