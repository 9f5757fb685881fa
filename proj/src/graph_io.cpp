#include "toughcycle/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace toughcycle {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_trailing_space(char c) { return c == '\n' || c == '\r' || c == ' ' || c == '\t'; }

}  // namespace

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!text.empty() && is_trailing_space(text.back())) text.remove_suffix(1);
  if (text.size() <= base) throw ParseError("empty graph6 string", base);

  const int size_byte = static_cast<unsigned char>(text[base]);
  if (size_byte == 126)
    throw ParseError("graph6 orders above 62 are not supported", base);
  if (size_byte < kOffset || size_byte > 126)
    throw ParseError("invalid graph6 size byte", base);
  const int n = size_byte - kOffset;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  const std::size_t have = text.size() - base - 1;
  if (have != body) {
    throw ParseError("graph6 body has " + std::to_string(have) + " bytes, expected " +
                         std::to_string(body) + " for n=" + std::to_string(n),
                     base + 1 + std::min(have, body));
  }

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < body; ++i) {
    const std::size_t offset = base + 1 + i;
    const int byte = static_cast<unsigned char>(text[offset]);
    if (byte < kOffset || byte > 126) throw ParseError("byte out of graph6 range", offset);
    const int value = byte - kOffset;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("nonzero padding bit", offset);
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: k indexes (i, j) with i < j, j ascending.
      int j = 1;
      std::size_t start = 0;
      while (start + static_cast<std::size_t>(j) <= k) {
        start += static_cast<std::size_t>(j);
        ++j;
      }
      g.add_edge(static_cast<int>(k - start), j);
    }
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw PreconditionError("graph6 encoding supports n <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + kOffset));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kOffset));
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  const auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("missing edge-list header", line_no, "line");
  std::istringstream header(line);
  int n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw ParseError("edge-list header must be \"n m\"", line_no, "line");
  if (n > kMaxVertices) throw ParseError("edge-list order exceeds 64", line_no, "line");
  Graph g(n);
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw ParseError("edge list ended before m edges", line_no, "line");
    std::istringstream row(line);
    int u = -1;
    int v = -1;
    if (!(row >> u >> v)) throw ParseError("edge line must be \"u v\"", line_no, "line");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError("invalid edge " + std::to_string(u) + " " + std::to_string(v),
                       line_no, "line");
    if (g.adjacent(u, v)) throw ParseError("duplicate edge", line_no, "line");
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace toughcycle
