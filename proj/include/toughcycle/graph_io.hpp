// graph6 and plain edge-list interchange.
//
// graph6: one size byte (n + 63, n <= 62), then the upper triangle in column
// order (0,1), (0,2), (1,2), (0,3), ... packed six bits per byte, high bit
// first, each byte offset by 63.
//
// Edge list: a header line "n m" followed by m lines "u v", 0-based.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toughcycle/graph.hpp"

namespace toughcycle {

inline constexpr int kGraph6MaxOrder = 62;

class ParseError : public std::runtime_error {
 public:
  /// offset is a byte offset for graph6 and a 1-based line for edge lists.
  ParseError(const std::string& message, std::size_t offset, const char* unit = "byte")
      : std::runtime_error(message + " (at " + unit + " " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

}  // namespace toughcycle
