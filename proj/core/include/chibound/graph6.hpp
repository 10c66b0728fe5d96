#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Malformed graph6 input. `offset()` is the byte position within the line.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        reason_(what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }
  /// Message without the offset suffix.
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

// graph6: size prefix (one byte n+63 for n <= 62, or '~' plus three bytes of
// 6 bits each for 63 <= n <= 258047), then the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, MSB first,
// each byte offset by 63. Trailing bits of the last byte are zero.

std::string graph6_encode(const Graph& g);
/// Decodes one line. A leading ">>graph6<<" header and a trailing newline
/// are tolerated.
Graph graph6_decode(std::string_view text);

/// Reads every non-blank line of `in` as graph6. Errors carry the line number
/// in their message.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace chibound
