#include "chibound/graph6.hpp"

#include <string>

namespace chibound {

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxLongOrder = 258047;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxLongOrder) throw std::invalid_argument("graph6: order too large for this encoder");
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxChar));
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kBias));
    out.push_back(static_cast<char>((n & 0x3F) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t at) {
    if (at >= text.size()) throw Graph6Error("graph6: truncated input", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > kMaxChar) throw Graph6Error("graph6: character out of range", at);
    return c - kBias;
  };

  if (pos >= text.size()) throw Graph6Error("graph6: empty input", pos);
  const char lead = text[pos];
  if (lead == ':' || lead == '&') {
    throw Graph6Error("graph6: sparse6/digraph6 input is not supported", pos);
  }
  int n = 0;
  if (static_cast<unsigned char>(lead) == kMaxChar) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == kMaxChar) {
      throw Graph6Error("graph6: 8-byte size form is not supported", pos + 1);
    }
    n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    if (n <= kMaxShortOrder) throw Graph6Error("graph6: non-canonical extended size", pos);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  for (std::size_t i = pos; i < text.size(); ++i) byte_at(i);
  if (text.size() - pos != body) {
    throw Graph6Error("graph6: expected " + std::to_string(body) + " body bytes, found " +
                          std::to_string(text.size() - pos),
                      text.size() < pos + body ? text.size() : pos + body);
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = byte_at(pos + body - 1);
    if ((last & ((1 << (6 - static_cast<int>(k % 6))) - 1)) != 0) {
      throw Graph6Error("graph6: nonzero padding bits", pos + body - 1);
    }
  }
  return std::move(b).build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kHeader) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.reason(), e.offset());
    }
  }
  return out;
}

}  // namespace chibound
