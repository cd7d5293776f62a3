#include <string>

#include "fauxtree/graph.hpp"

namespace fauxtree {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// (column by column), packed six bits per byte, big-endian, each byte + 63.
// For n <= 62, N(n) is the single byte n + 63.

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw Graph6Error("empty graph6 line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("byte " + std::to_string(i) + " outside graph6 range 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n == 63) throw Graph6Error("graph6 multi-byte size: graphs above 32 vertices unsupported");
  if (n > kMaxVertices) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 32 vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected) {
    throw Graph6Error("graph6 length " + std::to_string(line.size()) + ", expected " +
                      std::to_string(expected) + " for " + std::to_string(n) + " vertices");
  }
  std::array<VertexSet, kMaxVertices> rows{};
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[u] |= vertex_bit(v);
        rows[v] |= vertex_bit(u);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("nonzero graph6 padding bits");
  }
  return Graph::from_rows(n, std::span(rows.data(), n));
}

}  // namespace fauxtree
