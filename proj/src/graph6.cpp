#include "hamstar/graph6.hpp"

#include "hamstar/errors.hpp"

namespace hamstar {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::string_view body = line.substr(base);

  if (body.empty()) throw ParseError("empty graph6 line", base);
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!printable(body[i])) throw ParseError("byte outside graph6 range 63..126", base + i);
  }

  long n = 0;
  std::size_t pos = 0;
  if (body[0] != 126) {
    n = body[0] - kBias;
    pos = 1;
  } else {
    if (body.size() >= 2 && body[1] == 126) {
      throw ParseError("graph order exceeds 64 (8-byte size field)", base + 1);
    }
    if (body.size() < 4) throw ParseError("truncated size field", base + body.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (body[i] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph order " + std::to_string(n) + " exceeds 64", base);
  }

  const long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  const std::size_t have = body.size() - pos;
  if (have < need) throw ParseError("adjacency data too short", base + body.size());
  if (have > need) throw ParseError("unexpected trailing byte", base + pos + need);

  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = body[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (need > 0 && pairs % 6 != 0) {
    const int last = body[pos + need - 1] - kBias;
    const int pad = 6 - static_cast<int>(pairs % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", base + pos + need - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
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

}  // namespace hamstar
