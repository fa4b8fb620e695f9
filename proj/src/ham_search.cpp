#include "hamstar/ham_search.hpp"

#include <cstdint>
#include <ostream>
#include <string>

#include "hamstar/errors.hpp"

namespace hamstar {

VertexMask VertexSequence::mask() const {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

std::ostream& operator<<(std::ostream& os, const VertexSequence& s) {
  os << (s.kind == VertexSequence::Kind::Path ? "path[" : "cycle[");
  for (std::size_t i = 0; i < s.vertices.size(); ++i) os << (i ? " " : "") << s.vertices[i];
  return os << ']';
}

bool is_valid_sequence(const Graph& g, const VertexSequence& s) {
  const int n = g.order();
  VertexMask seen = 0;
  for (Vertex v : s.vertices) {
    if (v < 0 || v >= n || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 1; i < s.vertices.size(); ++i) {
    if (!g.adjacent(s.vertices[i - 1], s.vertices[i])) return false;
  }
  if (s.kind == VertexSequence::Kind::Cycle) {
    if (s.vertices.size() < 3) return false;
    if (!g.adjacent(s.vertices.back(), s.vertices.front())) return false;
  }
  return !s.vertices.empty();
}

namespace {

void check_searchable(const Graph& g, SearchMethod method) {
  const int n = g.order();
  if (n == 0) throw ArgumentError("path/cycle search on the empty graph");
  if (n > kSearchCap) {
    throw CapacityError("exact search capped at " + std::to_string(kSearchCap) +
                        " vertices, got " + std::to_string(n));
  }
  if (method == SearchMethod::SubsetDp && n > kDpLimit) {
    throw CapacityError("subset DP capped at " + std::to_string(kDpLimit) + " vertices");
  }
}

bool use_dp(const Graph& g, SearchMethod method) {
  return method == SearchMethod::SubsetDp ||
         (method == SearchMethod::Auto && g.order() <= kDpLimit);
}

// Subset DP over a universe of `width` compressed vertices. starts[R] holds
// the members w of R such that G[R] has a Hamiltonian path beginning at w
// and ending at a vertex of `ends`.
struct SubsetTable {
  std::vector<std::uint32_t> starts;
  std::vector<std::uint32_t> adj;

  SubsetTable(std::vector<std::uint32_t> adjacency, std::uint32_t ends)
      : adj(std::move(adjacency)) {
    const int width = static_cast<int>(adj.size());
    const std::uint32_t full = width == 32 ? ~0u : (1u << width) - 1;
    starts.assign(std::size_t{full} + 1, 0);
    for (std::uint32_t r = 1; r <= full && r != 0; ++r) {
      if ((r & (r - 1)) == 0) {
        starts[r] = r & ends;
        continue;
      }
      std::uint32_t m = 0;
      for (std::uint32_t rest = r; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (adj[w] & starts[r ^ (1u << w)]) m |= 1u << w;
      }
      starts[r] = m;
    }
  }

  // Lexicographically least sequence covering one of the sets in `cands`,
  // whose first vertex lies in `first_allowed`.
  std::vector<int> least_sequence(std::vector<std::uint32_t> cands,
                                  std::uint32_t first_allowed) const {
    std::vector<int> seq;
    std::uint32_t allowed = first_allowed;
    while (!cands.empty()) {
      std::uint32_t options = 0;
      for (std::uint32_t r : cands) options |= starts[r];
      options &= allowed;
      const int w = std::countr_zero(options);
      seq.push_back(w);
      std::vector<std::uint32_t> next;
      for (std::uint32_t r : cands) {
        if ((starts[r] >> w) & 1) {
          const std::uint32_t rest = r ^ (1u << w);
          if (rest) next.push_back(rest);
        }
      }
      cands = std::move(next);
      allowed = adj[w];
    }
    return seq;
  }
};

SearchResult path_dp(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.neighbors(v));
  const std::uint32_t all = static_cast<std::uint32_t>(low_bits(n));
  SubsetTable table(std::move(adj), all);

  int best = 0;
  if (table.starts[all]) {
    best = n;
  } else {
    for (std::uint32_t r = 1; r <= all; ++r) {
      if (table.starts[r]) best = std::max(best, std::popcount(r));
    }
  }
  std::vector<std::uint32_t> cands;
  for (std::uint32_t r = 1; r <= all; ++r) {
    if (std::popcount(r) == best && table.starts[r]) cands.push_back(r);
  }
  VertexSequence witness{table.least_sequence(std::move(cands), all), VertexSequence::Kind::Path};
  return {best, std::move(witness)};
}

// Longest cycle whose smallest vertex is s, over the vertices above s.
// Returns 0 if none.
SearchResult cycle_dp_from(const Graph& g, Vertex s) {
  const int n = g.order();
  const int width = n - 1 - s;
  if (width < 2) return {};
  std::vector<std::uint32_t> adj(width);
  for (int i = 0; i < width; ++i) {
    adj[i] = static_cast<std::uint32_t>(g.neighbors(s + 1 + i) >> (s + 1));
  }
  const std::uint32_t ns = static_cast<std::uint32_t>(g.neighbors(s) >> (s + 1));
  if (std::popcount(ns) < 2) return {};
  SubsetTable table(std::move(adj), ns);

  const std::uint32_t full = (1u << width) - 1;
  int best_rest = 0;
  for (std::uint32_t r = 1; r <= full; ++r) {
    const int size = std::popcount(r);
    if (size >= 2 && size > best_rest && (table.starts[r] & ns)) best_rest = size;
  }
  if (best_rest == 0) return {};
  std::vector<std::uint32_t> cands;
  for (std::uint32_t r = 1; r <= full; ++r) {
    if (std::popcount(r) == best_rest && (table.starts[r] & ns)) cands.push_back(r);
  }
  VertexSequence witness{{s}, VertexSequence::Kind::Cycle};
  for (int w : table.least_sequence(std::move(cands), ns)) witness.vertices.push_back(w + s + 1);
  return {best_rest + 1, std::move(witness)};
}

// Depth-first search in increasing vertex order; only strict improvements
// replace the incumbent, so the first optimum seen (the lexicographically
// least) is the one kept.
class PathBranchAndBound {
 public:
  PathBranchAndBound(const Graph& g, bool cycles) : g_(g), cycles_(cycles) {}

  SearchResult run() {
    const int n = g_.order();
    for (Vertex s = 0; s < n && !done_; ++s) {
      if (cycles_ && best_ >= n - s) break;
      root_ = s;
      within_ = cycles_ ? g_.vertices() & ~low_bits(s + 1) : g_.vertices();
      current_ = {s};
      extend(bit(s));
    }
    if (best_ == 0) return {};
    return {best_, VertexSequence{best_seq_, cycles_ ? VertexSequence::Kind::Cycle
                                                     : VertexSequence::Kind::Path}};
  }

 private:
  void extend(VertexMask used) {
    const Vertex last = current_.back();
    const int len = static_cast<int>(current_.size());
    const bool closes = !cycles_ || (len >= 3 && g_.adjacent(last, root_));
    if (closes && len > best_) {
      best_ = len;
      best_seq_ = current_;
      if (best_ == (cycles_ ? g_.order() - root_ : g_.order())) {
        done_ = true;
        return;
      }
    }
    const VertexMask free = within_ & ~used;
    const int reach = popcount(reachable(g_, last, free | bit(last))) - 1;
    if (len + reach <= best_) return;
    for_each_vertex(g_.neighbors(last) & free, [&](Vertex w) {
      if (done_) return;
      current_.push_back(w);
      extend(used | bit(w));
      current_.pop_back();
    });
  }

  const Graph& g_;
  bool cycles_;
  Vertex root_ = 0;
  VertexMask within_ = 0;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_seq_;
  int best_ = 0;
  bool done_ = false;
};

}  // namespace

SearchResult longest_path(const Graph& g, SearchMethod method) {
  check_searchable(g, method);
  if (use_dp(g, method)) return path_dp(g);
  return PathBranchAndBound(g, false).run();
}

SearchResult longest_cycle(const Graph& g, SearchMethod method) {
  check_searchable(g, method);
  if (!use_dp(g, method)) return PathBranchAndBound(g, true).run();
  SearchResult best;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (best.length >= g.order() - s) break;
    SearchResult r = cycle_dp_from(g, s);
    if (r.length > best.length) best = std::move(r);
  }
  return best;
}

bool has_hamiltonian_path(const Graph& g) { return longest_path(g).length == g.order(); }

bool has_hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) throw ArgumentError("Hamiltonian cycle needs n >= 3");
  check_searchable(g, SearchMethod::Auto);
  if (g.order() <= kDpLimit) return cycle_dp_from(g, 0).length == g.order();
  return longest_cycle(g).length == g.order();
}

}  // namespace hamstar
