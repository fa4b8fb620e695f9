#include "hamstar/enumerate.hpp"

#include <set>
#include <string>

#include "hamstar/canon.hpp"
#include "hamstar/errors.hpp"

namespace hamstar {

Graph GraphEnumerator::expand(const Compact& c) {
  std::array<VertexMask, kMaxVertices> rows{};
  for (int i = 0; i < c.n; ++i) rows[i] = c.rows[i];
  return Graph::from_rows(c.n, rows);
}

GraphEnumerator::Compact GraphEnumerator::compress(const Graph& g) {
  Compact c;
  c.n = static_cast<std::uint8_t>(g.order());
  for (Vertex v = 0; v < g.order(); ++v) c.rows[v] = static_cast<std::uint16_t>(g.neighbors(v));
  return c;
}

void GraphEnumerator::ensure_level(int n) {
  if (levels_.empty()) levels_.push_back({Compact{}});
  std::vector<Graph> children;
  for (int k = static_cast<int>(levels_.size()); k <= n; ++k) {
    std::vector<Compact> level;
    for (std::size_t u = 0; u < levels_[k - 1].size(); ++u) {
      children.clear();
      unit_children(k, u, children);
      for (const Graph& g : children) level.push_back(compress(g));
    }
    levels_.push_back(std::move(level));
  }
}

std::size_t GraphEnumerator::unit_count(int n) {
  if (n < 1 || n > kEnumerationCap) {
    throw CapacityError("enumeration supports orders 1.." + std::to_string(kEnumerationCap) +
                        ", got " + std::to_string(n));
  }
  ensure_level(n - 1);
  return levels_[n - 1].size();
}

void GraphEnumerator::unit_children(int n, std::size_t unit, std::vector<Graph>& out) const {
  const Compact& parent = levels_.at(n - 1).at(unit);
  const int m = n - 1;
  const Vertex x = m;
  const bool connected_only = cls_ == GraphClass::Connected;
  const bool trivial_parent_group = m <= 1 || canonical_form(expand(parent)).generators.empty();

  std::set<std::array<std::uint16_t, 16>> seen;
  std::array<VertexMask, kMaxVertices> rows{};
  std::array<int, kMaxVertices> deg{};
  std::array<int, kMaxVertices> cut{};  // -1 unknown, 0 non-cut, 1 cut

  const VertexMask all = low_bits(n);
  for (VertexMask s = 0; s < (VertexMask{1} << m); ++s) {
    if (connected_only && m > 0 && s == 0) continue;
    for (Vertex y = 0; y < m; ++y) {
      rows[y] = parent.rows[y] | (((s >> y) & 1) ? bit(x) : 0);
      deg[y] = popcount(rows[y]);
      cut[y] = -1;
    }
    rows[x] = s;
    deg[x] = popcount(s);
    const Graph g = Graph::from_rows(n, rows);

    auto eligible = [&](Vertex y) {
      if (!connected_only) return true;
      if (cut[y] < 0) cut[y] = is_connected_within(g, all & ~bit(y)) ? 0 : 1;
      return cut[y] == 0;
    };
    auto neighbour_degree_sum = [&](Vertex y) {
      int sum = 0;
      for_each_vertex(rows[y], [&](Vertex w) { sum += deg[w]; });
      return sum;
    };

    bool rejected = false;
    for (Vertex y = 0; y < m && !rejected; ++y) {
      rejected = deg[y] < deg[x] && eligible(y);
    }
    if (rejected) continue;
    const int own_sum = neighbour_degree_sum(x);
    VertexMask ties = bit(x);
    for (Vertex y = 0; y < m && !rejected; ++y) {
      if (deg[y] != deg[x] || !eligible(y)) continue;
      const int sum = neighbour_degree_sum(y);
      if (sum > own_sum) rejected = true;
      if (sum == own_sum) ties |= bit(y);
    }
    if (rejected) continue;

    if (ties == bit(x) && trivial_parent_group) {
      out.push_back(g);
      continue;
    }
    const CanonicalForm cf = canonical_form(g);
    if (ties != bit(x)) {
      Vertex chosen = x;
      for (int i = 0; i < n; ++i) {
        if (ties & bit(cf.labelling[i])) {
          chosen = cf.labelling[i];
          break;
        }
      }
      if (!cf.same_orbit(x, chosen)) continue;
    }
    if (!trivial_parent_group) {
      std::array<std::uint16_t, 16> key{};
      for (int i = 0; i < n; ++i) key[i] = static_cast<std::uint16_t>(cf.rows[i]);
      if (!seen.insert(key).second) continue;
    }
    out.push_back(g);
  }
}

void GraphEnumerator::for_each(int n, const std::function<void(const Graph&)>& visit) {
  const std::size_t units = unit_count(n);
  if (static_cast<int>(levels_.size()) > n) {
    for (const Compact& c : levels_[n]) visit(expand(c));
    return;
  }
  std::vector<Graph> children;
  for (std::size_t u = 0; u < units; ++u) {
    children.clear();
    unit_children(n, u, children);
    for (const Graph& g : children) visit(g);
  }
}

std::vector<Graph> GraphEnumerator::graphs(int n) {
  std::vector<Graph> out;
  for_each(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t GraphEnumerator::count(int n) {
  unit_count(n);
  if (static_cast<int>(levels_.size()) > n) return levels_[n].size();
  std::uint64_t total = 0;
  for_each(n, [&](const Graph&) { ++total; });
  return total;
}

}  // namespace hamstar
