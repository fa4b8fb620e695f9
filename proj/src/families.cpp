#include "hamstar/families.hpp"

#include <string>

#include "hamstar/errors.hpp"

namespace hamstar {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph star_graph(int leaves) { return join(empty_graph(1), empty_graph(leaves)); }

namespace {

Graph combine(const Graph& g, const Graph& h, bool connect_parts) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) {
    throw CapacityError("combined order " + std::to_string(n) + " exceeds 64");
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const int shift = g.order();
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  if (connect_parts) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex w = 0; w < h.order(); ++w) out.add_edge(u, w + shift);
  }
  return out;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph sharpness_family(int t) {
  if (t < 5) throw ArgumentError("sharpness family needs t >= 5, got " + std::to_string(t));
  return complete_bipartite(t - 3, t - 1);
}

Graph equality_family(const Graph& h, int t) {
  if (t < 5) throw ArgumentError("equality family needs t >= 5, got " + std::to_string(t));
  if (h.order() != t - 3) {
    throw ArgumentError("equality family needs |V(H)| = t-3 = " + std::to_string(t - 3) +
                        ", got " + std::to_string(h.order()));
  }
  return join(h, empty_graph(t - 1));
}

}  // namespace hamstar
