#pragma once

#include "hamstar/graph.hpp"

namespace hamstar {

Graph empty_graph(int n);  // the edgeless graph on n vertices
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);  // sides {0..a-1} and {a..a+b-1}
Graph star_graph(int leaves);            // hub is vertex 0

Graph disjoint_union(const Graph& g, const Graph& h);

// g ∨ h: disjoint union plus every edge between the two parts. Vertices of
// g keep their indices, vertices of h are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

// K_{t-3,t-1} on 2t-4 vertices. Meets the Ore-type bound with equality and
// has neither a Hamiltonian path nor an induced K_{1,t}. Requires t >= 5.
Graph sharpness_family(int t);

// h ∨ K̄_{t-1} for a graph h on t-3 vertices. Every member is an extremal
// graph of the same kind as sharpness_family(t).
Graph equality_family(const Graph& h, int t);

}  // namespace hamstar
