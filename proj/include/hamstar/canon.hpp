#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hamstar/graph.hpp"

namespace hamstar {

using Permutation = std::array<std::uint8_t, kMaxVertices>;

// Result of canonical labelling. Isomorphic inputs give identical `rows`.
struct CanonicalForm {
  int n = 0;
  // labelling[i] is the input vertex placed at canonical position i.
  Permutation labelling{};
  // Adjacency rows of the relabelled graph, rows[i] for position i.
  std::array<VertexMask, kMaxVertices> rows{};
  // orbit[v] is the smallest vertex in the automorphism orbit of v.
  Permutation orbit{};
  // Generators of the automorphism group found during the search.
  std::vector<Permutation> generators;

  Graph graph() const;
  bool same_orbit(Vertex a, Vertex b) const { return orbit[a] == orbit[b]; }
};

// Individualisation-refinement search with automorphism pruning.
// `colours` optionally partitions the vertices into ordered classes that
// any isomorphism must respect.
CanonicalForm canonical_form(const Graph& g, const std::vector<VertexMask>& colours = {});

Graph canonical_graph(const Graph& g);

}  // namespace hamstar
