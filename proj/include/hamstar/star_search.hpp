#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "hamstar/graph.hpp"

namespace hamstar {

// Certificate of an induced K_{1,t}: every leaf is adjacent to the center
// and the leaves are pairwise nonadjacent. Leaves are kept sorted.
struct StarWitness {
  Vertex center = 0;
  std::vector<Vertex> leaves;

  friend bool operator==(const StarWitness&, const StarWitness&) = default;
};

std::ostream& operator<<(std::ostream& os, const StarWitness& w);

// Scans centers in index order and, inside each neighbourhood, searches
// exactly for an independent set of size t. Returns the first hit: lowest
// center, then lexicographically least leaf set.
std::optional<StarWitness> find_induced_star(const Graph& g, int t);

// |leaves| == t, leaves distinct and inside N(center), leaves independent.
// Throws ArgumentError on out-of-range indices.
bool verify_star_witness(const Graph& g, const StarWitness& w, int t);

// Lexicographically least independent set of size `size` inside `pool`.
std::optional<VertexMask> find_independent_subset(const Graph& g, VertexMask pool, int size);

}  // namespace hamstar
