#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "hamstar/graph.hpp"

namespace hamstar {

// An ordered list of distinct vertices. For a Cycle the last vertex is also
// adjacent to the first and the list has at least three entries. Cycles
// found by the search always start at their smallest vertex.
struct VertexSequence {
  enum class Kind { Path, Cycle };

  std::vector<Vertex> vertices;
  Kind kind = Kind::Path;

  int size() const { return static_cast<int>(vertices.size()); }
  VertexMask mask() const;

  friend bool operator==(const VertexSequence&, const VertexSequence&) = default;
};

std::ostream& operator<<(std::ostream& os, const VertexSequence& s);

// Edge-by-edge validation against the host graph.
bool is_valid_sequence(const Graph& g, const VertexSequence& s);

struct SearchResult {
  int length = 0;  // vertex count, not edge count
  std::optional<VertexSequence> witness;
};

enum class SearchMethod {
  Auto,            // subset DP up to kDpLimit vertices, branch and bound above
  SubsetDp,
  BranchAndBound,
};

inline constexpr int kDpLimit = 20;
inline constexpr int kSearchCap = 24;

// p(G) with the lexicographically least longest path as witness.
SearchResult longest_path(const Graph& g, SearchMethod method = SearchMethod::Auto);

// c(G) with the lexicographically least longest cycle (smallest vertex
// first); length 0 and no witness when g is acyclic.
SearchResult longest_cycle(const Graph& g, SearchMethod method = SearchMethod::Auto);

bool has_hamiltonian_path(const Graph& g);
bool has_hamiltonian_cycle(const Graph& g);

}  // namespace hamstar
