#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hamstar/graph.hpp"

namespace hamstar {

enum class GraphClass { All, Connected };

inline constexpr int kEnumerationCap = 10;

// Isomorph-free generation by canonical vertex augmentation. A graph on n
// vertices is produced from exactly one parent: the graph obtained by
// deleting its canonical vertex, a vertex of minimum degree (among non-cut
// vertices for GraphClass::Connected) maximising the degree sum of its
// neighbours, ties broken by canonical labelling.
//
// Order-n output is grouped by parent (parents in their own generation
// order), and within one parent by the neighbourhood of the new vertex read
// as a bit mask. Levels below the requested order are cached.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(GraphClass cls) : cls_(cls) {}

  GraphClass graph_class() const { return cls_; }

  // Number of generation units (parents) for order n. Builds and caches
  // every level below n.
  std::size_t unit_count(int n);

  // Appends the children of unit `unit` at order n to `out`. Safe to call
  // concurrently once unit_count(n) has returned.
  void unit_children(int n, std::size_t unit, std::vector<Graph>& out) const;

  // Serial traversal of every order-n graph.
  void for_each(int n, const std::function<void(const Graph&)>& visit);

  std::vector<Graph> graphs(int n);
  std::uint64_t count(int n);

 private:
  struct Compact {
    std::uint8_t n = 0;
    std::array<std::uint16_t, 16> rows{};
  };

  static Graph expand(const Compact& c);
  static Compact compress(const Graph& g);

  void ensure_level(int n);

  GraphClass cls_;
  // levels_[k] holds every order-k graph once ensure_level(k) ran.
  std::vector<std::vector<Compact>> levels_;
};

}  // namespace hamstar
