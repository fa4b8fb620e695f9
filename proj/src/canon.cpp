#include "hamstar/canon.hpp"

#include <algorithm>
#include <numeric>

namespace hamstar {

Graph CanonicalForm::graph() const {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for_each_vertex(rows[i] & ~low_bits(i + 1), [&](Vertex j) { g.add_edge(i, j); });
  }
  return g;
}

namespace {

struct Partition {
  std::array<VertexMask, kMaxVertices> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run(const std::vector<VertexMask>& colours) {
    Partition root;
    if (colours.empty()) {
      if (n_ > 0) root.cells[root.count++] = g_.vertices();
    } else {
      VertexMask covered = 0;
      for (VertexMask c : colours) {
        c &= g_.vertices() & ~covered;
        if (c) root.cells[root.count++] = c;
        covered |= c;
      }
      if (VertexMask rest = g_.vertices() & ~covered) root.cells[root.count++] = rest;
    }
    std::vector<VertexMask> work(root.cells.begin(), root.cells.begin() + root.count);
    refine(root, work);
    search(root, 0);

    CanonicalForm out;
    out.n = n_;
    out.labelling = best_lab_;
    out.rows = best_rows_;
    out.generators = std::move(generators_);
    Permutation parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    for (const Permutation& p : out.generators) unite_all(parent, p);
    for (Vertex v = 0; v < n_; ++v) out.orbit[v] = find(parent, v);
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  static std::uint8_t find(Permutation& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return static_cast<std::uint8_t>(v);
  }

  void unite_all(Permutation& parent, const Permutation& p) const {
    for (Vertex v = 0; v < n_; ++v) {
      const int a = find(parent, v);
      const int b = find(parent, p[v]);
      if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
  }

  // Splits cells until every cell has a uniform number of neighbours in
  // every splitter. Processing order depends only on cell positions and
  // neighbour counts, so the result commutes with relabelling.
  void refine(Partition& p, std::vector<VertexMask>& work) const {
    std::array<VertexMask, kMaxVertices + 1> by_count{};
    for (std::size_t w = 0; w < work.size() && p.count < n_; ++w) {
      const VertexMask splitter = work[w];
      for (int i = 0; i < p.count; ++i) {
        const VertexMask cell = p.cells[i];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = kMaxVertices;
        int hi = -1;
        for_each_vertex(cell, [&](Vertex v) {
          const int c = popcount(g_.neighbors(v) & splitter);
          by_count[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) {
          by_count[lo] = 0;
          continue;
        }
        int pieces = 0;
        std::array<VertexMask, kMaxVertices + 1> frag{};
        for (int k = lo; k <= hi; ++k) {
          if (by_count[k]) frag[pieces++] = by_count[k];
          by_count[k] = 0;
        }
        std::copy_backward(p.cells.begin() + i + 1, p.cells.begin() + p.count,
                           p.cells.begin() + p.count + pieces - 1);
        for (int k = 0; k < pieces; ++k) {
          p.cells[i + k] = frag[k];
          work.push_back(frag[k]);
        }
        p.count += pieces - 1;
        i += pieces - 1;
      }
    }
  }

  void leaf_of(const Partition& p, Permutation& lab, std::array<VertexMask, kMaxVertices>& rows) const {
    Permutation pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(lowest(p.cells[i]));
      pos[lab[i]] = static_cast<std::uint8_t>(i);
    }
    for (int i = 0; i < n_; ++i) {
      VertexMask r = 0;
      for_each_vertex(g_.neighbors(lab[i]), [&](Vertex w) { r |= bit(pos[w]); });
      rows[i] = r;
    }
  }

  static int compare_rows(const std::array<VertexMask, kMaxVertices>& a,
                          const std::array<VertexMask, kMaxVertices>& b, int n) {
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const Permutation& from_lab, const Permutation& to_lab) {
    Permutation gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from_lab[i]] = to_lab[i];
      identity = identity && from_lab[i] == to_lab[i];
    }
    if (!identity) generators_.push_back(gamma);
  }

  int at_leaf(const Partition& p) {
    Permutation lab{};
    std::array<VertexMask, kMaxVertices> rows{};
    leaf_of(p, lab, rows);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (compare_rows(rows, first_rows_, n_) == 0) {
      record_automorphism(lab, first_lab_);
      return common_prefix(path_, first_path_);
    }
    const int cmp = compare_rows(rows, best_rows_, n_);
    if (cmp == 0) {
      record_automorphism(lab, best_lab_);
      return common_prefix(path_, best_path_);
    }
    if (cmp > 0) {
      best_lab_ = lab;
      best_rows_ = rows;
      best_path_ = path_;
    }
    return kNoJump;
  }

  // Orbit representatives under the generators that fix the current path
  // pointwise.
  Permutation stabiliser_orbits() const {
    Permutation parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    for (const Permutation& gamma : generators_) {
      bool fixes = true;
      for (Vertex v : path_) fixes = fixes && gamma[v] == v;
      if (fixes) unite_all(parent, gamma);
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  int search(const Partition& p, int depth) {
    if (p.discrete(n_)) return at_leaf(p);
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const VertexMask cell = p.cells[target];

    std::size_t seen_generators = generators_.size();
    Permutation orbits = stabiliser_orbits();
    VertexMask explored_orbits = 0;

    for (VertexMask rest = cell; rest; rest &= rest - 1) {
      const Vertex w = lowest(rest);
      if (generators_.size() != seen_generators) {
        seen_generators = generators_.size();
        orbits = stabiliser_orbits();
        VertexMask relabelled = 0;
        for_each_vertex(explored_orbits, [&](Vertex v) { relabelled |= bit(orbits[v]); });
        explored_orbits = relabelled;
      }
      if (explored_orbits & bit(orbits[w])) continue;
      explored_orbits |= bit(orbits[w]);

      Partition child = p;
      std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                         child.cells.begin() + child.count + 1);
      child.cells[target] = bit(w);
      child.cells[target + 1] = cell & ~bit(w);
      ++child.count;
      std::vector<VertexMask> work{bit(w)};
      refine(child, work);

      path_.push_back(w);
      const int jump = search(child, depth + 1);
      path_.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> path_;
  bool have_first_ = false;
  std::vector<Vertex> first_path_, best_path_;
  Permutation first_lab_{}, best_lab_{};
  std::array<VertexMask, kMaxVertices> first_rows_{}, best_rows_{};
  std::vector<Permutation> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<VertexMask>& colours) {
  return Canonizer(g).run(colours);
}

Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

}  // namespace hamstar
