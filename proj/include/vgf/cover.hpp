#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vgf/simplicial_complex.hpp"

namespace vgf {

/* Poset of the open star cover of a complex, one open set per simplex.  The
   order is the face order: a smaller simplex names a smaller open set, and
   the cover is intersection-closed, with U_a meeting U_b exactly in the open
   set of the simplex a \cap b (empty when the vertex sets are disjoint).
   Hasse edges are the codimension-1 face inclusions. */
class CoverPoset {
 public:
  CoverPoset() = default;
  explicit CoverPoset(SimplicialComplex complex);

  const SimplicialComplex& complex() const { return complex_; }
  int object_count() const { return complex_.simplex_count(); }

  /* (face id, simplex id) pairs, ordered by simplex id then by removed vertex. */
  const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }

  bool leq(const Simplex& a, const Simplex& b) const;  // a is a face of b

  friend bool operator==(const CoverPoset& a, const CoverPoset& b) {
    return a.complex_ == b.complex_;
  }

 private:
  SimplicialComplex complex_;
  std::vector<std::pair<int, int>> hasse_;
};

CoverPoset cover_poset(const SimplicialComplex& k);

/* Intersection law of the star cover: nullopt encodes the empty set. */
std::optional<Simplex> cover_intersection(const CoverPoset& p, const Simplex& a,
                                          const Simplex& b);

/* Walk through the poset: consecutive objects must be comparable; each hop
   goes up or down the face order (or stays, an identity hop). */
struct Zigzag {
  std::vector<Simplex> objects;
};

/* The zigzag visiting vertex, edge, vertex, ... along an edge path. */
Zigzag zigzag_of_path(const std::vector<int>& path);

}  // namespace vgf
