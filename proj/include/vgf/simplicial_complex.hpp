#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vgf/errors.hpp"

namespace vgf {

/* A simplex is its ascending vertex list. */
using Simplex = std::vector<int>;

std::string simplex_key(const Simplex& s);  // "0,2" style

/* Canonical order: by dimension, then lexicographic.  Every face of a simplex
   sorts strictly before it, so chains listed by index ascend by inclusion. */
bool simplex_less(const Simplex& a, const Simplex& b);

/* Finite abstract simplicial complex, closed under taking faces.  Simplices
   are stored in canonical order; their positions serve as stable ids. */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  int simplex_count() const { return static_cast<int>(simplices_.size()); }

  bool contains(const Simplex& s) const { return index_.count(s) > 0; }
  int index_of(const Simplex& s) const;
  const Simplex& simplex_at(int id) const { return simplices_.at(static_cast<std::size_t>(id)); }

  int dimension() const;  // -1 when empty
  std::vector<Simplex> simplices_of_dim(int p) const;
  std::vector<int> vertices() const;  // vertex ids present as 0-simplices, ascending
  bool has_vertex(int v) const;
  bool has_edge(int a, int b) const;
  std::vector<int> neighbors(int v) const;  // ascending
  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
  }

 private:
  friend SimplicialComplex close_under_faces(const std::vector<Simplex>&, int);

  int vertex_count_ = 0;
  std::vector<Simplex> simplices_;
  std::map<Simplex, int> index_;
};

/* Builds the complex generated by the given facets.  Facet vertex lists are
   treated as sets (sorted, deduplicated).  Throws EmptyFacetError /
   VertexOutOfRangeError. */
SimplicialComplex close_under_faces(const std::vector<Simplex>& facets, int vertex_count);

/* Subcomplex of simplices of dimension <= p. */
SimplicialComplex skeleton(const SimplicialComplex& k, int p);

/* Barycentric subdivision: one vertex per simplex of k (named by its canonical
   id), one simplex per strict chain in the face order. */
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/* Partition of the vertices of k, components sorted by smallest member. */
std::vector<std::vector<int>> connected_components(const SimplicialComplex& k);

/* Breadth-first spanning tree of one component; neighbor ties break ascending,
   so the tree is canonical for (k, root). */
class MaximalTree {
 public:
  MaximalTree(int root, std::set<std::pair<int, int>> edges, std::map<int, int> parent);

  int root() const { return root_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }  // (min,max) pairs
  bool contains_edge(int a, int b) const;
  bool in_component(int v) const { return v == root_ || parent_.count(v) > 0; }
  const std::map<int, int>& parent() const { return parent_; }

 private:
  int root_;
  std::set<std::pair<int, int>> edges_;
  std::map<int, int> parent_;
};

MaximalTree maximal_tree(const SimplicialComplex& k, int root);

}  // namespace vgf
