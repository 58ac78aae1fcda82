#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vgf/linalg.hpp"
#include "vgf/simplicial_complex.hpp"

namespace vgf {

/* Walk through the 1-skeleton: vertex list with every consecutive pair an
   edge of the complex.  A single vertex is the constant path. */
using EdgePath = std::vector<int>;

bool is_edge_path(const SimplicialComplex& k, const EdgePath& path);
void validate_edge_path(const SimplicialComplex& k, const EdgePath& path);  // InvalidPathError

/* Joins paths sharing an endpoint: end of f must be start of g. */
EdgePath concatenate(const EdgePath& f, const EdgePath& g);

/* Applies backtrack removal (a,b,a) -> (a) and triangle contraction
   (a,b,c) -> (a,c) across a 2-simplex until no move applies, scanning left to
   right and restarting after each move.  Both moves preserve every functor
   evaluation along the path. */
EdgePath reduce_path(const SimplicialComplex& k, EdgePath path);

/* Functor on the edge-path groupoid of a complex, presented by its restriction
   to oriented edges: a dimension per vertex and an invertible matrix per
   unoriented edge {a<b}, read as the action of the step (a,b) and mapping
   G(b) -> G(a); the reverse step acts by the inverse.  Path evaluation is
   well defined on homotopy classes exactly when every 2-simplex satisfies the
   triangle relation G(a,b) * G(b,c) = G(a,c), diagnosed by validate(). */
class GroupoidFunctor {
 public:
  GroupoidFunctor(SimplicialComplex complex, std::map<int, Index> dims_by_vertex,
                  std::map<std::pair<int, int>, Mat> edge_matrices);

  const SimplicialComplex& complex() const { return complex_; }
  Index dim_of(int v) const;
  const std::map<int, Index>& dims() const { return dims_; }
  const std::map<std::pair<int, int>, Mat>& stored_edges() const { return edges_; }

  /* Action of the step a -> b, either orientation. */
  Mat edge_matrix(int a, int b) const;

  /* Composite action along a path, mapping G(back) -> G(front);
     steps multiply left to right, so G(f g) = G(f) G(g). */
  Mat path_matrix(const EdgePath& path) const;

  struct Check {
    std::vector<std::pair<int, int>> non_invertible;
    std::vector<Simplex> failed_triangles;
    bool passed() const { return non_invertible.empty() && failed_triangles.empty(); }
    std::string summary() const;
  };
  Check validate() const;

  friend bool operator==(const GroupoidFunctor& a, const GroupoidFunctor& b);

 private:
  SimplicialComplex complex_;
  std::map<int, Index> dims_;
  std::map<std::pair<int, int>, Mat> edges_;
};

/* Word in the generators of a presentation: letters are +-(index+1). */
using Word = std::vector<int>;

/* Presentation of the fundamental group at a basepoint: generators are the
   non-tree edges (ascending orientation), one relation per 2-simplex from its
   boundary loop, recorded as the word of its non-tree steps. */
class Pi1Presentation {
 public:
  Pi1Presentation(SimplicialComplex complex, int basepoint, MaximalTree tree,
                  std::vector<std::pair<int, int>> generators, std::vector<Word> relations,
                  std::vector<Simplex> relation_triangles);

  const SimplicialComplex& complex() const { return complex_; }
  int basepoint() const { return basepoint_; }
  const MaximalTree& tree() const { return tree_; }
  const std::vector<std::pair<int, int>>& generators() const { return generators_; }
  int generator_index(int a, int b) const;  // requires a < b and {a,b} a generator
  const std::vector<Word>& relations() const { return relations_; }
  const std::vector<Simplex>& relation_triangles() const { return relation_triangles_; }

  /* The loop at the basepoint representing a generator: tree path to the edge,
     the edge, tree path back. */
  EdgePath generator_loop(int index) const;

 private:
  SimplicialComplex complex_;
  int basepoint_;
  MaximalTree tree_;
  std::vector<std::pair<int, int>> generators_;
  std::map<std::pair<int, int>, int> generator_index_;
  std::vector<Word> relations_;
  std::vector<Simplex> relation_triangles_;
};

Pi1Presentation pi1_presentation(const SimplicialComplex& k, int basepoint);

/* Unique reduced path between two vertices of the tree. */
EdgePath tree_path(const MaximalTree& tree, int from, int to);

/* Reads off the generator word of a loop at the basepoint: tree steps vanish,
   non-tree steps contribute a letter signed by orientation. */
Word loop_to_generator_word(const Pi1Presentation& p, const EdgePath& loop);

/* Matrix representation of the presented group: one invertible matrix per
   generator.  Valid when every relation word evaluates to the identity. */
struct Representation {
  Index dim = 0;
  int basepoint = 0;
  std::vector<Mat> generator_matrices;

  friend bool operator==(const Representation& a, const Representation& b) {
    if (a.dim != b.dim || a.basepoint != b.basepoint ||
        a.generator_matrices.size() != b.generator_matrices.size())
      return false;
    for (std::size_t i = 0; i < a.generator_matrices.size(); ++i)
      if (!exact_equal(a.generator_matrices[i], b.generator_matrices[i])) return false;
    return true;
  }
};

struct RepCheck {
  std::vector<std::string> shape_errors;
  std::vector<int> non_invertible_generators;
  std::vector<int> failed_relations;
  bool passed() const {
    return shape_errors.empty() && non_invertible_generators.empty() && failed_relations.empty();
  }
  std::string summary() const;
};

RepCheck rep_validate(const Pi1Presentation& p, const Representation& rho);

/* Product of the word's letters in order; inverse letters invert. */
Mat word_matrix(const Representation& rho, const Word& word);

/* Evaluation of a loop at the basepoint through its generator word. */
Mat rep_evaluate(const Pi1Presentation& p, const Representation& rho, const EdgePath& loop);

}  // namespace vgf
