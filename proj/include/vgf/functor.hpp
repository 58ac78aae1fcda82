#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vgf/cover.hpp"
#include "vgf/linalg.hpp"

namespace vgf {

enum class Variance { contravariant, covariant };

/* Functor from a star-cover poset to finite-dimensional rational vector
   spaces: a dimension per object and a matrix per Hasse edge.  Contravariant
   maps run F(simplex) -> F(face); covariant maps run the other way.  "Very
   good" additionally means every edge matrix is invertible and the two
   composites across each codimension-2 square agree; that is diagnosed by
   check_very_good, not enforced here, so broken functors can be represented
   and reported on. */
class VeryGoodFunctor {
 public:
  VeryGoodFunctor(CoverPoset poset, Variance variance, std::vector<Index> dims_by_object,
                  std::map<std::pair<int, int>, Mat> hasse_maps);

  const CoverPoset& poset() const { return poset_; }
  Variance variance() const { return variance_; }

  Index dim_of_id(int object_id) const { return dims_.at(static_cast<std::size_t>(object_id)); }
  Index dim_of(const Simplex& s) const { return dim_of_id(poset_.complex().index_of(s)); }
  const std::vector<Index>& dims() const { return dims_; }

  /* The stored matrix of the codimension-1 inclusion face < simplex. */
  const Mat& hasse_map_ids(int face_id, int simplex_id) const;
  const Mat& hasse_map(const Simplex& face, const Simplex& simplex) const;

  friend bool operator==(const VeryGoodFunctor& a, const VeryGoodFunctor& b);

 private:
  CoverPoset poset_;
  Variance variance_;
  std::vector<Index> dims_;
  std::map<std::pair<int, int>, Mat> maps_;
};

struct FunctorCheck {
  struct EdgeFailure {
    Simplex face, simplex;
  };
  struct SquareFailure {
    Simplex bottom, top;  // |top| = |bottom| + 2; the two routes disagree
    Simplex via_first, via_second;
  };
  std::vector<EdgeFailure> non_invertible;
  std::vector<SquareFailure> incoherent;

  bool passed() const { return non_invertible.empty() && incoherent.empty(); }
  std::string summary() const;
};

FunctorCheck check_very_good(const VeryGoodFunctor& f);

/* Matrix of an arbitrary inclusion face <= simplex, composed along the chain
   that inserts missing vertices in ascending order.  For a coherent functor
   every chain gives the same answer. */
Mat evaluate_inclusion(const VeryGoodFunctor& f, const Simplex& face, const Simplex& simplex);

/* Conjugates every edge map by invertible units: contravariant maps become
   A_face * M * A_simplex^-1, covariant ones A_simplex * M * A_face^-1.
   The units themselves form a natural isomorphism from f to the result. */
VeryGoodFunctor gauge_twist(const VeryGoodFunctor& f, const std::vector<Mat>& units_by_object);

/* Limit of the whole diagram: dimension and one projection per object,
   computed as the kernel of the stacked compatibility system. */
struct Limit {
  Index dim = 0;
  std::vector<Mat> projections;
};
Limit finite_limit(const VeryGoodFunctor& f);

/* Objectwise dual: transposed edge maps, flipped variance. */
VeryGoodFunctor dualize(const VeryGoodFunctor& f);

class NaturalTransformation {
 public:
  NaturalTransformation(VeryGoodFunctor source, VeryGoodFunctor target,
                        std::vector<Mat> components_by_object);

  const VeryGoodFunctor& source() const { return source_; }
  const VeryGoodFunctor& target() const { return target_; }
  const std::vector<Mat>& components() const { return components_; }
  const Mat& at_id(int object_id) const { return components_.at(static_cast<std::size_t>(object_id)); }
  const Mat& at(const Simplex& s) const;

 private:
  VeryGoodFunctor source_;
  VeryGoodFunctor target_;
  std::vector<Mat> components_;
};

struct NaturalityCheck {
  struct SquareFailure {
    Simplex face, simplex;
  };
  std::vector<SquareFailure> failures;
  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

NaturalityCheck check_naturality(const NaturalTransformation& eta);

/* Composite of f along a zigzag, read as a map F(last object) -> F(first
   object).  Each hop (a, b) contributes the functor's matrix for the
   inclusion between a and b, inverted when that matrix points from a to b
   rather than from b to a. */
Mat compose_zigzag(const VeryGoodFunctor& f, const Zigzag& z);

}  // namespace vgf
