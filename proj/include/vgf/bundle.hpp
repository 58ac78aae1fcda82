#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vgf/functor.hpp"
#include "vgf/groupoid.hpp"

namespace vgf {

/* A very good vector bundle: a covariant very good functor on a star cover.
   Construction revalidates, so a held bundle always passes check_very_good. */
class VeryGoodBundle {
 public:
  explicit VeryGoodBundle(VeryGoodFunctor functor);

  const VeryGoodFunctor& functor() const { return functor_; }
  const CoverPoset& poset() const { return functor_.poset(); }
  Index dim_of(const Simplex& s) const { return functor_.dim_of(s); }

  friend bool operator==(const VeryGoodBundle& a, const VeryGoodBundle& b) {
    return a.functor_ == b.functor_;
  }

 private:
  VeryGoodFunctor functor_;
};

/* Morphism of bundles: a natural transformation of the underlying functors.
   Components may have any rank; naturality is validated. */
class BundleMorphism {
 public:
  BundleMorphism(const VeryGoodBundle& source, const VeryGoodBundle& target,
                 std::vector<Mat> components_by_object);

  const NaturalTransformation& transformation() const { return eta_; }
  const VeryGoodFunctor& source() const { return eta_.source(); }
  const VeryGoodFunctor& target() const { return eta_.target(); }
  const Mat& at_id(int object_id) const { return eta_.at_id(object_id); }

 private:
  NaturalTransformation eta_;
};

VeryGoodBundle zero_bundle(const CoverPoset& poset);

struct BiproductResult {
  VeryGoodBundle bundle;
  BundleMorphism inject_first, inject_second;    // factors into the sum
  BundleMorphism project_first, project_second;  // sum onto the factors
};
BiproductResult biproduct(const VeryGoodBundle& a, const VeryGoodBundle& b);

/* Objectwise kernel with the induced edge maps; the inclusion is a canonical
   mono into the source.  Ranks of a natural map are constant on connected
   components, so the kernel is again very good. */
struct KernelResult {
  VeryGoodBundle bundle;
  BundleMorphism inclusion;
};
KernelResult kernel_bundle(const BundleMorphism& m);

/* Objectwise cokernel with the induced edge maps; the projection is a
   canonical epi out of the target. */
struct CokernelResult {
  VeryGoodBundle bundle;
  BundleMorphism projection;
};
CokernelResult cokernel_bundle(const BundleMorphism& m);

struct RankProfile {
  std::vector<Index> rank_by_object;
  bool constant_per_component = true;
  std::string summary() const;
};
RankProfile rank_profile(const BundleMorphism& m);

/* Mono = objectwise injective, epi = objectwise surjective; when one holds,
   also verifies the abelian-category comparison (mono is the kernel of its
   cokernel, epi is the cokernel of its kernel) via an explicit natural
   isomorphism. */
struct MonoEpiReport {
  bool mono = false;
  bool epi = false;
  bool mono_comparison_iso = false;  // meaningful when mono
  bool epi_comparison_iso = false;   // meaningful when epi
};
MonoEpiReport mono_epi_check(const BundleMorphism& m);

/* Holonomy of the bundle along an edge path, as a map from the fiber at the
   last vertex to the fiber at the first: each step (a, b) contributes
   F(a into edge)^-1 * F(b into edge), multiplied in path order. */
Mat bundle_monodromy(const VeryGoodBundle& f, const EdgePath& path);

/* Classification of rank-one bundles on a connected complex: isomorphic if
   and only if the monodromy scalars agree on every fundamental-group
   generator.  On success, components is an explicit natural isomorphism. */
struct RankOneIso {
  bool isomorphic = false;
  std::vector<std::pair<Mat, Mat>> generator_monodromies;
  std::vector<Mat> components;  // filled when isomorphic
};
RankOneIso iso_check_rank_one(const VeryGoodBundle& a, const VeryGoodBundle& b);

/* Line bundle on the 3-vertex circle twisted by one scale on the Hasse edge
   {0} < {0,2}; monodromy around (0,1,2,0) is exactly the scale, so distinct
   scales give non-isomorphic bundles. */
VeryGoodBundle mobius_fixture(const Rational& scale);

}  // namespace vgf
