#pragma once

#include <map>
#include <string>
#include <vector>

#include "vgf/functor.hpp"
#include "vgf/groupoid.hpp"

namespace vgf {

/* The four conversions between contravariant very good functors on a star
   cover, groupoid functors on the edge-path groupoid, and fundamental-group
   representations:

     psi:    cover functor   -> groupoid functor   (restrict to vertices/edges)
     phi:    groupoid functor-> cover functor      (canonical extension)
     theta:  groupoid functor-> representation     (evaluate at the basepoint)
     lambda: representation  -> groupoid functor   (spread along the tree)

   psi(phi(G)) == G and theta(lambda(rho)) == rho hold on the nose; the other
   composites are naturally isomorphic to the identity, witnessed by beta and
   by tree-path components. */

/* Restriction of a contravariant cover functor to vertices and edges: the
   matrix of the step (a, b) is F(vertex a into edge) * F(vertex b into edge)^-1. */
GroupoidFunctor psi(const VeryGoodFunctor& f);

/* Composite of the per-step factors along a whole edge path, mapping the
   value at the last vertex to the value at the first. */
Mat psi_path(const VeryGoodFunctor& f, const EdgePath& path);

/* Vertex components of a natural transformation; requires naturality. */
std::map<int, Mat> psi_on_morphism(const NaturalTransformation& eta);

/* Canonical contravariant extension of a groupoid functor to the cover: the
   value at a simplex is the value at its last vertex, the facet map dropping
   the first vertex is the identity, and the remaining facet maps are forced
   by the codimension-2 squares.  Requires the triangle relations
   (RelationViolatedError). */
VeryGoodFunctor phi(const GroupoidFunctor& g);

/* Extension of a groupoid-level morphism: component at a simplex is the
   vertex component at its last vertex.  Requires the vertex components to
   commute with every edge matrix (NotNaturalError). */
NaturalTransformation phi_on_morphism(const GroupoidFunctor& source,
                                      const GroupoidFunctor& target,
                                      const std::map<int, Mat>& vertex_components);

/* Natural isomorphism phi(psi(f)) -> f: identity at vertices, and at larger
   simplices the inverse of f's drop-first-vertex facet map composed with the
   component one level down. */
NaturalTransformation beta(const VeryGoodFunctor& f);

/* Representation at a basepoint: generator matrices are the evaluations of g
   along the tree-conjugated generator loops. */
Representation theta(const GroupoidFunctor& g, int basepoint);

/* Groupoid functor of a representation: constant dimension, edge (a, b) acts
   by the evaluation of the loop (basepoint ~> a, (a,b), b ~> basepoint).
   Tree edges act by the identity.  Requires a valid representation. */
GroupoidFunctor lambda_rep(const Pi1Presentation& p, const Representation& rho);

struct RoundtripReport {
  bool exact = true;
  std::vector<std::string> mismatches;
  std::string summary() const;
};

/* Checks theta(psi(phi(lambda(rho)))) == rho entry-exactly. */
RoundtripReport roundtrip_report(const Pi1Presentation& p, const Representation& rho);

/* Checks that beta(f) is a natural isomorphism onto f. */
RoundtripReport roundtrip_report(const VeryGoodFunctor& f);

}  // namespace vgf
