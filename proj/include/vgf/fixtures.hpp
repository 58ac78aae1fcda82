#pragma once

#include "vgf/simplicial_complex.hpp"

namespace vgf {

/* Triangle boundary: three vertices, three edges, no 2-simplex.  The smallest
   complex with a circle's homotopy type. */
SimplicialComplex circle3();

/* Boundary of the tetrahedron: all four triangles on four vertices.  Simply
   connected, so every loop evaluation collapses to the identity. */
SimplicialComplex tetrahedron_boundary();

/* Seven-vertex triangulation of the torus: triangles {i, i+1, i+3} and
   {i, i+2, i+3} mod 7.  Every pair of vertices spans an edge and each edge
   lies in exactly two triangles. */
SimplicialComplex torus7();

/* Six-vertex triangulation of the projective plane (the icosahedron's
   antipodal quotient): ten triangles, fifteen edges, each edge in exactly
   two triangles. */
SimplicialComplex projective_plane6();

}  // namespace vgf
