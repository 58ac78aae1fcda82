#include "vgf/fixtures.hpp"

namespace vgf {

SimplicialComplex circle3() {
  return close_under_faces({{0, 1}, {1, 2}, {0, 2}}, 3);
}

SimplicialComplex tetrahedron_boundary() {
  return close_under_faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4);
}

SimplicialComplex torus7() {
  std::vector<Simplex> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return close_under_faces(facets, 7);
}

SimplicialComplex projective_plane6() {
  return close_under_faces({{0, 1, 3},
                               {0, 1, 4},
                               {0, 2, 3},
                               {0, 2, 5},
                               {0, 4, 5},
                               {1, 2, 4},
                               {1, 2, 5},
                               {1, 3, 5},
                               {2, 3, 4},
                               {3, 4, 5}},
                              6);
}

}  // namespace vgf
