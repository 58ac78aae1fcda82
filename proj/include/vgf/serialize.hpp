#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vgf/functor.hpp"
#include "vgf/groupoid.hpp"

namespace vgf {

/* Manifests are JSON with a fixed key order, two-space indentation, and every
   matrix entry an exact rational string, so emit -> parse -> emit is
   byte-identical.

     complex        {"vertex_count": n, "facets": [[0,1], ...]}
     functor        {"complex": <inline or path>, "variance": "contra"|"co",
                     "dims": {"0,2": 1, ...}, "maps": {"0|0,2": [["-1"]], ...}}
     representation {"complex": ..., "basepoint": 0, "dim": 1,
                     "generators": {"1,2": [["-1"]]}}
     morphism       {"source": <functor>, "target": <functor>,
                     "components": {"0": [["1"]], ...}}

   Simplices are keyed by their ascending comma-joined vertices, Hasse edges
   as "face|simplex", matrices as row-major grids of rational strings.  A
   "complex" field may be a path, resolved relative to the manifest's own
   directory; emitters always inline.  Representation generators are keyed by
   the non-tree edges of the recomputed breadth-first maximal tree. */
using Json = nlohmann::ordered_json;

Json matrix_to_json(const Mat& m);
/* Shape is prescribed by the surrounding manifest, never inferred. */
Mat matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where);

Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

Json functor_to_json(const VeryGoodFunctor& f);
VeryGoodFunctor functor_from_json(const Json& j, const std::filesystem::path& base_dir);

struct RepresentationManifest {
  SimplicialComplex complex;
  Representation rep;
};
Json representation_to_json(const SimplicialComplex& k, const Representation& rho);
RepresentationManifest representation_from_json(const Json& j,
                                                const std::filesystem::path& base_dir);

Json morphism_to_json(const NaturalTransformation& eta);
NaturalTransformation morphism_from_json(const Json& j, const std::filesystem::path& base_dir);

/* Canonical text: dump(2) plus a trailing newline. */
std::string dump_manifest(const Json& j);
Json parse_manifest_text(const std::string& text);        // ParseError with position
Json load_manifest(const std::filesystem::path& path);    // ParseError when unreadable
void save_manifest(const Json& j, const std::filesystem::path& path);

}  // namespace vgf
