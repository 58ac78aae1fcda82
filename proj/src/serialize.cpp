#include "vgf/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vgf/errors.hpp"

namespace vgf {

namespace {

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
}

void require_keys(const Json& j, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (const char* key : keys)
    if (!j.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ParseError(where + ": unknown key \"" + key + "\"");
  }
}

long long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long long>();
}

long long require_nonneg(const Json& j, const std::string& where) {
  long long v = require_int(j, where);
  if (v < 0) throw ParseError(where + ": expected a nonnegative integer");
  return v;
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

Simplex parse_simplex_key(const std::string& key, const std::string& where) {
  Simplex s;
  std::stringstream stream(key);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(where + ": bad simplex key \"" + key + "\"");
    s.push_back(std::stoi(token));
  }
  if (s.empty()) throw ParseError(where + ": empty simplex key");
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1])
      throw ParseError(where + ": simplex key \"" + key + "\" is not strictly ascending");
  return s;
}

SimplicialComplex resolve_complex(const Json& j, const std::filesystem::path& base_dir,
                                  const std::string& where) {
  if (j.is_string()) {
    std::filesystem::path p(j.get<std::string>());
    if (p.is_relative()) p = base_dir / p;
    return complex_from_json(load_manifest(p));
  }
  require_object(j, where);
  return complex_from_json(j);
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array())
    throw ParseError(where + ": expected a matrix (array of rows)");
  if (static_cast<Index>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(j.size()));
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(where + ": row " + std::to_string(i) + ": expected " +
                       std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) {
      const Json& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_string())
        throw ParseError(where + ": entry (" + std::to_string(i) + "," + std::to_string(c) +
                         "): expected a rational string");
      try {
        m(i, c) = Rational::from_string(cell.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + ": entry (" + std::to_string(i) + "," + std::to_string(c) +
                         "): " + e.what());
      }
    }
  }
  return m;
}

Json complex_to_json(const SimplicialComplex& k) {
  Json j = Json::object();
  j["vertex_count"] = k.vertex_count();
  Json facets = Json::array();
  for (const Simplex& s : k.maximal_simplices()) facets.push_back(s);
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  require_object(j, "complex");
  require_keys(j, {"vertex_count", "facets"}, "complex");
  int n = static_cast<int>(require_nonneg(j["vertex_count"], "complex.vertex_count"));
  if (!j["facets"].is_array()) throw ParseError("complex.facets: expected an array");
  std::vector<Simplex> facets;
  for (const Json& f : j["facets"]) {
    if (!f.is_array()) throw ParseError("complex.facets: each facet must be an array");
    Simplex s;
    for (const Json& v : f) s.push_back(static_cast<int>(require_int(v, "complex.facets")));
    facets.push_back(std::move(s));
  }
  return close_under_faces(facets, n);
}

Json functor_to_json(const VeryGoodFunctor& f) {
  const SimplicialComplex& k = f.poset().complex();
  Json j = Json::object();
  j["complex"] = complex_to_json(k);
  j["variance"] = f.variance() == Variance::contravariant ? "contra" : "co";
  Json dims = Json::object();
  for (int i = 0; i < k.simplex_count(); ++i)
    dims[simplex_key(k.simplex_at(i))] = f.dim_of_id(i);
  j["dims"] = std::move(dims);
  Json maps = Json::object();
  for (const auto& [face_id, simplex_id] : f.poset().hasse_edges()) {
    std::string key = simplex_key(k.simplex_at(face_id)) + "|" + simplex_key(k.simplex_at(simplex_id));
    maps[key] = matrix_to_json(f.hasse_map_ids(face_id, simplex_id));
  }
  j["maps"] = std::move(maps);
  return j;
}

VeryGoodFunctor functor_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require_object(j, "functor");
  require_keys(j, {"complex", "variance", "dims", "maps"}, "functor");
  SimplicialComplex k = resolve_complex(j["complex"], base_dir, "functor.complex");
  std::string variance_text = require_string(j["variance"], "functor.variance");
  Variance variance;
  if (variance_text == "contra")
    variance = Variance::contravariant;
  else if (variance_text == "co")
    variance = Variance::covariant;
  else
    throw ParseError("functor.variance: expected \"contra\" or \"co\", got \"" + variance_text +
                     "\"");
  CoverPoset poset(k);

  const Json& dims_json = j["dims"];
  require_object(dims_json, "functor.dims");
  if (static_cast<int>(dims_json.size()) != k.simplex_count())
    throw ParseError("functor.dims: expected one entry per simplex (" +
                     std::to_string(k.simplex_count()) + "), got " +
                     std::to_string(dims_json.size()));
  std::vector<Index> dims(static_cast<std::size_t>(k.simplex_count()), -1);
  for (const auto& [key, value] : dims_json.items()) {
    Simplex s = parse_simplex_key(key, "functor.dims");
    if (!k.contains(s)) throw ParseError("functor.dims: \"" + key + "\" is not a simplex");
    dims[static_cast<std::size_t>(k.index_of(s))] =
        static_cast<Index>(require_nonneg(value, "functor.dims[\"" + key + "\"]"));
  }

  const Json& maps_json = j["maps"];
  require_object(maps_json, "functor.maps");
  if (maps_json.size() != poset.hasse_edges().size())
    throw ParseError("functor.maps: expected one entry per Hasse edge (" +
                     std::to_string(poset.hasse_edges().size()) + "), got " +
                     std::to_string(maps_json.size()));
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& [key, value] : maps_json.items()) {
    std::string where = "functor.maps[\"" + key + "\"]";
    auto bar = key.find('|');
    if (bar == std::string::npos) throw ParseError(where + ": key must be \"face|simplex\"");
    Simplex face = parse_simplex_key(key.substr(0, bar), where);
    Simplex simplex = parse_simplex_key(key.substr(bar + 1), where);
    if (!k.contains(face) || !k.contains(simplex))
      throw ParseError(where + ": not simplices of the complex");
    if (face.size() + 1 != simplex.size() ||
        !std::includes(simplex.begin(), simplex.end(), face.begin(), face.end()))
      throw ParseError(where + ": not a codimension-1 face inclusion");
    Index df = dims[static_cast<std::size_t>(k.index_of(face))];
    Index ds = dims[static_cast<std::size_t>(k.index_of(simplex))];
    Index rows = variance == Variance::contravariant ? df : ds;
    Index cols = variance == Variance::contravariant ? ds : df;
    maps[{k.index_of(face), k.index_of(simplex)}] = matrix_from_json(value, rows, cols, where);
  }
  return VeryGoodFunctor(std::move(poset), variance, std::move(dims), std::move(maps));
}

Json representation_to_json(const SimplicialComplex& k, const Representation& rho) {
  Pi1Presentation p = pi1_presentation(k, rho.basepoint);
  if (p.generators().size() != rho.generator_matrices.size())
    throw InvalidRepError("representation has " + std::to_string(rho.generator_matrices.size()) +
                          " matrices for " + std::to_string(p.generators().size()) +
                          " generators");
  Json j = Json::object();
  j["complex"] = complex_to_json(k);
  j["basepoint"] = rho.basepoint;
  j["dim"] = rho.dim;
  Json generators = Json::object();
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    auto [a, b] = p.generators()[i];
    generators[std::to_string(a) + "," + std::to_string(b)] =
        matrix_to_json(rho.generator_matrices[i]);
  }
  j["generators"] = std::move(generators);
  return j;
}

RepresentationManifest representation_from_json(const Json& j,
                                                const std::filesystem::path& base_dir) {
  require_object(j, "representation");
  require_keys(j, {"complex", "basepoint", "dim", "generators"}, "representation");
  SimplicialComplex k = resolve_complex(j["complex"], base_dir, "representation.complex");
  int basepoint = static_cast<int>(require_int(j["basepoint"], "representation.basepoint"));
  Index dim = static_cast<Index>(require_nonneg(j["dim"], "representation.dim"));
  Pi1Presentation p = pi1_presentation(k, basepoint);

  const Json& generators = j["generators"];
  require_object(generators, "representation.generators");
  if (generators.size() != p.generators().size())
    throw ParseError("representation.generators: expected one entry per non-tree edge (" +
                     std::to_string(p.generators().size()) + "), got " +
                     std::to_string(generators.size()));
  Representation rho;
  rho.dim = dim;
  rho.basepoint = basepoint;
  rho.generator_matrices.resize(p.generators().size());
  for (const auto& [key, value] : generators.items()) {
    std::string where = "representation.generators[\"" + key + "\"]";
    Simplex edge = parse_simplex_key(key, where);
    if (edge.size() != 2) throw ParseError(where + ": key must be an edge \"a,b\"");
    int index;
    try {
      index = p.generator_index(edge[0], edge[1]);
    } catch (const Error&) {
      throw ParseError(where + ": not a non-tree edge of the breadth-first maximal tree");
    }
    rho.generator_matrices[static_cast<std::size_t>(index)] =
        matrix_from_json(value, dim, dim, where);
  }
  return {std::move(k), std::move(rho)};
}

Json morphism_to_json(const NaturalTransformation& eta) {
  const SimplicialComplex& k = eta.source().poset().complex();
  Json j = Json::object();
  j["source"] = functor_to_json(eta.source());
  j["target"] = functor_to_json(eta.target());
  Json components = Json::object();
  for (int i = 0; i < k.simplex_count(); ++i)
    components[simplex_key(k.simplex_at(i))] = matrix_to_json(eta.at_id(i));
  j["components"] = std::move(components);
  return j;
}

NaturalTransformation morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require_object(j, "morphism");
  require_keys(j, {"source", "target", "components"}, "morphism");
  // Like "complex", the endpoint functors may be inlined or referenced by path.
  auto resolve_functor = [&](const Json& f) {
    if (!f.is_string()) return functor_from_json(f, base_dir);
    std::filesystem::path p(f.get<std::string>());
    if (p.is_relative()) p = base_dir / p;
    return functor_from_json(load_manifest(p), p.parent_path());
  };
  VeryGoodFunctor source = resolve_functor(j["source"]);
  VeryGoodFunctor target = resolve_functor(j["target"]);
  const SimplicialComplex& k = source.poset().complex();

  const Json& components_json = j["components"];
  require_object(components_json, "morphism.components");
  if (static_cast<int>(components_json.size()) != k.simplex_count())
    throw ParseError("morphism.components: expected one entry per simplex (" +
                     std::to_string(k.simplex_count()) + "), got " +
                     std::to_string(components_json.size()));
  std::vector<Mat> components(static_cast<std::size_t>(k.simplex_count()));
  std::vector<bool> seen(static_cast<std::size_t>(k.simplex_count()), false);
  for (const auto& [key, value] : components_json.items()) {
    std::string where = "morphism.components[\"" + key + "\"]";
    Simplex s = parse_simplex_key(key, where);
    if (!k.contains(s)) throw ParseError(where + ": not a simplex of the complex");
    int id = k.index_of(s);
    components[static_cast<std::size_t>(id)] =
        matrix_from_json(value, target.dim_of_id(id), source.dim_of_id(id), where);
    seen[static_cast<std::size_t>(id)] = true;
  }
  for (bool b : seen)
    if (!b) throw ParseError("morphism.components: a simplex is missing its component");
  return NaturalTransformation(std::move(source), std::move(target), std::move(components));
}

std::string dump_manifest(const Json& j) { return j.dump(2) + "\n"; }

Json parse_manifest_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest_text(buffer.str());
}

void save_manifest(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path.string());
  out << dump_manifest(j);
}

}  // namespace vgf
