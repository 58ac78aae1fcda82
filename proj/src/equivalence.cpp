#include "vgf/equivalence.hpp"

#include <algorithm>

#include "vgf/errors.hpp"

namespace vgf {

namespace {

void require_contravariant(const VeryGoodFunctor& f, const char* who) {
  if (f.variance() != Variance::contravariant)
    throw NotVeryGoodError(std::string(who) + ": functor must be contravariant");
}

Simplex drop_vertex(const Simplex& s, int v) {
  Simplex out;
  for (int u : s)
    if (u != v) out.push_back(u);
  return out;
}

}  // namespace

GroupoidFunctor psi(const VeryGoodFunctor& f) {
  require_contravariant(f, "psi");
  const auto& complex = f.poset().complex();
  std::map<int, Index> dims;
  for (int v : complex.vertices()) dims[v] = f.dim_of({v});
  std::map<std::pair<int, int>, Mat> edges;
  for (const Simplex& s : complex.simplices()) {
    if (s.size() != 2) continue;
    const Mat& first_in = f.hasse_map({s[0]}, s);
    const Mat& second_in = f.hasse_map({s[1]}, s);
    Mat inv;
    try {
      inv = invert(second_in);
    } catch (const SingularError&) {
      throw NotVeryGoodError("psi: map {" + std::to_string(s[1]) + "} < {" + simplex_key(s) +
                             "} is singular");
    } catch (const NotSquareError&) {
      throw NotVeryGoodError("psi: map {" + std::to_string(s[1]) + "} < {" + simplex_key(s) +
                             "} is not square");
    }
    edges[{s[0], s[1]}] = first_in * inv;
  }
  return GroupoidFunctor(complex, std::move(dims), std::move(edges));
}

Mat psi_path(const VeryGoodFunctor& f, const EdgePath& path) {
  require_contravariant(f, "psi_path");
  const auto& complex = f.poset().complex();
  validate_edge_path(complex, path);
  Mat m = Mat::Identity(f.dim_of({path.front()}), f.dim_of({path.front()}));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    int a = path[i], b = path[i + 1];
    Simplex edge{std::min(a, b), std::max(a, b)};
    const Mat& from_a = f.hasse_map({a}, edge);
    const Mat& from_b = f.hasse_map({b}, edge);
    Mat inv;
    try {
      inv = invert(from_b);
    } catch (const SingularError&) {
      throw NotVeryGoodError("psi_path: map {" + std::to_string(b) + "} < {" +
                             simplex_key(edge) + "} is singular");
    } catch (const NotSquareError&) {
      throw NotVeryGoodError("psi_path: map {" + std::to_string(b) + "} < {" +
                             simplex_key(edge) + "} is not square");
    }
    m = (m * from_a * inv).eval();
  }
  return m;
}

std::map<int, Mat> psi_on_morphism(const NaturalTransformation& eta) {
  NaturalityCheck check = check_naturality(eta);
  if (!check.passed()) throw NotNaturalError("psi_on_morphism: " + check.summary());
  std::map<int, Mat> out;
  for (int v : eta.source().poset().complex().vertices()) out[v] = eta.at({v});
  return out;
}

VeryGoodFunctor phi(const GroupoidFunctor& g) {
  GroupoidFunctor::Check check = g.validate();
  if (!check.passed()) throw RelationViolatedError("phi: " + check.summary());
  const auto& complex = g.complex();
  CoverPoset poset(complex);
  std::vector<Index> dims;
  for (int id = 0; id < complex.simplex_count(); ++id)
    dims.push_back(g.dim_of(complex.simplex_at(id).back()));
  // Build facet maps by dimension.  For s = {v0 < ... < vk} the value is
  // G(vk); dropping v0 is the identity, dropping v1 on an edge acts by the
  // edge matrix, and for k >= 2 dropping vi is forced by the square through
  // the two facets missing v0 and vi:
  //   map(s, s\vi) = map(s\vi, s\{v0,vi})^-1 * map(s\v0, s\{v0,vi}).
  std::map<std::pair<int, int>, Mat> maps;
  auto map_of = [&](const Simplex& face, const Simplex& s) -> const Mat& {
    return maps.at({complex.index_of(face), complex.index_of(s)});
  };
  for (int id = 0; id < complex.simplex_count(); ++id) {
    const Simplex& s = complex.simplex_at(id);
    if (s.size() < 2) continue;
    for (int dropped : s) {
      Simplex face = drop_vertex(s, dropped);
      std::pair<int, int> key{complex.index_of(face), id};
      if (dropped == s.front()) {
        Index d = g.dim_of(s.back());
        maps[key] = Mat::Identity(d, d);
      } else if (s.size() == 2) {
        maps[key] = g.edge_matrix(s[0], s[1]);
      } else {
        Simplex both_dropped = drop_vertex(face, s.front());
        maps[key] = invert(map_of(both_dropped, face)) *
                    map_of(both_dropped, drop_vertex(s, s.front()));
      }
    }
  }
  return VeryGoodFunctor(std::move(poset), Variance::contravariant, std::move(dims),
                         std::move(maps));
}

NaturalTransformation phi_on_morphism(const GroupoidFunctor& source,
                                      const GroupoidFunctor& target,
                                      const std::map<int, Mat>& vertex_components) {
  if (!(source.complex() == target.complex()))
    throw PosetMismatchError("phi_on_morphism: functors live on different complexes");
  const auto& complex = source.complex();
  for (int v : complex.vertices()) {
    auto it = vertex_components.find(v);
    if (it == vertex_components.end())
      throw SizeMismatchError("phi_on_morphism: missing component at vertex " + std::to_string(v));
    if (it->second.rows() != target.dim_of(v) || it->second.cols() != source.dim_of(v))
      throw SizeMismatchError("phi_on_morphism: component at vertex " + std::to_string(v) +
                              " has the wrong shape");
  }
  for (const Simplex& s : complex.simplices()) {
    if (s.size() != 2) continue;
    Mat lhs = vertex_components.at(s[0]) * source.edge_matrix(s[0], s[1]);
    Mat rhs = target.edge_matrix(s[0], s[1]) * vertex_components.at(s[1]);
    if (!exact_equal(lhs, rhs))
      throw NotNaturalError("phi_on_morphism: components do not commute with edge {" +
                            simplex_key(s) + "}");
  }
  std::vector<Mat> components;
  for (int id = 0; id < complex.simplex_count(); ++id)
    components.push_back(vertex_components.at(complex.simplex_at(id).back()));
  return NaturalTransformation(phi(source), phi(target), std::move(components));
}

NaturalTransformation beta(const VeryGoodFunctor& f) {
  require_contravariant(f, "beta");
  const auto& complex = f.poset().complex();
  VeryGoodFunctor rebuilt = phi(psi(f));
  // Component at s maps rebuilt(s) = f(last vertex of s) to f(s); built by
  // peeling first vertices, inverting f's drop-first-vertex facet maps.
  std::vector<Mat> components(static_cast<std::size_t>(complex.simplex_count()));
  for (int id = 0; id < complex.simplex_count(); ++id) {
    const Simplex& s = complex.simplex_at(id);
    if (s.size() == 1) {
      components[static_cast<std::size_t>(id)] = Mat::Identity(f.dim_of(s), f.dim_of(s));
      continue;
    }
    Simplex tail = drop_vertex(s, s.front());
    Mat drop_first;
    try {
      drop_first = invert(f.hasse_map(tail, s));
    } catch (const SingularError&) {
      throw NotVeryGoodError("beta: facet map {" + simplex_key(tail) + "} < {" +
                             simplex_key(s) + "} is singular");
    }
    // tail sorts before s, so its component is already built.
    components[static_cast<std::size_t>(id)] =
        drop_first * components[static_cast<std::size_t>(complex.index_of(tail))];
  }
  return NaturalTransformation(std::move(rebuilt), f, std::move(components));
}

Representation theta(const GroupoidFunctor& g, int basepoint) {
  Pi1Presentation p = pi1_presentation(g.complex(), basepoint);
  Representation rho;
  rho.dim = g.dim_of(basepoint);
  rho.basepoint = basepoint;
  for (std::size_t i = 0; i < p.generators().size(); ++i)
    rho.generator_matrices.push_back(g.path_matrix(p.generator_loop(static_cast<int>(i))));
  return rho;
}

GroupoidFunctor lambda_rep(const Pi1Presentation& p, const Representation& rho) {
  RepCheck check = rep_validate(p, rho);
  if (!check.passed()) throw InvalidRepError("lambda: " + check.summary());
  const auto& complex = p.complex();
  std::map<int, Index> dims;
  for (int v : complex.vertices()) dims[v] = rho.dim;
  std::map<std::pair<int, int>, Mat> edges;
  for (const Simplex& s : complex.simplices()) {
    if (s.size() != 2) continue;
    EdgePath loop = tree_path(p.tree(), p.basepoint(), s[0]);
    loop = concatenate(loop, {s[0], s[1]});
    loop = concatenate(loop, tree_path(p.tree(), s[1], p.basepoint()));
    edges[{s[0], s[1]}] = rep_evaluate(p, rho, loop);
  }
  return GroupoidFunctor(complex, std::move(dims), std::move(edges));
}

std::string RoundtripReport::summary() const {
  if (exact) return "exact";
  std::string s;
  for (const auto& m : mismatches) s += m + "\n";
  return s;
}

RoundtripReport roundtrip_report(const Pi1Presentation& p, const Representation& rho) {
  RoundtripReport report;
  RepCheck check = rep_validate(p, rho);
  if (!check.passed()) {
    report.exact = false;
    report.mismatches.push_back("input representation invalid: " + check.summary());
    return report;
  }
  Representation back = theta(psi(phi(lambda_rep(p, rho))), p.basepoint());
  if (back.dim != rho.dim) {
    report.exact = false;
    report.mismatches.push_back("dimension changed: " + std::to_string(rho.dim) + " -> " +
                                std::to_string(back.dim));
  }
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i < back.generator_matrices.size() && i < rho.generator_matrices.size() &&
        exact_equal(back.generator_matrices[i], rho.generator_matrices[i]))
      continue;
    report.exact = false;
    auto [a, b] = p.generators()[i];
    report.mismatches.push_back("generator {" + std::to_string(a) + "," + std::to_string(b) +
                                "} changed");
  }
  return report;
}

RoundtripReport roundtrip_report(const VeryGoodFunctor& f) {
  RoundtripReport report;
  NaturalTransformation iso = beta(f);
  NaturalityCheck naturality = check_naturality(iso);
  if (!naturality.passed()) {
    report.exact = false;
    report.mismatches.push_back("beta not natural: " + naturality.summary());
  }
  const auto& complex = f.poset().complex();
  for (int id = 0; id < complex.simplex_count(); ++id)
    if (!is_invertible(iso.at_id(id))) {
      report.exact = false;
      report.mismatches.push_back("beta component at {" + simplex_key(complex.simplex_at(id)) +
                                  "} is not invertible");
    }
  return report;
}

}  // namespace vgf
