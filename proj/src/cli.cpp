#include "vgf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "vgf/bundle.hpp"
#include "vgf/equivalence.hpp"
#include "vgf/errors.hpp"
#include "vgf/fixtures.hpp"
#include "vgf/serialize.hpp"

namespace vgf::cli {

namespace {

std::string matrix_text(const Mat& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i > 0) s += ", ";
    s += "[";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) s += ", ";
      s += m(i, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int letter : w) {
    if (!s.empty()) s += " ";
    s += "g" + std::to_string(std::abs(letter));
    if (letter < 0) s += "^-1";
  }
  return s;
}

EdgePath parse_vertex_list(const std::string& text) {
  EdgePath path;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t comma = text.find(',', at);
    std::string token = text.substr(at, comma == std::string::npos ? comma : comma - at);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad vertex list \"" + text + "\"");
    path.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  return path;
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(load_manifest(path));
}

VeryGoodFunctor load_functor(const std::string& path) {
  return functor_from_json(load_manifest(path), std::filesystem::path(path).parent_path());
}

RepresentationManifest load_representation(const std::string& path) {
  return representation_from_json(load_manifest(path), std::filesystem::path(path).parent_path());
}

NaturalTransformation load_morphism(const std::string& path) {
  return morphism_from_json(load_manifest(path), std::filesystem::path(path).parent_path());
}

void emit_manifest(const Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << dump_manifest(j);
  } else {
    save_manifest(j, out_path);
    out << "wrote " << out_path << "\n";
  }
}

void print_dims(std::ostream& out, const std::string& label, const VeryGoodFunctor& f) {
  out << label << " dims:\n";
  const SimplicialComplex& k = f.poset().complex();
  for (int i = 0; i < k.simplex_count(); ++i)
    out << "  " << simplex_key(k.simplex_at(i)) << ": " << f.dim_of_id(i) << "\n";
}

VeryGoodFunctor fixture_functor(const std::string& name) {
  if (name.rfind("mobius:", 0) == 0)
    return mobius_fixture(Rational::from_string(name.substr(7))).functor();
  throw ParseError("unknown functor fixture: " + name);
}

Json fixture_manifest(const std::string& name) {
  if (name == "circle3") return complex_to_json(circle3());
  if (name == "tetra") return complex_to_json(tetrahedron_boundary());
  if (name == "torus7") return complex_to_json(torus7());
  if (name == "rp2-6") return complex_to_json(projective_plane6());
  if (name.rfind("mobius:", 0) == 0) return functor_to_json(fixture_functor(name));
  throw ParseError("unknown fixture \"" + name + "\" (see `vgf fixtures list`)");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for very good functors on star covers, groupoid functors,\n"
               "basepointed representations, and very good vector bundles."};
  app.name("vgf");
  app.require_subcommand(1);
  int result = 0;

  // Verdict helper: prints the failure and flips the exit code to 1.
  auto good_or_report = [&](const VeryGoodFunctor& f) {
    FunctorCheck check = check_very_good(f);
    if (check.passed()) return true;
    out << "not very good: " << check.summary() << "\n";
    result = 1;
    return false;
  };
  auto covariant_or_throw = [](const VeryGoodFunctor& f) {
    if (f.variance() != Variance::covariant)
      throw ParseError("bundle commands need covariant functors (variance \"co\")");
  };

  // ---- complex ----
  auto* complex_cmd = app.add_subcommand("complex", "Inspect and transform complex manifests");
  complex_cmd->require_subcommand(1);
  struct {
    std::string file, out_path;
    int k = 0;
  } cx;

  auto* check_cmd = complex_cmd->add_subcommand("check", "Validate a manifest and print a summary");
  check_cmd->add_option("file", cx.file, "complex manifest")->required();
  check_cmd->callback([&] {
    SimplicialComplex k = load_complex(cx.file);
    out << "vertices: " << k.vertices().size() << "\n";
    out << "simplices: " << k.simplex_count() << "\n";
    out << "dimension: " << k.dimension() << "\n";
    out << "euler characteristic: " << k.euler_characteristic() << "\n";
    out << "components: " << connected_components(k).size() << "\n";
  });

  auto* skeleton_cmd = complex_cmd->add_subcommand("skeleton", "Keep simplices of dimension <= k");
  skeleton_cmd->add_option("file", cx.file, "complex manifest")->required();
  skeleton_cmd->add_option("-k,--dim", cx.k, "top dimension to keep")
      ->required()
      ->check(CLI::NonNegativeNumber);
  skeleton_cmd->add_option("-o,--output", cx.out_path, "write the result here");
  skeleton_cmd->callback(
      [&] { emit_manifest(complex_to_json(skeleton(load_complex(cx.file), cx.k)), cx.out_path, out); });

  auto* subdivide_cmd =
      complex_cmd->add_subcommand("subdivide", "Barycentric subdivision (chains of faces)");
  subdivide_cmd->add_option("file", cx.file, "complex manifest")->required();
  subdivide_cmd->add_option("-o,--output", cx.out_path, "write the result here");
  subdivide_cmd->callback([&] {
    emit_manifest(complex_to_json(barycentric_subdivision(load_complex(cx.file))), cx.out_path, out);
  });

  auto* components_cmd =
      complex_cmd->add_subcommand("components", "Connected components of the 1-skeleton");
  components_cmd->add_option("file", cx.file, "complex manifest")->required();
  components_cmd->callback([&] {
    auto parts = connected_components(load_complex(cx.file));
    out << "components: " << parts.size() << "\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << i << ":";
      for (int v : parts[i]) out << " " << v;
      out << "\n";
    }
  });

  // ---- pi1 ----
  struct {
    std::string file;
    int basepoint = 0;
  } p1;
  auto* pi1_cmd = app.add_subcommand("pi1", "Fundamental group presentation from a maximal tree");
  pi1_cmd->add_option("file", p1.file, "complex manifest")->required();
  pi1_cmd->add_option("--basepoint", p1.basepoint, "basepoint vertex")->capture_default_str();
  pi1_cmd->callback([&] {
    Pi1Presentation p = pi1_presentation(load_complex(p1.file), p1.basepoint);
    out << "generators: " << p.generators().size() << ", relations: " << p.relations().size()
        << "\n";
    for (std::size_t i = 0; i < p.generators().size(); ++i)
      out << "g" << i + 1 << ": (" << p.generators()[i].first << "," << p.generators()[i].second
          << ")\n";
    for (std::size_t i = 0; i < p.relations().size(); ++i)
      out << "r" << i + 1 << " {" << simplex_key(p.relation_triangles()[i])
          << "}: " << word_text(p.relations()[i]) << "\n";
  });

  // ---- phi ----
  struct {
    std::string file, out_path;
  } ph;
  auto* phi_cmd =
      app.add_subcommand("phi", "Extend a representation to a very good functor on the cover");
  phi_cmd->add_option("file", ph.file, "representation manifest")->required();
  phi_cmd->add_option("-o,--output", ph.out_path, "write the functor manifest here");
  phi_cmd->callback([&] {
    RepresentationManifest m = load_representation(ph.file);
    Pi1Presentation p = pi1_presentation(m.complex, m.rep.basepoint);
    RepCheck check = rep_validate(p, m.rep);
    if (!check.passed()) {
      out << "invalid representation: " << check.summary() << "\n";
      result = 1;
      return;
    }
    emit_manifest(functor_to_json(phi(lambda_rep(p, m.rep))), ph.out_path, out);
  });

  // ---- psi ----
  struct {
    std::string file, path_text;
  } ps;
  auto* psi_cmd =
      app.add_subcommand("psi", "Restrict a very good functor to vertices and edge steps");
  psi_cmd->add_option("file", ps.file, "functor manifest (variance contra)")->required();
  psi_cmd->add_option("--path", ps.path_text, "edge path like 0,1,2,0: print its composite");
  psi_cmd->callback([&] {
    VeryGoodFunctor f = load_functor(ps.file);
    if (!good_or_report(f)) return;
    if (!ps.path_text.empty()) {
      out << "psi_path(" << ps.path_text << ") = " << matrix_text(psi_path(f, parse_vertex_list(ps.path_text)))
          << "\n";
      return;
    }
    GroupoidFunctor g = psi(f);
    for (const auto& [v, d] : g.dims()) out << "dim at " << v << ": " << d << "\n";
    for (const auto& [edge, m] : g.stored_edges())
      out << "edge (" << edge.first << "," << edge.second << "): " << matrix_text(m) << "\n";
  });

  // ---- roundtrip ----
  struct {
    std::string file;
  } rt;
  auto* roundtrip_cmd = app.add_subcommand(
      "roundtrip", "Check that the four conversions return the representation unchanged");
  roundtrip_cmd->add_option("file", rt.file, "representation manifest")->required();
  roundtrip_cmd->callback([&] {
    RepresentationManifest m = load_representation(rt.file);
    Pi1Presentation p = pi1_presentation(m.complex, m.rep.basepoint);
    RepCheck check = rep_validate(p, m.rep);
    if (!check.passed()) {
      out << "invalid representation: " << check.summary() << "\n";
      result = 1;
      return;
    }
    RoundtripReport report = roundtrip_report(p, m.rep);
    out << "ΘΨΦΛ exact: " << (report.exact ? "PASS" : "FAIL") << "\n";
    for (const std::string& line : report.mismatches) out << "  " << line << "\n";
    if (!report.exact) result = 1;
  });

  // ---- limit ----
  struct {
    std::string file;
  } lm;
  auto* limit_cmd = app.add_subcommand("limit", "Finite limit over the whole cover poset");
  limit_cmd->add_option("file", lm.file, "functor manifest")->required();
  limit_cmd->callback([&] {
    VeryGoodFunctor f = load_functor(lm.file);
    if (!good_or_report(f)) return;
    out << "limit dimension: " << finite_limit(f).dim << "\n";
  });

  // ---- bundle ----
  auto* bundle_cmd = app.add_subcommand("bundle", "Very good vector bundle operations");
  bundle_cmd->require_subcommand(1);
  struct {
    std::string file, second, out_path, loop_text;
  } bd;

  auto* kernel_cmd = bundle_cmd->add_subcommand("kernel", "Objectwise kernel of a morphism");
  kernel_cmd->add_option("file", bd.file, "morphism manifest")->required();
  kernel_cmd->add_option("-o,--output", bd.out_path, "write the kernel bundle here");
  kernel_cmd->callback([&] {
    NaturalTransformation eta = load_morphism(bd.file);
    covariant_or_throw(eta.source());
    if (!good_or_report(eta.source()) || !good_or_report(eta.target())) return;
    NaturalityCheck check = check_naturality(eta);
    if (!check.passed()) {
      out << "not natural: " << check.summary() << "\n";
      result = 1;
      return;
    }
    VeryGoodBundle source(eta.source()), target(eta.target());
    std::vector<Mat> components;
    for (int i = 0; i < eta.source().poset().object_count(); ++i)
      components.push_back(eta.at_id(i));
    KernelResult kernel = kernel_bundle(BundleMorphism(source, target, components));
    print_dims(out, "kernel", kernel.bundle.functor());
    if (!bd.out_path.empty()) emit_manifest(functor_to_json(kernel.bundle.functor()), bd.out_path, out);
  });

  auto* cokernel_cmd = bundle_cmd->add_subcommand("cokernel", "Objectwise cokernel of a morphism");
  cokernel_cmd->add_option("file", bd.file, "morphism manifest")->required();
  cokernel_cmd->add_option("-o,--output", bd.out_path, "write the cokernel bundle here");
  cokernel_cmd->callback([&] {
    NaturalTransformation eta = load_morphism(bd.file);
    covariant_or_throw(eta.source());
    if (!good_or_report(eta.source()) || !good_or_report(eta.target())) return;
    NaturalityCheck check = check_naturality(eta);
    if (!check.passed()) {
      out << "not natural: " << check.summary() << "\n";
      result = 1;
      return;
    }
    VeryGoodBundle source(eta.source()), target(eta.target());
    std::vector<Mat> components;
    for (int i = 0; i < eta.source().poset().object_count(); ++i)
      components.push_back(eta.at_id(i));
    CokernelResult cokernel = cokernel_bundle(BundleMorphism(source, target, components));
    print_dims(out, "cokernel", cokernel.bundle.functor());
    if (!bd.out_path.empty())
      emit_manifest(functor_to_json(cokernel.bundle.functor()), bd.out_path, out);
  });

  auto* biproduct_cmd = bundle_cmd->add_subcommand("biproduct", "Direct sum of two bundles");
  biproduct_cmd->add_option("first", bd.file, "functor manifest")->required();
  biproduct_cmd->add_option("second", bd.second, "functor manifest")->required();
  biproduct_cmd->add_option("-o,--output", bd.out_path, "write the sum bundle here");
  biproduct_cmd->callback([&] {
    VeryGoodFunctor a = load_functor(bd.file), b = load_functor(bd.second);
    covariant_or_throw(a);
    covariant_or_throw(b);
    if (!good_or_report(a) || !good_or_report(b)) return;
    BiproductResult sum = biproduct(VeryGoodBundle(a), VeryGoodBundle(b));
    print_dims(out, "biproduct", sum.bundle.functor());
    if (!bd.out_path.empty()) emit_manifest(functor_to_json(sum.bundle.functor()), bd.out_path, out);
  });

  auto* monodromy_cmd =
      bundle_cmd->add_subcommand("monodromy", "Fiber transport around an edge loop");
  monodromy_cmd->add_option("file", bd.file, "functor manifest (variance co)")->required();
  monodromy_cmd->add_option("--loop", bd.loop_text, "edge loop like 0,1,2,0")->required();
  monodromy_cmd->callback([&] {
    VeryGoodFunctor f = load_functor(bd.file);
    covariant_or_throw(f);
    if (!good_or_report(f)) return;
    EdgePath loop = parse_vertex_list(bd.loop_text);
    if (loop.front() != loop.back())
      throw InvalidPathError("monodromy needs a loop: first and last vertex must agree");
    out << "monodromy(" << bd.loop_text << ") = "
        << matrix_text(bundle_monodromy(VeryGoodBundle(f), loop)) << "\n";
  });

  auto* iso1_cmd =
      bundle_cmd->add_subcommand("iso1", "Classify two rank-one bundles up to isomorphism");
  iso1_cmd->add_option("first", bd.file, "functor manifest")->required();
  iso1_cmd->add_option("second", bd.second, "functor manifest")->required();
  iso1_cmd->callback([&] {
    VeryGoodFunctor a = load_functor(bd.file), b = load_functor(bd.second);
    covariant_or_throw(a);
    covariant_or_throw(b);
    if (!good_or_report(a) || !good_or_report(b)) return;
    RankOneIso iso = iso_check_rank_one(VeryGoodBundle(a), VeryGoodBundle(b));
    out << (iso.isomorphic ? "isomorphic" : "NOT isomorphic") << "\n";
    for (std::size_t i = 0; i < iso.generator_monodromies.size(); ++i)
      out << "g" << i + 1 << " monodromy: " << matrix_text(iso.generator_monodromies[i].first)
          << " vs " << matrix_text(iso.generator_monodromies[i].second) << "\n";
    if (!iso.isomorphic) result = 1;
  });

  // ---- fixtures ----
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in complexes and bundles");
  fixtures_cmd->require_subcommand(1);
  struct {
    std::string name, out_path;
  } fx;

  auto* list_cmd = fixtures_cmd->add_subcommand("list", "Names accepted by emit");
  list_cmd->callback([&] {
    out << "circle3\ntetra\ntorus7\nrp2-6\nmobius:-1\nmobius:-2\n";
  });

  auto* emit_cmd = fixtures_cmd->add_subcommand("emit", "Write a fixture manifest");
  emit_cmd->add_option("name", fx.name, "fixture name (mobius takes any nonzero rational scale)")
      ->required();
  emit_cmd->add_option("-o,--output", fx.out_path, "write the manifest here");
  emit_cmd->callback([&] { emit_manifest(fixture_manifest(fx.name), fx.out_path, out); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}

}  // namespace vgf::cli
