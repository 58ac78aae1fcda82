#include "vgf/bundle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vgf/errors.hpp"
#include "vgf/fixtures.hpp"

namespace vgf {

namespace {

VeryGoodFunctor identity_line_functor(const CoverPoset& poset) {
  std::vector<Index> dims(static_cast<std::size_t>(poset.object_count()), 1);
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : poset.hasse_edges()) maps[edge] = Mat::Identity(1, 1);
  return VeryGoodFunctor(poset, Variance::covariant, std::move(dims), std::move(maps));
}

}  // namespace

VeryGoodBundle::VeryGoodBundle(VeryGoodFunctor functor) : functor_(std::move(functor)) {
  if (functor_.variance() != Variance::covariant)
    throw NotVeryGoodError("bundle: functor must be covariant");
  FunctorCheck check = check_very_good(functor_);
  if (!check.passed()) throw NotVeryGoodError("bundle: " + check.summary());
}

BundleMorphism::BundleMorphism(const VeryGoodBundle& source, const VeryGoodBundle& target,
                               std::vector<Mat> components_by_object)
    : eta_(source.functor(), target.functor(), std::move(components_by_object)) {
  NaturalityCheck check = check_naturality(eta_);
  if (!check.passed()) throw NotNaturalError("bundle morphism: " + check.summary());
}

VeryGoodBundle zero_bundle(const CoverPoset& poset) {
  std::vector<Index> dims(static_cast<std::size_t>(poset.object_count()), 0);
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : poset.hasse_edges()) maps[edge] = Mat::Zero(0, 0);
  return VeryGoodBundle(VeryGoodFunctor(poset, Variance::covariant, std::move(dims), std::move(maps)));
}

BiproductResult biproduct(const VeryGoodBundle& a, const VeryGoodBundle& b) {
  if (!(a.poset() == b.poset()))
    throw PosetMismatchError("biproduct: bundles live on different posets");
  const CoverPoset& poset = a.poset();
  const int n = poset.object_count();
  std::vector<Index> dims;
  for (int i = 0; i < n; ++i) dims.push_back(a.functor().dim_of_id(i) + b.functor().dim_of_id(i));
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : poset.hasse_edges()) {
    auto [face_id, simplex_id] = edge;
    const Mat& ma = a.functor().hasse_map_ids(face_id, simplex_id);
    const Mat& mb = b.functor().hasse_map_ids(face_id, simplex_id);
    Mat block = Mat::Zero(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    block.topLeftCorner(ma.rows(), ma.cols()) = ma;
    block.bottomRightCorner(mb.rows(), mb.cols()) = mb;
    maps[edge] = std::move(block);
  }
  VeryGoodBundle sum(VeryGoodFunctor(poset, Variance::covariant, dims, std::move(maps)));
  std::vector<Mat> i1, i2, p1, p2;
  for (int i = 0; i < n; ++i) {
    Index da = a.functor().dim_of_id(i);
    Index db = b.functor().dim_of_id(i);
    Mat inj1 = Mat::Zero(da + db, da);
    inj1.topRows(da) = Mat::Identity(da, da);
    Mat inj2 = Mat::Zero(da + db, db);
    inj2.bottomRows(db) = Mat::Identity(db, db);
    Mat proj1 = Mat::Zero(da, da + db);
    proj1.leftCols(da) = Mat::Identity(da, da);
    Mat proj2 = Mat::Zero(db, da + db);
    proj2.rightCols(db) = Mat::Identity(db, db);
    i1.push_back(std::move(inj1));
    i2.push_back(std::move(inj2));
    p1.push_back(std::move(proj1));
    p2.push_back(std::move(proj2));
  }
  BundleMorphism inject_first(a, sum, std::move(i1));
  BundleMorphism inject_second(b, sum, std::move(i2));
  BundleMorphism project_first(sum, a, std::move(p1));
  BundleMorphism project_second(sum, b, std::move(p2));
  return {std::move(sum), std::move(inject_first), std::move(inject_second),
          std::move(project_first), std::move(project_second)};
}

KernelResult kernel_bundle(const BundleMorphism& m) {
  const VeryGoodFunctor& src = m.source();
  const CoverPoset& poset = src.poset();
  const int n = poset.object_count();
  std::vector<Mat> inclusions;
  std::vector<Index> dims;
  for (int i = 0; i < n; ++i) {
    Mat basis = kernel_basis(m.at_id(i));
    dims.push_back(basis.cols());
    inclusions.push_back(std::move(basis));
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : poset.hasse_edges()) {
    auto [face_id, simplex_id] = edge;
    // The source edge map carries kernel into kernel (naturality), so the
    // induced map is the unique solution of K_simplex * X = S_e * K_face.
    maps[edge] = solve_exact(inclusions[static_cast<std::size_t>(simplex_id)],
                             src.hasse_map_ids(face_id, simplex_id) *
                                 inclusions[static_cast<std::size_t>(face_id)]);
  }
  VeryGoodBundle kernel(VeryGoodFunctor(poset, Variance::covariant, std::move(dims), std::move(maps)));
  VeryGoodBundle source_bundle(src);
  BundleMorphism inclusion(kernel, source_bundle, std::move(inclusions));
  return {std::move(kernel), std::move(inclusion)};
}

CokernelResult cokernel_bundle(const BundleMorphism& m) {
  const VeryGoodFunctor& tgt = m.target();
  const CoverPoset& poset = tgt.poset();
  const int n = poset.object_count();
  std::vector<Mat> projections;
  std::vector<Index> dims;
  for (int i = 0; i < n; ++i) {
    auto [dim, proj] = cokernel_projection(m.at_id(i));
    dims.push_back(dim);
    projections.push_back(std::move(proj));
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : poset.hasse_edges()) {
    auto [face_id, simplex_id] = edge;
    // Induced map C_e with C_e * P_face = P_simplex * T_e; P_face's kernel is
    // exactly the image of the morphism, so the solution exists and is unique.
    Mat rhs = projections[static_cast<std::size_t>(simplex_id)] *
              tgt.hasse_map_ids(face_id, simplex_id);
    maps[edge] = solve_exact(projections[static_cast<std::size_t>(face_id)].transpose(),
                             rhs.transpose())
                     .transpose();
  }
  VeryGoodBundle cokernel(VeryGoodFunctor(poset, Variance::covariant, std::move(dims), std::move(maps)));
  VeryGoodBundle target_bundle(tgt);
  BundleMorphism projection(target_bundle, cokernel, std::move(projections));
  return {std::move(cokernel), std::move(projection)};
}

std::string RankProfile::summary() const {
  std::string s = "ranks:";
  for (Index r : rank_by_object) s += " " + std::to_string(r);
  s += constant_per_component ? " (constant per component)" : " (NOT constant per component)";
  return s;
}

RankProfile rank_profile(const BundleMorphism& m) {
  RankProfile profile;
  const CoverPoset& poset = m.source().poset();
  for (int i = 0; i < poset.object_count(); ++i)
    profile.rank_by_object.push_back(rank(m.at_id(i)));
  // Hasse edges connect exactly the objects in one component of the complex.
  for (const auto& [face_id, simplex_id] : poset.hasse_edges())
    if (profile.rank_by_object[static_cast<std::size_t>(face_id)] !=
        profile.rank_by_object[static_cast<std::size_t>(simplex_id)])
      profile.constant_per_component = false;
  return profile;
}

MonoEpiReport mono_epi_check(const BundleMorphism& m) {
  MonoEpiReport report;
  const int n = m.source().poset().object_count();
  report.mono = true;
  report.epi = true;
  for (int i = 0; i < n; ++i) {
    Index r = rank(m.at_id(i));
    if (r != m.source().dim_of_id(i)) report.mono = false;
    if (r != m.target().dim_of_id(i)) report.epi = false;
  }
  if (report.mono) {
    // Compare with the kernel of the cokernel: source -> ker(coker(m)).
    CokernelResult coker = cokernel_bundle(m);
    KernelResult ker_of_coker = kernel_bundle(coker.projection);
    report.mono_comparison_iso = true;
    std::vector<Mat> comparison;
    for (int i = 0; i < n; ++i)
      comparison.push_back(solve_exact(ker_of_coker.inclusion.at_id(i), m.at_id(i)));
    try {
      VeryGoodBundle source_bundle(m.source());
      BundleMorphism cmp(source_bundle, ker_of_coker.bundle, comparison);
      for (int i = 0; i < n; ++i)
        if (!is_invertible(cmp.at_id(i))) report.mono_comparison_iso = false;
    } catch (const NotNaturalError&) {
      report.mono_comparison_iso = false;
    }
  }
  if (report.epi) {
    // Compare with the cokernel of the kernel: coker(ker(m)) -> target.
    KernelResult ker = kernel_bundle(m);
    CokernelResult coker_of_ker = cokernel_bundle(ker.inclusion);
    report.epi_comparison_iso = true;
    std::vector<Mat> comparison;
    for (int i = 0; i < n; ++i)
      comparison.push_back(
          solve_exact(coker_of_ker.projection.at_id(i).transpose(), m.at_id(i).transpose())
              .transpose());
    try {
      VeryGoodBundle target_bundle(m.target());
      BundleMorphism cmp(coker_of_ker.bundle, target_bundle, comparison);
      for (int i = 0; i < n; ++i)
        if (!is_invertible(cmp.at_id(i))) report.epi_comparison_iso = false;
    } catch (const NotNaturalError&) {
      report.epi_comparison_iso = false;
    }
  }
  return report;
}

Mat bundle_monodromy(const VeryGoodBundle& f, const EdgePath& path) {
  const auto& complex = f.poset().complex();
  validate_edge_path(complex, path);
  Index d0 = f.dim_of({path.front()});
  Mat m = Mat::Identity(d0, d0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    int a = path[i], b = path[i + 1];
    Simplex edge{std::min(a, b), std::max(a, b)};
    const Mat& from_a = f.functor().hasse_map({a}, edge);
    const Mat& from_b = f.functor().hasse_map({b}, edge);
    m = (m * invert(from_a) * from_b).eval();
  }
  return m;
}

RankOneIso iso_check_rank_one(const VeryGoodBundle& a, const VeryGoodBundle& b) {
  if (!(a.poset() == b.poset()))
    throw PosetMismatchError("iso_check_rank_one: bundles live on different posets");
  const CoverPoset& poset = a.poset();
  const SimplicialComplex& complex = poset.complex();
  for (int i = 0; i < poset.object_count(); ++i)
    if (a.functor().dim_of_id(i) != 1 || b.functor().dim_of_id(i) != 1)
      throw NotRankOneError("iso_check_rank_one: bundles must have rank one everywhere");
  if (connected_components(complex).size() != 1)
    throw DisconnectedError("iso_check_rank_one: complex is not connected");

  RankOneIso result;
  int basepoint = complex.vertices().front();
  Pi1Presentation p = pi1_presentation(complex, basepoint);
  result.isomorphic = true;
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    EdgePath loop = p.generator_loop(static_cast<int>(i));
    Mat ma = bundle_monodromy(a, loop);
    Mat mb = bundle_monodromy(b, loop);
    if (!exact_equal(ma, mb)) result.isomorphic = false;
    result.generator_monodromies.emplace_back(std::move(ma), std::move(mb));
  }
  if (!result.isomorphic) return result;

  // Spread a scalar witness over the Hasse graph from the basepoint object;
  // agreement of all generator monodromies makes the spread consistent.
  const int n = poset.object_count();
  std::vector<std::vector<std::pair<int, bool>>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [face_id, simplex_id] : poset.hasse_edges()) {
    adjacency[static_cast<std::size_t>(face_id)].emplace_back(simplex_id, true);
    adjacency[static_cast<std::size_t>(simplex_id)].emplace_back(face_id, false);
  }
  std::vector<Mat> components(static_cast<std::size_t>(n));
  std::vector<bool> known(static_cast<std::size_t>(n), false);
  int root = complex.index_of({basepoint});
  components[static_cast<std::size_t>(root)] = Mat::Identity(1, 1);
  known[static_cast<std::size_t>(root)] = true;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    for (auto [next, upward] : adjacency[static_cast<std::size_t>(at)]) {
      if (known[static_cast<std::size_t>(next)]) continue;
      // Naturality across the edge: c_simplex * A_e = B_e * c_face.
      Mat ae = upward ? a.functor().hasse_map_ids(at, next) : a.functor().hasse_map_ids(next, at);
      Mat be = upward ? b.functor().hasse_map_ids(at, next) : b.functor().hasse_map_ids(next, at);
      const Mat& c = components[static_cast<std::size_t>(at)];
      components[static_cast<std::size_t>(next)] =
          upward ? Mat(be * c * invert(ae)) : Mat(invert(be) * c * ae);
      known[static_cast<std::size_t>(next)] = true;
      queue.push_back(next);
    }
  }
  // The witness must be natural; agreement on the generators guarantees it,
  // and constructing the morphism re-checks every square.
  BundleMorphism witness(a, b, components);
  (void)witness;
  result.components = std::move(components);
  return result;
}

VeryGoodBundle mobius_fixture(const Rational& scale) {
  if (scale.is_zero()) throw ZeroScaleError("mobius_fixture: scale must be nonzero");
  CoverPoset poset(circle3());
  VeryGoodFunctor line = identity_line_functor(poset);
  const SimplicialComplex& complex = poset.complex();
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : poset.hasse_edges())
    maps[edge] = line.hasse_map_ids(edge.first, edge.second);
  Mat twist(1, 1);
  twist(0, 0) = scale;
  maps[{complex.index_of({0}), complex.index_of({0, 2})}] = std::move(twist);
  return VeryGoodBundle(
      VeryGoodFunctor(poset, Variance::covariant, line.dims(), std::move(maps)));
}

}  // namespace vgf
