#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "vgf/cover.hpp"
#include "vgf/errors.hpp"
#include "vgf/fixtures.hpp"
#include "vgf/functor.hpp"
#include "vgf/linalg.hpp"

using namespace vgf;

namespace {

Mat scalar(long v) {
  Mat m(1, 1);
  m(0, 0) = Rational(v);
  return m;
}

/* One-dimensional functor with every edge map [[1]] except the overrides,
   which are keyed by (face, simplex) and replace the scalar. */
VeryGoodFunctor line_functor(const SimplicialComplex& k, Variance variance,
                             const std::map<std::pair<Simplex, Simplex>, long>& overrides = {}) {
  CoverPoset p = cover_poset(k);
  std::vector<Index> dims(static_cast<std::size_t>(p.object_count()), 1);
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : p.hasse_edges()) maps[edge] = scalar(1);
  for (const auto& [key, value] : overrides)
    maps[{k.index_of(key.first), k.index_of(key.second)}] = scalar(value);
  return VeryGoodFunctor(p, variance, dims, std::move(maps));
}

VeryGoodFunctor constant_functor(const SimplicialComplex& k, Variance variance, Index dim) {
  CoverPoset p = cover_poset(k);
  std::vector<Index> dims(static_cast<std::size_t>(p.object_count()), dim);
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : p.hasse_edges()) maps[edge] = Mat::Identity(dim, dim);
  return VeryGoodFunctor(p, variance, dims, std::move(maps));
}

/* Twisted line on the circle: holonomy -1 concentrated on one edge map. */
VeryGoodFunctor twisted_circle_line() {
  return line_functor(fixtures::circle3(), Variance::contravariant, {{{{0}, {0, 2}}, -1}});
}

SimplicialComplex solid_triangle() { return close_under_faces({{0, 1, 2}}, 3); }

}  // namespace

TEST_SUITE("functor") {
  TEST_CASE("constructor validates dimensions and matrices") {
    CoverPoset p = cover_poset(fixtures::circle3());
    std::vector<Index> dims(6, 1);
    std::map<std::pair<int, int>, Mat> maps;
    for (const auto& edge : p.hasse_edges()) maps[edge] = scalar(1);

    CHECK_NOTHROW(VeryGoodFunctor(p, Variance::contravariant, dims, maps));

    // One dimension per object, none negative.
    CHECK_THROWS_AS(VeryGoodFunctor(p, Variance::contravariant, {1, 1, 1}, maps),
                    SizeMismatchError);
    CHECK_THROWS_AS(VeryGoodFunctor(p, Variance::contravariant, {1, 1, 1, 1, 1, -1}, maps),
                    SizeMismatchError);

    // One matrix per Hasse edge, keyed by objects that exist.
    auto missing = maps;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(VeryGoodFunctor(p, Variance::contravariant, dims, missing),
                    SizeMismatchError);

    auto mislabeled = maps;
    mislabeled.erase(mislabeled.begin());
    mislabeled[{0, 5}] = scalar(1);  // {0} is not a face of {1,2}
    CHECK_THROWS_AS(VeryGoodFunctor(p, Variance::contravariant, dims, mislabeled),
                    SizeMismatchError);

    auto out_of_range = maps;
    out_of_range.erase(out_of_range.begin());
    out_of_range[{0, 99}] = scalar(1);
    CHECK_THROWS_AS(VeryGoodFunctor(p, Variance::contravariant, dims, out_of_range),
                    UnknownSimplexError);

    // Shapes follow the variance: contra wants face x simplex, co the reverse.
    std::vector<Index> mixed = {2, 1, 1, 1, 1, 1};  // dim 2 at {0}
    CHECK_THROWS_AS(VeryGoodFunctor(p, Variance::contravariant, mixed, maps),
                    SizeMismatchError);
  }

  TEST_CASE("stored maps are retrievable and gated to Hasse edges") {
    VeryGoodFunctor f = twisted_circle_line();
    CHECK(exact_equal(f.hasse_map({0}, {0, 2}), scalar(-1)));
    CHECK(exact_equal(f.hasse_map({0}, {0, 1}), scalar(1)));
    CHECK(f.dim_of({1, 2}) == 1);
    CHECK_THROWS_AS(f.hasse_map({0}, {1, 2}), NotAFaceError);
    CHECK_THROWS_AS(f.hasse_map({3}, {0, 1}), UnknownSimplexError);
  }

  TEST_CASE("very-good check accepts the twisted line") {
    FunctorCheck report = check_very_good(twisted_circle_line());
    CHECK(report.passed());
    CHECK(report.summary() == "very good");
  }

  TEST_CASE("very-good check reports singular edge maps") {
    VeryGoodFunctor f =
        line_functor(fixtures::circle3(), Variance::contravariant, {{{{1}, {1, 2}}, 0}});
    FunctorCheck report = check_very_good(f);
    CHECK_FALSE(report.passed());
    REQUIRE(report.non_invertible.size() == 1);
    CHECK(report.non_invertible[0].face == Simplex{1});
    CHECK(report.non_invertible[0].simplex == Simplex{1, 2});
    // No triangles, so no squares to break.
    CHECK(report.incoherent.empty());
  }

  TEST_CASE("very-good check reports incoherent squares") {
    VeryGoodFunctor f =
        line_functor(solid_triangle(), Variance::contravariant, {{{{0}, {0, 1}}, 2}});
    FunctorCheck report = check_very_good(f);
    CHECK(report.non_invertible.empty());
    REQUIRE(report.incoherent.size() == 1);
    CHECK(report.incoherent[0].bottom == Simplex{0});
    CHECK(report.incoherent[0].top == Simplex{0, 1, 2});
    CHECK(report.incoherent[0].via_first == Simplex{0, 1});
    CHECK(report.incoherent[0].via_second == Simplex{0, 2});
  }

  TEST_CASE("inclusion matrices compose along ascending chains") {
    VeryGoodFunctor f = line_functor(
        solid_triangle(), Variance::contravariant,
        {{{{0}, {0, 1}}, 2}, {{{0, 1}, {0, 1, 2}}, 3}});

    CHECK(exact_equal(evaluate_inclusion(f, {0}, {0, 1, 2}), scalar(6)));
    CHECK(exact_equal(evaluate_inclusion(f, {1}, {0, 1, 2}), scalar(1)));
    CHECK(exact_equal(evaluate_inclusion(f, {0, 1}, {0, 1}), Mat::Identity(1, 1)));
    CHECK_THROWS_AS(evaluate_inclusion(f, {1}, {0, 2}), NotAFaceError);
    CHECK_THROWS_AS(evaluate_inclusion(f, {3}, {0, 1}), UnknownSimplexError);

    // The covariant composite multiplies in the opposite order.
    VeryGoodFunctor g = dualize(f);
    CHECK(g.variance() == Variance::covariant);
    CHECK(exact_equal(evaluate_inclusion(g, {0}, {0, 1, 2}), scalar(6)));
  }

  TEST_CASE("dualize transposes, flips variance, and is an involution") {
    CoverPoset p = cover_poset(fixtures::circle3());
    std::vector<Index> dims = {2, 1, 1, 1, 2, 1};
    std::map<std::pair<int, int>, Mat> maps;
    for (const auto& [face_id, simplex_id] : p.hasse_edges()) {
      Mat m(dims[static_cast<std::size_t>(face_id)], dims[static_cast<std::size_t>(simplex_id)]);
      for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
          m(r, c) = Rational(face_id + 2 * simplex_id + 3 * r + 5 * c);
      maps[{face_id, simplex_id}] = m;
    }
    VeryGoodFunctor f(p, Variance::contravariant, dims, maps);

    VeryGoodFunctor d = dualize(f);
    CHECK(d.variance() == Variance::covariant);
    CHECK(d.dims() == f.dims());
    CHECK(exact_equal(d.hasse_map({0}, {0, 1}), f.hasse_map({0}, {0, 1}).transpose()));
    CHECK(dualize(d) == f);
  }

  TEST_CASE("gauge twist conjugates by units and stays very good") {
    VeryGoodFunctor f = constant_functor(fixtures::circle3(), Variance::contravariant, 2);
    std::vector<Mat> units;
    for (int i = 0; i < 6; ++i) {
      Mat u(2, 2);
      u << Rational(1), Rational(i), Rational(0), Rational(1);
      units.push_back(u);
    }
    VeryGoodFunctor twisted = gauge_twist(f, units);

    CHECK(check_very_good(twisted).passed());
    // The units are a natural isomorphism from the original to the twist.
    NaturalTransformation eta(f, twisted, units);
    CHECK(check_naturality(eta).passed());
    // Twisting by inverses undoes the twist.
    std::vector<Mat> inverses;
    for (const Mat& u : units) inverses.push_back(invert(u));
    CHECK(gauge_twist(twisted, inverses) == f);
  }

  TEST_CASE("gauge twist validates its units") {
    VeryGoodFunctor f = twisted_circle_line();
    std::vector<Mat> too_few(5, scalar(1));
    CHECK_THROWS_AS(gauge_twist(f, too_few), SizeMismatchError);

    std::vector<Mat> wrong_shape(6, Mat::Identity(2, 2));
    CHECK_THROWS_AS(gauge_twist(f, wrong_shape), SizeMismatchError);

    std::vector<Mat> singular(6, scalar(0));
    CHECK_THROWS_AS(gauge_twist(f, singular), SingularError);
  }

  TEST_CASE("limit of a constant diagram is one copy per component") {
    VeryGoodFunctor f = constant_functor(fixtures::circle3(), Variance::contravariant, 2);
    Limit limit = finite_limit(f);
    CHECK(limit.dim == 2);
    REQUIRE(limit.projections.size() == 6);
    for (const Mat& proj : limit.projections) {
      CHECK(proj.rows() == 2);
      CHECK(proj.cols() == 2);
      CHECK(is_invertible(proj));
      CHECK(exact_equal(proj, limit.projections[0]));
    }

    // Two components double the constant limit.
    SimplicialComplex two = close_under_faces({{0, 1}, {1, 2}, {0, 2}, {3, 4}}, 5);
    CHECK(finite_limit(constant_functor(two, Variance::covariant, 1)).dim == 2);
  }

  TEST_CASE("limit of the twisted line vanishes") {
    Limit limit = finite_limit(twisted_circle_line());
    CHECK(limit.dim == 0);
    for (const Mat& proj : limit.projections) {
      CHECK(proj.rows() == 1);
      CHECK(proj.cols() == 0);
    }
  }

  TEST_CASE("limit projections satisfy the diagram's equations") {
    VeryGoodFunctor f = line_functor(
        solid_triangle(), Variance::contravariant,
        {{{{0}, {0, 1}}, 2}, {{{1}, {0, 1}}, 3}, {{{0}, {0, 2}}, 2}, {{{2}, {0, 2}}, 5},
         {{{1}, {1, 2}}, 3}, {{{2}, {1, 2}}, 5}, {{{0, 1}, {0, 1, 2}}, 1},
         {{{0, 2}, {0, 1, 2}}, 1}, {{{1, 2}, {0, 1, 2}}, 1}});
    REQUIRE(check_very_good(f).passed());
    Limit limit = finite_limit(f);
    CHECK(limit.dim == 1);
    const CoverPoset& p = f.poset();
    for (const auto& [face_id, simplex_id] : p.hasse_edges()) {
      Mat lhs = limit.projections[static_cast<std::size_t>(face_id)];
      Mat rhs = f.hasse_map_ids(face_id, simplex_id) *
                limit.projections[static_cast<std::size_t>(simplex_id)];
      CHECK(exact_equal(lhs, rhs));
    }
  }

  TEST_CASE("natural transformations validate shape and poset") {
    VeryGoodFunctor f = constant_functor(fixtures::circle3(), Variance::contravariant, 1);
    VeryGoodFunctor g = constant_functor(fixtures::circle3(), Variance::contravariant, 2);
    VeryGoodFunctor h = constant_functor(fixtures::tetrahedron_boundary(),
                                         Variance::contravariant, 1);

    std::vector<Mat> ok(6, Mat::Zero(2, 1));
    CHECK_NOTHROW(NaturalTransformation(f, g, ok));

    CHECK_THROWS_AS(NaturalTransformation(f, h, ok), PosetMismatchError);
    CHECK_THROWS_AS(NaturalTransformation(f, dualize(g), ok), PosetMismatchError);
    CHECK_THROWS_AS(NaturalTransformation(f, g, std::vector<Mat>(5, Mat::Zero(2, 1))),
                    SizeMismatchError);
    CHECK_THROWS_AS(NaturalTransformation(f, g, std::vector<Mat>(6, Mat::Zero(1, 2))),
                    SizeMismatchError);
  }

  TEST_CASE("naturality check pinpoints the failing square") {
    VeryGoodFunctor f = constant_functor(fixtures::circle3(), Variance::contravariant, 1);
    // Components scale by 1 everywhere except at {2}: the squares through the
    // object {2} are the ones that break.
    std::vector<Mat> components(6, scalar(1));
    components[2] = scalar(7);
    NaturalTransformation eta(f, f, components);
    NaturalityCheck report = check_naturality(eta);
    CHECK_FALSE(report.passed());
    REQUIRE(report.failures.size() == 2);
    CHECK(report.failures[0].face == Simplex{2});
    CHECK(report.failures[0].simplex == Simplex{0, 2});
    CHECK(report.failures[1].face == Simplex{2});
    CHECK(report.failures[1].simplex == Simplex{1, 2});

    CHECK(check_naturality(NaturalTransformation(f, f, std::vector<Mat>(6, scalar(1))))
              .passed());
  }

  TEST_CASE("zigzag composites pick up holonomy around the circle") {
    VeryGoodFunctor f = twisted_circle_line();

    Zigzag loop = zigzag_of_path({0, 1, 2, 0});
    CHECK(exact_equal(compose_zigzag(f, loop), scalar(-1)));

    Zigzag reverse = zigzag_of_path({0, 2, 1, 0});
    CHECK(exact_equal(compose_zigzag(f, reverse), scalar(-1)));

    // Out and back cancels exactly.
    CHECK(exact_equal(compose_zigzag(f, zigzag_of_path({0, 1, 0})), scalar(1)));

    // Identity hops and single objects contribute identities.
    Zigzag stay;
    stay.objects = {{0}, {0}, {0, 1}, {0, 1}};
    CHECK(exact_equal(compose_zigzag(f, stay), scalar(1)));
    Zigzag point;
    point.objects = {{1}};
    CHECK(exact_equal(compose_zigzag(f, point), Mat::Identity(1, 1)));
  }

  TEST_CASE("zigzag composites reject broken input") {
    VeryGoodFunctor f = twisted_circle_line();

    CHECK_THROWS_AS(compose_zigzag(f, Zigzag{}), IncompatibleZigzagError);

    Zigzag unknown;
    unknown.objects = {{0}, {0, 3}};
    CHECK_THROWS_AS(compose_zigzag(f, unknown), IncompatibleZigzagError);

    Zigzag incomparable;
    incomparable.objects = {{0, 1}, {0, 2}};
    CHECK_THROWS_AS(compose_zigzag(f, incomparable), IncompatibleZigzagError);

    // A hop that needs an inverse of a singular map is diagnosed as such.
    // The stored map points simplex -> face, so the hop into the face uses it
    // directly and the hop out of the face needs the inverse.
    VeryGoodFunctor broken =
        line_functor(fixtures::circle3(), Variance::contravariant, {{{{0}, {0, 1}}, 0}});
    Zigzag into_face;
    into_face.objects = {{0}, {0, 1}};
    CHECK(exact_equal(compose_zigzag(broken, into_face), scalar(0)));
    Zigzag out_of_face;
    out_of_face.objects = {{0, 1}, {0}};
    CHECK_THROWS_AS(compose_zigzag(broken, out_of_face), NotVeryGoodError);
  }
}
