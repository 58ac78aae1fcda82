#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vgf/bundle.hpp"
#include "vgf/equivalence.hpp"
#include "vgf/fixtures.hpp"

/* Deterministic generators shared by the unit and acceptance suites.  Every
   random object is drawn from a caller-seeded engine, so failures replay. */
namespace vgf::test {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(Rng& rng) {
  while (true) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

inline Mat random_matrix(Rng& rng, Index rows, Index cols) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  return m;
}

/* Unit lower * diagonal of units * unit upper: invertible by construction,
   entries stay small. */
inline Mat random_invertible(Rng& rng, Index n) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> pick(0, 3);
  static const Rational units[4] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-2)};
  Mat lower = Mat::Identity(n, n), upper = Mat::Identity(n, n), diag = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    diag(i, i) = units[pick(rng)];
    for (Index j = 0; j < i; ++j) lower(i, j) = Rational(small(rng));
    for (Index j = i + 1; j < n; ++j) upper(i, j) = Rational(small(rng));
  }
  return lower * diag * upper;
}

enum class Fixture { circle, tetra, torus, projective };

inline SimplicialComplex fixture_complex(Fixture f) {
  switch (f) {
    case Fixture::circle: return circle3();
    case Fixture::tetra: return tetrahedron_boundary();
    case Fixture::torus: return torus7();
    default: return projective_plane6();
  }
}

inline const char* fixture_name(Fixture f) {
  switch (f) {
    case Fixture::circle: return "circle3";
    case Fixture::tetra: return "tetra";
    case Fixture::torus: return "torus7";
    default: return "rp2-6";
  }
}

inline std::vector<Fixture> all_fixtures() {
  return {Fixture::circle, Fixture::tetra, Fixture::torus, Fixture::projective};
}

/* Signed generator-exponent totals of each relation word. */
inline Mat abelianized_relations(const Pi1Presentation& p) {
  Mat r = Mat::Zero(static_cast<Index>(p.relations().size()),
                    static_cast<Index>(p.generators().size()));
  for (std::size_t i = 0; i < p.relations().size(); ++i)
    for (int letter : p.relations()[i])
      r(static_cast<Index>(i), std::abs(letter) - 1) += letter > 0 ? Rational(1) : Rational(-1);
  return r;
}

/* Integer exponent columns spanning the rational kernel of the abelianized
   relation matrix.  Any assignment g_i -> A^{x_i} with commuting values of A
   then satisfies every relation. */
inline std::vector<std::vector<long>> integer_relation_kernel(const Pi1Presentation& p) {
  Mat basis = kernel_basis(abelianized_relations(p));
  std::vector<std::vector<long>> columns;
  for (Index c = 0; c < basis.cols(); ++c) {
    Int lcm = 1;
    for (Index i = 0; i < basis.rows(); ++i) {
      const Rational& v = basis(i, c);
      lcm = lcm / boost::multiprecision::gcd(lcm, v.den()) * v.den();
    }
    std::vector<long> col;
    for (Index i = 0; i < basis.rows(); ++i) {
      Int cleared = basis(i, c).num() * (lcm / basis(i, c).den());
      col.push_back(static_cast<long>(cleared));
    }
    columns.push_back(std::move(col));
  }
  return columns;
}

/* The unique nonzero mod-2 solution of the abelianized relations; exists for
   the projective-plane fixture, where it cuts out the order-2 holonomy. */
inline std::vector<int> mod2_relation_solution(const Pi1Presentation& p) {
  std::size_t n = p.generators().size();
  Mat r = abelianized_relations(p);
  std::vector<std::vector<int>> solutions;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Index row = 0; row < r.rows() && ok; ++row) {
      long sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) sum += static_cast<long>(r(row, static_cast<Index>(j)).num());
      ok = sum % 2 == 0;
    }
    if (ok) {
      std::vector<int> x(n, 0);
      for (std::size_t j = 0; j < n; ++j) x[j] = (mask >> j) & 1;
      solutions.push_back(std::move(x));
    }
  }
  if (solutions.size() != 1)
    throw Error("expected exactly one nonzero mod-2 relation solution, found " +
                std::to_string(solutions.size()));
  return solutions.front();
}

/* A valid random representation for each fixture:
     circle3        free on one generator, any invertible matrix
     tetra          trivial group, so the identity is the only choice
     torus7         g_i -> A^{x_i} B^{y_i} for a commuting diagonal pair and
                    (x, y) spanning the integer relation kernel
     rp2-6          g_i -> S^{x_i} for an involution S and the nonzero mod-2
                    relation solution x */
inline Representation random_representation(Rng& rng, Fixture fx, const Pi1Presentation& p,
                                            Index dim) {
  Representation rho;
  rho.dim = dim;
  rho.basepoint = p.basepoint();
  switch (fx) {
    case Fixture::circle: {
      for (std::size_t i = 0; i < p.generators().size(); ++i)
        rho.generator_matrices.push_back(random_invertible(rng, dim));
      break;
    }
    case Fixture::tetra: {
      for (std::size_t i = 0; i < p.generators().size(); ++i)
        rho.generator_matrices.push_back(Mat::Identity(dim, dim));
      break;
    }
    case Fixture::torus: {
      auto kernel = integer_relation_kernel(p);
      if (kernel.size() != 2) throw Error("torus fixture: expected a rank-2 relation kernel");
      Mat a = Mat::Zero(dim, dim), b = Mat::Zero(dim, dim);
      for (Index i = 0; i < dim; ++i) {
        a(i, i) = random_nonzero(rng);
        b(i, i) = random_nonzero(rng);
      }
      for (std::size_t i = 0; i < p.generators().size(); ++i)
        rho.generator_matrices.push_back(matrix_power(a, kernel[0][i]) *
                                         matrix_power(b, kernel[1][i]));
      break;
    }
    case Fixture::projective: {
      auto x = mod2_relation_solution(p);
      Mat d = Mat::Identity(dim, dim);
      d(0, 0) = Rational(-1);  // a genuine involution, never the identity
      std::uniform_int_distribution<int> coin(0, 1);
      for (Index i = 1; i < dim; ++i)
        if (coin(rng)) d(i, i) = Rational(-1);
      Mat q = random_invertible(rng, dim);
      Mat s = q * d * invert(q);
      for (std::size_t i = 0; i < p.generators().size(); ++i)
        rho.generator_matrices.push_back(x[i] ? s : Mat(Mat::Identity(dim, dim)));
      break;
    }
  }
  return rho;
}

inline std::vector<Mat> random_gauge_units(Rng& rng, const VeryGoodFunctor& f) {
  std::vector<Mat> units;
  for (int i = 0; i < f.poset().object_count(); ++i)
    units.push_back(random_invertible(rng, f.dim_of_id(i)));
  return units;
}

/* The general very good functor of the tests: a canonical extension moved off
   its canonical gauge. */
inline VeryGoodFunctor random_very_good(Rng& rng, Fixture fx, const Pi1Presentation& p,
                                        Index dim) {
  VeryGoodFunctor canonical = phi(lambda_rep(p, random_representation(rng, fx, p, dim)));
  return gauge_twist(canonical, random_gauge_units(rng, canonical));
}

inline int random_vertex(Rng& rng, const SimplicialComplex& k) {
  auto vs = k.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  return vs[pick(rng)];
}

inline EdgePath random_walk(Rng& rng, const SimplicialComplex& k, int start, int steps) {
  EdgePath path{start};
  for (int i = 0; i < steps; ++i) {
    auto next = k.neighbors(path.back());
    if (next.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
    path.push_back(next[pick(rng)]);
  }
  return path;
}

/* Loop at w: a random walk closed up along the maximal tree. */
inline EdgePath random_loop(Rng& rng, const Pi1Presentation& p, int steps) {
  EdgePath walk = random_walk(rng, p.complex(), p.basepoint(), steps);
  return concatenate(walk, tree_path(p.tree(), walk.back(), p.basepoint()));
}

/* One random homotopy move in place: backtrack insertion or removal, or a
   2-simplex exchange (a,b,c) <-> (a,c).  Returns false when the drawn move
   has no legal site. */
inline bool random_path_move(Rng& rng, const SimplicialComplex& k, EdgePath& path) {
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: {  // insert a backtrack (u, back) anywhere
      std::uniform_int_distribution<std::size_t> at(0, path.size() - 1);
      std::size_t i = at(rng);
      auto nbrs = k.neighbors(path[i]);
      if (nbrs.empty()) return false;
      std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
      int u = nbrs[pick(rng)];
      path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, {u, path[i]});
      return true;
    }
    case 1: {  // remove a backtrack
      for (std::size_t i = 0; i + 2 < path.size(); ++i)
        if (path[i] == path[i + 2]) {
          path.erase(path.begin() + static_cast<std::ptrdiff_t>(i),
                     path.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          return true;
        }
      return false;
    }
    case 2: {  // contract (a,b,c) across a 2-simplex
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        Simplex t{path[i], path[i + 1], path[i + 2]};
        std::sort(t.begin(), t.end());
        if (t[0] != t[1] && t[1] != t[2] && k.contains(t)) {
          path.erase(path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          return true;
        }
      }
      return false;
    }
    default: {  // expand a step (a,c) to (a,b,c) across a 2-simplex
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int a = path[i], c = path[i + 1];
        if (a == c) continue;
        for (int b : k.vertices()) {
          if (b == a || b == c) continue;
          Simplex t{a, b, c};
          std::sort(t.begin(), t.end());
          if (k.contains(t)) {
            path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, b);
            return true;
          }
        }
      }
      return false;
    }
  }
}

/* Source and target representations sharing r matched diagonal slots, plus an
   intertwiner of rank exactly r between them. */
struct IntertwinerScheme {
  Representation source, target;
  Mat t;  // target dim x source dim
};

inline IntertwinerScheme random_intertwiner(Rng& rng, Fixture fx, const Pi1Presentation& p,
                                            Index rank, Index source_extra, Index target_extra) {
  Index m = rank + source_extra, n = rank + target_extra;
  IntertwinerScheme scheme;
  scheme.source.dim = m;
  scheme.source.basepoint = p.basepoint();
  scheme.target.dim = n;
  scheme.target.basepoint = p.basepoint();
  std::size_t gens = p.generators().size();

  if (fx == Fixture::tetra) {
    // Identities intertwine with anything; force the rank with unit factors.
    for (std::size_t i = 0; i < gens; ++i) {
      scheme.source.generator_matrices.push_back(Mat::Identity(m, m));
      scheme.target.generator_matrices.push_back(Mat::Identity(n, n));
    }
    Mat core = Mat::Zero(n, m);
    for (Index i = 0; i < rank; ++i) core(i, i) = Rational(1);
    scheme.t = random_invertible(rng, n) * core * random_invertible(rng, m);
    return scheme;
  }

  // Diagonal representations: slot j of the source matches slot j of the
  // target for j < rank, so the diagonal rank-r intertwiner commutes with
  // every generator.
  std::vector<std::vector<long>> torus_kernel;
  std::vector<int> projective_x;
  if (fx == Fixture::torus) {
    torus_kernel = integer_relation_kernel(p);
    if (torus_kernel.size() != 2) throw Error("torus fixture: expected a rank-2 relation kernel");
  } else if (fx == Fixture::projective) {
    projective_x = mod2_relation_solution(p);
  }
  auto slot_values = [&](Index count) {
    // per slot, the diagonal entry of every generator matrix
    std::vector<std::vector<Rational>> slots;
    for (Index s = 0; s < count; ++s) {
      std::vector<Rational> per_gen;
      if (fx == Fixture::circle) {
        for (std::size_t i = 0; i < gens; ++i) per_gen.push_back(random_nonzero(rng));
      } else if (fx == Fixture::torus) {
        Mat a(1, 1), b(1, 1);
        a(0, 0) = random_nonzero(rng);
        b(0, 0) = random_nonzero(rng);
        for (std::size_t i = 0; i < gens; ++i)
          per_gen.push_back(
              (matrix_power(a, torus_kernel[0][i]) * matrix_power(b, torus_kernel[1][i]))(0, 0));
      } else {  // projective
        std::uniform_int_distribution<int> coin(0, 1);
        Rational sign = coin(rng) ? Rational(-1) : Rational(1);
        for (std::size_t i = 0; i < gens; ++i)
          per_gen.push_back(projective_x[i] ? sign : Rational(1));
      }
      slots.push_back(std::move(per_gen));
    }
    return slots;
  };

  auto shared_slots = slot_values(rank);
  auto source_slots = shared_slots;
  auto extra_source = slot_values(source_extra);
  source_slots.insert(source_slots.end(), extra_source.begin(), extra_source.end());
  auto target_slots = shared_slots;
  auto extra_target = slot_values(target_extra);
  target_slots.insert(target_slots.end(), extra_target.begin(), extra_target.end());

  for (std::size_t i = 0; i < gens; ++i) {
    Mat a = Mat::Zero(m, m), b = Mat::Zero(n, n);
    for (Index s = 0; s < m; ++s) a(s, s) = source_slots[static_cast<std::size_t>(s)][i];
    for (Index s = 0; s < n; ++s) b(s, s) = target_slots[static_cast<std::size_t>(s)][i];
    scheme.source.generator_matrices.push_back(std::move(a));
    scheme.target.generator_matrices.push_back(std::move(b));
  }
  scheme.t = Mat::Zero(n, m);
  for (Index i = 0; i < rank; ++i) scheme.t(i, i) = random_nonzero(rng);
  return scheme;
}

/* A random morphism of covariant bundles with rank exactly `rank` at every
   object: duals of canonical extensions, moved off gauge on both sides. */
struct BundleMorphismScheme {
  VeryGoodBundle source, target;
  std::vector<Mat> components;
  Index rank, source_dim, target_dim;
};

inline BundleMorphismScheme random_bundle_morphism(Rng& rng, Fixture fx,
                                                   const Pi1Presentation& p, Index rank,
                                                   Index source_extra, Index target_extra) {
  IntertwinerScheme scheme = random_intertwiner(rng, fx, p, rank, source_extra, target_extra);
  // Contravariant: eta: phi(source rep) -> phi(target rep), constant T.
  // Dualizing transposes and swaps the endpoints.
  VeryGoodFunctor co_source = dualize(phi(lambda_rep(p, scheme.target)));
  VeryGoodFunctor co_target = dualize(phi(lambda_rep(p, scheme.source)));
  std::vector<Mat> units_source = random_gauge_units(rng, co_source);
  std::vector<Mat> units_target = random_gauge_units(rng, co_target);
  BundleMorphismScheme out{VeryGoodBundle(gauge_twist(co_source, units_source)),
                           VeryGoodBundle(gauge_twist(co_target, units_target)),
                           {},
                           rank,
                           scheme.target.dim,
                           scheme.source.dim};
  Mat transposed = scheme.t.transpose();
  for (int i = 0; i < co_source.poset().object_count(); ++i)
    out.components.push_back(units_target[static_cast<std::size_t>(i)] * transposed *
                             invert(units_source[static_cast<std::size_t>(i)]));
  return out;
}

/* Scratch directory that cleans up after itself. */
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           (tag + "-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace vgf::test
