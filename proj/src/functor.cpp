#include "vgf/functor.hpp"

#include <algorithm>

#include "vgf/errors.hpp"

namespace vgf {

namespace {

std::pair<Index, Index> expected_shape(Variance variance, Index face_dim, Index simplex_dim) {
  if (variance == Variance::contravariant) return {face_dim, simplex_dim};
  return {simplex_dim, face_dim};
}

}  // namespace

VeryGoodFunctor::VeryGoodFunctor(CoverPoset poset, Variance variance,
                                 std::vector<Index> dims_by_object,
                                 std::map<std::pair<int, int>, Mat> hasse_maps)
    : poset_(std::move(poset)),
      variance_(variance),
      dims_(std::move(dims_by_object)),
      maps_(std::move(hasse_maps)) {
  const auto& complex = poset_.complex();
  if (static_cast<int>(dims_.size()) != complex.simplex_count())
    throw SizeMismatchError("functor: need one dimension per object");
  for (Index d : dims_)
    if (d < 0) throw SizeMismatchError("functor: negative dimension");
  if (maps_.size() != poset_.hasse_edges().size())
    throw SizeMismatchError("functor: need one matrix per Hasse edge");
  for (const auto& [edge, m] : maps_) {
    auto [face_id, simplex_id] = edge;
    if (face_id < 0 || face_id >= complex.simplex_count() || simplex_id < 0 ||
        simplex_id >= complex.simplex_count())
      throw UnknownSimplexError("functor: matrix keyed by unknown object");
    auto [rows, cols] = expected_shape(variance_, dim_of_id(face_id), dim_of_id(simplex_id));
    if (m.rows() != rows || m.cols() != cols)
      throw SizeMismatchError("functor: matrix for {" +
                              simplex_key(complex.simplex_at(face_id)) + "} < {" +
                              simplex_key(complex.simplex_at(simplex_id)) + "} must be " +
                              std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& edge : poset_.hasse_edges())
    if (!maps_.count(edge))
      throw SizeMismatchError("functor: missing matrix for Hasse edge {" +
                              simplex_key(complex.simplex_at(edge.first)) + "} < {" +
                              simplex_key(complex.simplex_at(edge.second)) + "}");
}

const Mat& VeryGoodFunctor::hasse_map_ids(int face_id, int simplex_id) const {
  auto it = maps_.find({face_id, simplex_id});
  if (it == maps_.end())
    throw NotAFaceError("no Hasse edge {" + simplex_key(poset_.complex().simplex_at(face_id)) +
                        "} < {" + simplex_key(poset_.complex().simplex_at(simplex_id)) + "}");
  return it->second;
}

const Mat& VeryGoodFunctor::hasse_map(const Simplex& face, const Simplex& simplex) const {
  return hasse_map_ids(poset_.complex().index_of(face), poset_.complex().index_of(simplex));
}

bool operator==(const VeryGoodFunctor& a, const VeryGoodFunctor& b) {
  if (!(a.poset_ == b.poset_) || a.variance_ != b.variance_ || a.dims_ != b.dims_) return false;
  for (const auto& [edge, m] : a.maps_)
    if (!exact_equal(m, b.maps_.at(edge))) return false;
  return true;
}

std::string FunctorCheck::summary() const {
  if (passed()) return "very good";
  std::string s;
  for (const auto& f : non_invertible)
    s += "non-invertible map {" + simplex_key(f.face) + "} < {" + simplex_key(f.simplex) + "}\n";
  for (const auto& f : incoherent)
    s += "incoherent square {" + simplex_key(f.bottom) + "} < {" + simplex_key(f.top) +
         "} via {" + simplex_key(f.via_first) + "} and {" + simplex_key(f.via_second) + "}\n";
  return s;
}

FunctorCheck check_very_good(const VeryGoodFunctor& f) {
  FunctorCheck report;
  const auto& complex = f.poset().complex();
  for (const auto& [face_id, simplex_id] : f.poset().hasse_edges()) {
    if (!is_invertible(f.hasse_map_ids(face_id, simplex_id)))
      report.non_invertible.push_back(
          {complex.simplex_at(face_id), complex.simplex_at(simplex_id)});
  }
  // Codimension-2 squares: for top t and bottom b = t minus two vertices, the
  // two intermediate facets give two composites that must agree.
  for (int top_id = 0; top_id < complex.simplex_count(); ++top_id) {
    const Simplex& top = complex.simplex_at(top_id);
    if (top.size() < 3) continue;
    for (std::size_t i = 0; i < top.size(); ++i) {
      for (std::size_t j = i + 1; j < top.size(); ++j) {
        Simplex bottom;
        for (std::size_t k = 0; k < top.size(); ++k)
          if (k != i && k != j) bottom.push_back(top[k]);
        Simplex via_first = bottom, via_second = bottom;
        via_first.insert(std::lower_bound(via_first.begin(), via_first.end(), top[i]), top[i]);
        via_second.insert(std::lower_bound(via_second.begin(), via_second.end(), top[j]), top[j]);
        Mat route_first, route_second;
        if (f.variance() == Variance::contravariant) {
          route_first = f.hasse_map(bottom, via_first) * f.hasse_map(via_first, top);
          route_second = f.hasse_map(bottom, via_second) * f.hasse_map(via_second, top);
        } else {
          route_first = f.hasse_map(via_first, top) * f.hasse_map(bottom, via_first);
          route_second = f.hasse_map(via_second, top) * f.hasse_map(bottom, via_second);
        }
        if (!exact_equal(route_first, route_second))
          report.incoherent.push_back({bottom, top, via_first, via_second});
      }
    }
  }
  return report;
}

Mat evaluate_inclusion(const VeryGoodFunctor& f, const Simplex& face, const Simplex& simplex) {
  const auto& complex = f.poset().complex();
  complex.index_of(face);
  complex.index_of(simplex);
  if (!std::includes(simplex.begin(), simplex.end(), face.begin(), face.end()))
    throw NotAFaceError("{" + simplex_key(face) + "} is not a face of {" +
                        simplex_key(simplex) + "}");
  Simplex missing;
  std::set_difference(simplex.begin(), simplex.end(), face.begin(), face.end(),
                      std::back_inserter(missing));
  Mat composite = Mat::Identity(f.dim_of(face), f.dim_of(face));
  // Insert missing vertices ascending: face = c_0 < c_1 < ... < c_k = simplex.
  Simplex current = face;
  for (int v : missing) {
    Simplex next = current;
    next.insert(std::lower_bound(next.begin(), next.end(), v), v);
    const Mat& step = f.hasse_map(current, next);
    if (f.variance() == Variance::contravariant)
      composite = (composite * step).eval();
    else
      composite = (step * composite).eval();
    current = std::move(next);
  }
  return composite;
}

VeryGoodFunctor gauge_twist(const VeryGoodFunctor& f, const std::vector<Mat>& units_by_object) {
  const auto& complex = f.poset().complex();
  if (static_cast<int>(units_by_object.size()) != complex.simplex_count())
    throw SizeMismatchError("gauge_twist: need one unit per object");
  std::vector<Mat> inverses;
  inverses.reserve(units_by_object.size());
  for (std::size_t i = 0; i < units_by_object.size(); ++i) {
    const Mat& a = units_by_object[i];
    Index d = f.dim_of_id(static_cast<int>(i));
    if (a.rows() != d || a.cols() != d)
      throw SizeMismatchError("gauge_twist: unit at {" +
                              simplex_key(complex.simplex_at(static_cast<int>(i))) +
                              "} must be " + std::to_string(d) + "x" + std::to_string(d));
    inverses.push_back(invert(a));  // SingularError when not a unit
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : f.poset().hasse_edges()) {
    auto [face_id, simplex_id] = edge;
    const Mat& m = f.hasse_map_ids(face_id, simplex_id);
    if (f.variance() == Variance::contravariant)
      maps[edge] = units_by_object[static_cast<std::size_t>(face_id)] * m *
                   inverses[static_cast<std::size_t>(simplex_id)];
    else
      maps[edge] = units_by_object[static_cast<std::size_t>(simplex_id)] * m *
                   inverses[static_cast<std::size_t>(face_id)];
  }
  return VeryGoodFunctor(f.poset(), f.variance(), f.dims(), std::move(maps));
}

Limit finite_limit(const VeryGoodFunctor& f) {
  const int n = f.poset().object_count();
  std::vector<Index> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + f.dim_of_id(i);
  Index total = offset[static_cast<std::size_t>(n)];
  Index rows = 0;
  for (const auto& [face_id, simplex_id] : f.poset().hasse_edges())
    rows += f.variance() == Variance::contravariant ? f.dim_of_id(face_id) : f.dim_of_id(simplex_id);
  Mat constraints = Mat::Zero(rows, total);
  Index r = 0;
  for (const auto& [face_id, simplex_id] : f.poset().hasse_edges()) {
    const Mat& m = f.hasse_map_ids(face_id, simplex_id);
    if (f.variance() == Variance::contravariant) {
      // x_face = m * x_simplex
      Index d = f.dim_of_id(face_id);
      constraints.block(r, offset[static_cast<std::size_t>(face_id)], d, d) = Mat::Identity(d, d);
      constraints.block(r, offset[static_cast<std::size_t>(simplex_id)], d, m.cols()) = -m;
      r += d;
    } else {
      // x_simplex = m * x_face
      Index d = f.dim_of_id(simplex_id);
      constraints.block(r, offset[static_cast<std::size_t>(simplex_id)], d, d) = Mat::Identity(d, d);
      constraints.block(r, offset[static_cast<std::size_t>(face_id)], d, m.cols()) = -m;
      r += d;
    }
  }
  Mat basis = kernel_basis(constraints);
  Limit limit;
  limit.dim = basis.cols();
  for (int i = 0; i < n; ++i)
    limit.projections.push_back(basis.middleRows(offset[static_cast<std::size_t>(i)], f.dim_of_id(i)));
  return limit;
}

VeryGoodFunctor dualize(const VeryGoodFunctor& f) {
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& edge : f.poset().hasse_edges())
    maps[edge] = f.hasse_map_ids(edge.first, edge.second).transpose();
  Variance flipped = f.variance() == Variance::contravariant ? Variance::covariant
                                                             : Variance::contravariant;
  return VeryGoodFunctor(f.poset(), flipped, f.dims(), std::move(maps));
}

NaturalTransformation::NaturalTransformation(VeryGoodFunctor source, VeryGoodFunctor target,
                                             std::vector<Mat> components_by_object)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components_by_object)) {
  if (!(source_.poset() == target_.poset()))
    throw PosetMismatchError("natural transformation: functors live on different posets");
  if (source_.variance() != target_.variance())
    throw PosetMismatchError("natural transformation: functors have different variance");
  const int n = source_.poset().object_count();
  if (static_cast<int>(components_.size()) != n)
    throw SizeMismatchError("natural transformation: need one component per object");
  for (int i = 0; i < n; ++i) {
    const Mat& c = components_[static_cast<std::size_t>(i)];
    if (c.rows() != target_.dim_of_id(i) || c.cols() != source_.dim_of_id(i))
      throw SizeMismatchError("natural transformation: component at {" +
                              simplex_key(source_.poset().complex().simplex_at(i)) +
                              "} has the wrong shape");
  }
}

const Mat& NaturalTransformation::at(const Simplex& s) const {
  return at_id(source_.poset().complex().index_of(s));
}

std::string NaturalityCheck::summary() const {
  if (passed()) return "natural";
  std::string s;
  for (const auto& f : failures)
    s += "naturality fails on {" + simplex_key(f.face) + "} < {" + simplex_key(f.simplex) + "}\n";
  return s;
}

NaturalityCheck check_naturality(const NaturalTransformation& eta) {
  NaturalityCheck report;
  const auto& src = eta.source();
  const auto& tgt = eta.target();
  const auto& complex = src.poset().complex();
  for (const auto& [face_id, simplex_id] : src.poset().hasse_edges()) {
    Mat lhs, rhs;
    if (src.variance() == Variance::contravariant) {
      lhs = eta.at_id(face_id) * src.hasse_map_ids(face_id, simplex_id);
      rhs = tgt.hasse_map_ids(face_id, simplex_id) * eta.at_id(simplex_id);
    } else {
      lhs = eta.at_id(simplex_id) * src.hasse_map_ids(face_id, simplex_id);
      rhs = tgt.hasse_map_ids(face_id, simplex_id) * eta.at_id(face_id);
    }
    if (!exact_equal(lhs, rhs))
      report.failures.push_back({complex.simplex_at(face_id), complex.simplex_at(simplex_id)});
  }
  return report;
}

Mat compose_zigzag(const VeryGoodFunctor& f, const Zigzag& z) {
  if (z.objects.empty()) throw IncompatibleZigzagError("zigzag has no objects");
  const auto& complex = f.poset().complex();
  for (const Simplex& s : z.objects)
    if (!complex.contains(s))
      throw IncompatibleZigzagError("zigzag object {" + simplex_key(s) + "} is not in the poset");
  Mat composite = Mat::Identity(f.dim_of(z.objects.front()), f.dim_of(z.objects.front()));
  for (std::size_t i = 0; i + 1 < z.objects.size(); ++i) {
    const Simplex& a = z.objects[i];
    const Simplex& b = z.objects[i + 1];
    bool a_below = std::includes(b.begin(), b.end(), a.begin(), a.end());
    bool b_below = std::includes(a.begin(), a.end(), b.begin(), b.end());
    if (!a_below && !b_below)
      throw IncompatibleZigzagError("zigzag hop {" + simplex_key(a) + "} to {" + simplex_key(b) +
                                    "}: objects are not comparable");
    Mat factor;  // must map F(b) -> F(a)
    try {
      if (a == b) {
        factor = Mat::Identity(f.dim_of(a), f.dim_of(a));
      } else if (f.variance() == Variance::contravariant) {
        factor = a_below ? evaluate_inclusion(f, a, b) : invert(evaluate_inclusion(f, b, a));
      } else {
        factor = a_below ? invert(evaluate_inclusion(f, a, b)) : evaluate_inclusion(f, b, a);
      }
    } catch (const SingularError&) {
      throw NotVeryGoodError("zigzag hop {" + simplex_key(a) + "} to {" + simplex_key(b) +
                             "} needs an inverse, but the functor's map is singular");
    } catch (const NotSquareError&) {
      throw NotVeryGoodError("zigzag hop {" + simplex_key(a) + "} to {" + simplex_key(b) +
                             "} needs an inverse, but the functor's map is not square");
    }
    composite = (composite * factor).eval();
  }
  return composite;
}

}  // namespace vgf
