#include "vgf/groupoid.hpp"

#include <algorithm>

#include "vgf/errors.hpp"

namespace vgf {

bool is_edge_path(const SimplicialComplex& k, const EdgePath& path) {
  if (path.empty()) return false;
  for (int v : path)
    if (!k.has_vertex(v)) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!k.has_edge(path[i], path[i + 1])) return false;
  return true;
}

void validate_edge_path(const SimplicialComplex& k, const EdgePath& path) {
  if (path.empty()) throw InvalidPathError("edge path must be nonempty");
  for (int v : path)
    if (!k.has_vertex(v))
      throw InvalidPathError("path visits " + std::to_string(v) + ", not a vertex");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!k.has_edge(path[i], path[i + 1]))
      throw InvalidPathError("path step (" + std::to_string(path[i]) + "," +
                             std::to_string(path[i + 1]) + ") is not an edge");
}

EdgePath concatenate(const EdgePath& f, const EdgePath& g) {
  if (f.empty() || g.empty()) throw InvalidPathError("cannot concatenate an empty path");
  if (f.back() != g.front())
    throw EndpointMismatchError("concatenate: paths meet at " + std::to_string(f.back()) +
                                " vs " + std::to_string(g.front()));
  EdgePath out = f;
  out.insert(out.end(), g.begin() + 1, g.end());
  return out;
}

EdgePath reduce_path(const SimplicialComplex& k, EdgePath path) {
  validate_edge_path(k, path);
  bool moved = true;
  while (moved && path.size() >= 3) {
    moved = false;
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
      if (path[i] == path[i + 2]) {  // backtrack (a,b,a) -> (a)
        path.erase(path.begin() + static_cast<long>(i) + 1, path.begin() + static_cast<long>(i) + 3);
        moved = true;
        break;
      }
      Simplex triangle{path[i], path[i + 1], path[i + 2]};
      std::sort(triangle.begin(), triangle.end());
      if (k.contains(triangle)) {  // (a,b,c) -> (a,c) across a 2-simplex
        path.erase(path.begin() + static_cast<long>(i) + 1);
        moved = true;
        break;
      }
    }
  }
  return path;
}

GroupoidFunctor::GroupoidFunctor(SimplicialComplex complex, std::map<int, Index> dims_by_vertex,
                                 std::map<std::pair<int, int>, Mat> edge_matrices)
    : complex_(std::move(complex)), dims_(std::move(dims_by_vertex)), edges_(std::move(edge_matrices)) {
  std::vector<int> verts = complex_.vertices();
  if (dims_.size() != verts.size())
    throw SizeMismatchError("groupoid functor: need one dimension per vertex");
  for (int v : verts)
    if (!dims_.count(v))
      throw SizeMismatchError("groupoid functor: missing dimension at vertex " + std::to_string(v));
  std::size_t edge_count = 0;
  for (const Simplex& s : complex_.simplices())
    if (s.size() == 2) ++edge_count;
  if (edges_.size() != edge_count)
    throw SizeMismatchError("groupoid functor: need one matrix per edge");
  for (const auto& [e, m] : edges_) {
    auto [a, b] = e;
    if (a >= b || !complex_.has_edge(a, b))
      throw UnknownSimplexError("groupoid functor: {" + std::to_string(a) + "," +
                                std::to_string(b) + "} is not an ascending edge");
    if (m.rows() != dim_of(a) || m.cols() != dim_of(b))
      throw SizeMismatchError("groupoid functor: matrix for edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "} must map G(" + std::to_string(b) +
                              ") to G(" + std::to_string(a) + ")");
  }
}

Index GroupoidFunctor::dim_of(int v) const {
  auto it = dims_.find(v);
  if (it == dims_.end())
    throw VertexOutOfRangeError("groupoid functor: no vertex " + std::to_string(v));
  return it->second;
}

Mat GroupoidFunctor::edge_matrix(int a, int b) const {
  auto it = edges_.find({std::min(a, b), std::max(a, b)});
  if (it == edges_.end())
    throw UnknownSimplexError("groupoid functor: no edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
  if (a < b) return it->second;
  try {
    return invert(it->second);
  } catch (const SingularError&) {
    throw SingularError("groupoid functor: edge matrix {" + std::to_string(b) + "," +
                        std::to_string(a) + "} is singular, reverse step undefined");
  }
}

Mat GroupoidFunctor::path_matrix(const EdgePath& path) const {
  validate_edge_path(complex_, path);
  Mat m = Mat::Identity(dim_of(path.front()), dim_of(path.front()));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    m = (m * edge_matrix(path[i], path[i + 1])).eval();
  return m;
}

std::string GroupoidFunctor::Check::summary() const {
  if (passed()) return "valid groupoid functor";
  std::string s;
  for (auto [a, b] : non_invertible)
    s += "non-invertible edge matrix {" + std::to_string(a) + "," + std::to_string(b) + "}\n";
  for (const auto& t : failed_triangles)
    s += "triangle relation fails on {" + simplex_key(t) + "}\n";
  return s;
}

GroupoidFunctor::Check GroupoidFunctor::validate() const {
  Check report;
  for (const auto& [e, m] : edges_)
    if (!is_invertible(m)) report.non_invertible.push_back(e);
  if (!report.non_invertible.empty()) return report;  // relations need inverses
  for (const Simplex& t : complex_.simplices()) {
    if (t.size() != 3) continue;
    Mat lhs = edge_matrix(t[0], t[1]) * edge_matrix(t[1], t[2]);
    if (!exact_equal(lhs, edge_matrix(t[0], t[2]))) report.failed_triangles.push_back(t);
  }
  return report;
}

bool operator==(const GroupoidFunctor& a, const GroupoidFunctor& b) {
  if (!(a.complex_ == b.complex_) || a.dims_ != b.dims_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (const auto& [e, m] : a.edges_) {
    auto it = b.edges_.find(e);
    if (it == b.edges_.end() || !exact_equal(m, it->second)) return false;
  }
  return true;
}

Pi1Presentation::Pi1Presentation(SimplicialComplex complex, int basepoint, MaximalTree tree,
                                 std::vector<std::pair<int, int>> generators,
                                 std::vector<Word> relations,
                                 std::vector<Simplex> relation_triangles)
    : complex_(std::move(complex)),
      basepoint_(basepoint),
      tree_(std::move(tree)),
      generators_(std::move(generators)),
      relations_(std::move(relations)),
      relation_triangles_(std::move(relation_triangles)) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    generator_index_[generators_[i]] = static_cast<int>(i);
}

int Pi1Presentation::generator_index(int a, int b) const {
  auto it = generator_index_.find({a, b});
  if (it == generator_index_.end())
    throw UnknownSimplexError("no generator for edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
  return it->second;
}

EdgePath Pi1Presentation::generator_loop(int index) const {
  auto [a, b] = generators_.at(static_cast<std::size_t>(index));
  EdgePath loop = tree_path(tree_, basepoint_, a);
  loop = concatenate(loop, {a, b});
  return concatenate(loop, tree_path(tree_, b, basepoint_));
}

Pi1Presentation pi1_presentation(const SimplicialComplex& k, int basepoint) {
  if (!k.has_vertex(basepoint))
    throw VertexOutOfRangeError("pi1: " + std::to_string(basepoint) + " is not a vertex");
  if (connected_components(k).size() != 1)
    throw DisconnectedError("pi1: complex is not connected");
  MaximalTree tree = maximal_tree(k, basepoint);
  std::vector<std::pair<int, int>> generators;
  for (const Simplex& s : k.simplices())
    if (s.size() == 2 && !tree.contains_edge(s[0], s[1])) generators.emplace_back(s[0], s[1]);
  std::map<std::pair<int, int>, int> gen_index;
  for (std::size_t i = 0; i < generators.size(); ++i)
    gen_index[generators[i]] = static_cast<int>(i);
  auto letter_of_step = [&](int a, int b) -> int {
    auto it = gen_index.find({std::min(a, b), std::max(a, b)});
    if (it == gen_index.end()) return 0;  // tree step
    return a < b ? it->second + 1 : -(it->second + 1);
  };
  std::vector<Word> relations;
  std::vector<Simplex> relation_triangles;
  for (const Simplex& t : k.simplices()) {
    if (t.size() != 3) continue;
    Word word;
    const int steps[3][2] = {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}};
    for (const auto& step : steps) {
      int letter = letter_of_step(step[0], step[1]);
      if (letter != 0) word.push_back(letter);
    }
    relations.push_back(std::move(word));
    relation_triangles.push_back(t);
  }
  return Pi1Presentation(k, basepoint, std::move(tree), std::move(generators),
                         std::move(relations), std::move(relation_triangles));
}

EdgePath tree_path(const MaximalTree& tree, int from, int to) {
  if (!tree.in_component(from) || !tree.in_component(to))
    throw NotInComponentError("tree_path: endpoint not in the tree's component");
  auto ascend = [&](int v) {
    EdgePath up{v};
    while (v != tree.root()) {
      v = tree.parent().at(v);
      up.push_back(v);
    }
    return up;  // v, parent(v), ..., root
  };
  EdgePath a = ascend(from);
  EdgePath b = ascend(to);
  // Strip the common tail above the meeting point; both lists keep ending at
  // the same vertex, which becomes the lowest common ancestor.
  while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
    a.pop_back();
    b.pop_back();
  }
  EdgePath out = a;
  out.insert(out.end(), b.rbegin() + 1, b.rend());
  return out;
}

Word loop_to_generator_word(const Pi1Presentation& p, const EdgePath& loop) {
  validate_edge_path(p.complex(), loop);
  if (loop.front() != p.basepoint() || loop.back() != p.basepoint())
    throw NotALoopError("loop must start and end at the basepoint " +
                        std::to_string(p.basepoint()));
  Word word;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    int a = loop[i], b = loop[i + 1];
    if (p.tree().contains_edge(a, b)) continue;
    int index = p.generator_index(std::min(a, b), std::max(a, b));
    word.push_back(a < b ? index + 1 : -(index + 1));
  }
  return word;
}

std::string RepCheck::summary() const {
  if (passed()) return "valid representation";
  std::string s;
  for (const auto& e : shape_errors) s += e + "\n";
  for (int g : non_invertible_generators)
    s += "generator " + std::to_string(g) + " is not invertible\n";
  for (int r : failed_relations)
    s += "relation " + std::to_string(r) + " does not evaluate to the identity\n";
  return s;
}

RepCheck rep_validate(const Pi1Presentation& p, const Representation& rho) {
  RepCheck report;
  if (rho.basepoint != p.basepoint())
    report.shape_errors.push_back("basepoint " + std::to_string(rho.basepoint) +
                                  " differs from the presentation's " +
                                  std::to_string(p.basepoint()));
  if (rho.dim < 0) report.shape_errors.push_back("negative dimension");
  if (rho.generator_matrices.size() != p.generators().size())
    report.shape_errors.push_back("expected " + std::to_string(p.generators().size()) +
                                  " generator matrices, got " +
                                  std::to_string(rho.generator_matrices.size()));
  if (!report.shape_errors.empty()) return report;
  for (std::size_t i = 0; i < rho.generator_matrices.size(); ++i) {
    const Mat& m = rho.generator_matrices[i];
    if (m.rows() != rho.dim || m.cols() != rho.dim) {
      report.shape_errors.push_back("generator " + std::to_string(i) + " is not " +
                                    std::to_string(rho.dim) + "x" + std::to_string(rho.dim));
      continue;
    }
    if (!is_invertible(m)) report.non_invertible_generators.push_back(static_cast<int>(i));
  }
  if (!report.shape_errors.empty() || !report.non_invertible_generators.empty()) return report;
  for (std::size_t r = 0; r < p.relations().size(); ++r)
    if (!is_identity(word_matrix(rho, p.relations()[r])))
      report.failed_relations.push_back(static_cast<int>(r));
  return report;
}

Mat word_matrix(const Representation& rho, const Word& word) {
  Mat m = Mat::Identity(rho.dim, rho.dim);
  for (int letter : word) {
    if (letter == 0) throw InvalidRepError("zero letter in word");
    std::size_t index = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (index >= rho.generator_matrices.size())
      throw InvalidRepError("word letter " + std::to_string(letter) + " out of range");
    const Mat& g = rho.generator_matrices[index];
    m = (letter > 0 ? m * g : m * invert(g)).eval();
  }
  return m;
}

Mat rep_evaluate(const Pi1Presentation& p, const Representation& rho, const EdgePath& loop) {
  return word_matrix(rho, loop_to_generator_word(p, loop));
}

}  // namespace vgf
