#include "vgf/simplicial_complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace vgf {

std::string simplex_key(const Simplex& s) {
  std::string key;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(s[i]);
  }
  return key;
}

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw UnknownSimplexError("unknown simplex {" + simplex_key(s) + "}");
  return it->second;
}

int SimplicialComplex::dimension() const {
  if (simplices_.empty()) return -1;
  return static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int p) const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_)
    if (static_cast<int>(s.size()) == p + 1) out.push_back(s);
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const Simplex& s : simplices_) {
    if (s.size() > 1) break;
    out.push_back(s[0]);
  }
  return out;
}

bool SimplicialComplex::has_vertex(int v) const { return contains({v}); }

bool SimplicialComplex::has_edge(int a, int b) const {
  if (a == b) return false;
  return contains({std::min(a, b), std::max(a, b)});
}

std::vector<int> SimplicialComplex::neighbors(int v) const {
  std::vector<int> out;
  for (const Simplex& s : simplices_) {
    if (s.size() < 2) continue;
    if (s.size() > 2) break;
    if (s[0] == v) out.push_back(s[1]);
    if (s[1] == v) out.push_back(s[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_) {
    bool maximal = true;
    for (const Simplex& t : simplices_) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (const Simplex& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

SimplicialComplex close_under_faces(const std::vector<Simplex>& facets, int vertex_count) {
  if (vertex_count < 0) throw VertexOutOfRangeError("negative vertex count");
  std::set<Simplex> closed;
  for (const Simplex& facet : facets) {
    Simplex f = facet;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw EmptyFacetError("facets must be nonempty");
    if (f.front() < 0 || f.back() >= vertex_count)
      throw VertexOutOfRangeError("facet {" + simplex_key(f) + "} has a vertex outside [0, " +
                                  std::to_string(vertex_count) + ")");
    // Enumerate every nonempty subset.
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(f[i]);
      closed.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.simplices_.assign(closed.begin(), closed.end());
  std::sort(k.simplices_.begin(), k.simplices_.end(), simplex_less);
  for (std::size_t i = 0; i < k.simplices_.size(); ++i)
    k.index_[k.simplices_[i]] = static_cast<int>(i);
  return k;
}

SimplicialComplex skeleton(const SimplicialComplex& k, int p) {
  if (p < 0) throw VertexOutOfRangeError("skeleton dimension must be >= 0");
  std::vector<Simplex> kept;
  for (const Simplex& s : k.simplices())
    if (static_cast<int>(s.size()) <= p + 1) kept.push_back(s);
  return close_under_faces(kept, k.vertex_count());
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  const auto& simplices = k.simplices();
  const int n = k.simplex_count();
  // faces_of[i] lists the ids of all proper faces of simplex i.
  std::vector<std::vector<int>> faces_of(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Simplex& s = simplices[static_cast<std::size_t>(i)];
    const std::size_t sz = s.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << sz); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < sz; ++b)
        if (mask & (std::size_t{1} << b)) face.push_back(s[b]);
      faces_of[static_cast<std::size_t>(i)].push_back(k.index_of(face));
    }
  }
  // Enumerate strict chains; ids ascend along any chain, so chains are
  // ascending vertex lists of the subdivision.
  std::vector<Simplex> chains;
  Simplex current;
  auto extend = [&](auto&& self, int top) -> void {
    current.push_back(top);
    chains.push_back(Simplex(current.rbegin(), current.rend()));
    for (int f : faces_of[static_cast<std::size_t>(top)]) self(self, f);
    current.pop_back();
  };
  for (int i = 0; i < n; ++i) extend(extend, i);
  return close_under_faces(chains, n);
}

std::vector<std::vector<int>> connected_components(const SimplicialComplex& k) {
  std::vector<int> verts = k.vertices();
  std::map<int, int> comp;
  std::vector<std::vector<int>> out;
  for (int v : verts) {
    if (comp.count(v)) continue;
    std::vector<int> component;
    std::deque<int> queue{v};
    comp[v] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      component.push_back(u);
      for (int w : k.neighbors(u)) {
        if (comp.count(w)) continue;
        comp[w] = static_cast<int>(out.size());
        queue.push_back(w);
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

MaximalTree::MaximalTree(int root, std::set<std::pair<int, int>> edges, std::map<int, int> parent)
    : root_(root), edges_(std::move(edges)), parent_(std::move(parent)) {}

bool MaximalTree::contains_edge(int a, int b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

MaximalTree maximal_tree(const SimplicialComplex& k, int root) {
  if (!k.has_vertex(root))
    throw VertexOutOfRangeError("maximal_tree: " + std::to_string(root) + " is not a vertex");
  std::set<std::pair<int, int>> edges;
  std::map<int, int> parent;
  std::set<int> seen{root};
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : k.neighbors(u)) {
      if (seen.count(w)) continue;
      seen.insert(w);
      parent[w] = u;
      edges.insert({std::min(u, w), std::max(u, w)});
      queue.push_back(w);
    }
  }
  return MaximalTree(root, std::move(edges), std::move(parent));
}

}  // namespace vgf
