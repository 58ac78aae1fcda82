#include "vgf/cover.hpp"

#include <algorithm>

namespace vgf {

CoverPoset::CoverPoset(SimplicialComplex complex) : complex_(std::move(complex)) {
  for (int id = 0; id < complex_.simplex_count(); ++id) {
    const Simplex& s = complex_.simplex_at(id);
    if (s.size() < 2) continue;
    for (int removed : s) {
      Simplex face;
      for (int v : s)
        if (v != removed) face.push_back(v);
      hasse_.emplace_back(complex_.index_of(face), id);
    }
  }
}

bool CoverPoset::leq(const Simplex& a, const Simplex& b) const {
  complex_.index_of(a);
  complex_.index_of(b);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

CoverPoset cover_poset(const SimplicialComplex& k) { return CoverPoset(k); }

std::optional<Simplex> cover_intersection(const CoverPoset& p, const Simplex& a,
                                          const Simplex& b) {
  p.complex().index_of(a);
  p.complex().index_of(b);
  Simplex meet;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
  if (meet.empty()) return std::nullopt;
  return meet;  // faces of simplices are simplices, so the meet is an object
}

Zigzag zigzag_of_path(const std::vector<int>& path) {
  Zigzag z;
  for (std::size_t i = 0; i < path.size(); ++i) {
    z.objects.push_back({path[i]});
    if (i + 1 < path.size()) {
      int a = std::min(path[i], path[i + 1]);
      int b = std::max(path[i], path[i + 1]);
      z.objects.push_back({a, b});
    }
  }
  return z;
}

}  // namespace vgf
