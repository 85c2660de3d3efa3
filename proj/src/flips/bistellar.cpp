#include "flips/bistellar.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace xf {

bool flip_applicable(const SimplicialComplex& c, const FlipMove& m, std::string* why) {
  auto explain = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (m.A.empty()) return explain("A is empty");
  if (!c.has_face(m.A)) return explain("A = " + m.A.to_string() + " is not a face");
  if (!m.A.set_intersect(m.B).empty()) return explain("A and B intersect");
  if (!m.B.empty() && c.has_face(m.B)) return explain("B = " + m.B.to_string() + " is already a face");
  // lk(A) must equal ∂B̄
  auto lk = link(c, m.A);
  std::vector<Face> bd;
  if (m.B.card() >= 1) {
    for (const auto& v : m.B) bd.push_back(m.B.set_minus(v));
  }
  auto expected = SimplicialComplex::from_facets(std::move(bd));
  if (!(lk == expected)) return explain("lk(A) != boundary of B");
  return true;
}

std::vector<FlipMove> available_bistellar_flips(const SimplicialComplex& c) {
  std::vector<FlipMove> out;
  if (c.is_void()) return out;
  int d = *c.dim();
  VertexId fresh = fresh_label(c);
  const auto& table = c.all_faces();
  for (size_t card = 1; card < table.size(); ++card) {
    for (const auto& a : table[card]) {
      auto lk = link(c, a);
      if (static_cast<int>(card) == d + 1) {
        // facet starring: B is a fresh vertex, lk(A) = {∅}
        out.push_back({a, Face({fresh})});
        continue;
      }
      const auto& bverts = lk.vertices();
      if (bverts.size() != static_cast<size_t>(d + 2 - card)) continue;
      Face b{std::vector<VertexId>(bverts.begin(), bverts.end())};
      if (c.has_face(b)) continue;
      bool is_boundary = true;
      if (lk.facet_count() != b.card()) is_boundary = false;
      if (is_boundary) {
        for (const auto& v : b) {
          if (!lk.has_face(b.set_minus(v))) {
            is_boundary = false;
            break;
          }
        }
      }
      if (!is_boundary) continue;
      out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const FlipMove& x, const FlipMove& y) {
    if (!(x.A == y.A)) return x.A < y.A;
    return x.B < y.B;
  });
  return out;
}

SimplicialComplex apply_bistellar_flip(const SimplicialComplex& c, const FlipMove& m) {
  std::string why;
  require(flip_applicable(c, m, &why), "bistellar flip not applicable: " + why);
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    if (!m.A.subset_of(g)) facets.push_back(g);
  }
  if (m.A.card() == 1) {
    facets.push_back(m.A.set_union(m.B).set_minus(m.A));  // ∂Ā = {∅}: just B̄
  } else {
    for (const auto& v : m.A) facets.push_back(m.A.set_minus(v).set_union(m.B));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace xf
