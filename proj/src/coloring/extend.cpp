#include "coloring/extend.hpp"

#include <algorithm>
#include <set>

#include "subdivision/stellar.hpp"
#include "util/error.hpp"

namespace xf {

RelativeComplex RelativeComplex::of(SimplicialComplex l, SimplicialComplex k) {
  require(is_subcomplex(l, k), "relative complex: K is not a subcomplex of L");
  return RelativeComplex{std::move(l), std::move(k)};
}

int RelativeComplex::relative_dim() const {
  int d = -1;
  for (const auto& g : L.facets()) {
    if (K.has_face(g)) continue;
    // the facet itself is outside K; faces of L \ K below it are too
    d = std::max(d, g.dim());
  }
  return d;
}

size_t count_dull_faces(const SimplicialComplex& c, const Coloring& k) {
  size_t n = 0;
  const auto& table = c.all_faces();
  for (size_t card = 2; card < table.size(); ++card) {
    for (const auto& f : table[card]) {
      bool dull = true;
      for (const auto& v : f) {
        if (k.at(v) >= f.dim()) {
          dull = false;
          break;
        }
      }
      if (dull) ++n;
    }
  }
  return n;
}

namespace {

std::vector<Face> dull_faces(const SimplicialComplex& c, const Coloring& k) {
  std::vector<Face> out;
  const auto& table = c.all_faces();
  for (size_t card = 2; card < table.size(); ++card) {
    for (const auto& f : table[card]) {
      bool dull = true;
      for (const auto& v : f) {
        if (k.at(v) >= f.dim()) {
          dull = false;
          break;
        }
      }
      if (dull) out.push_back(f);
    }
  }
  return out;
}

}  // namespace

ExtendResult extend_coloring(const RelativeComplex& rel, const Coloring& kappa, int m) {
  require(m >= 1, "extend_coloring: palette size must be at least 1");
  require(is_subcomplex(rel.L, rel.K), "extend_coloring: K is not a subcomplex of L");
  if (!rel.K.is_void()) {
    require(is_proper(rel.K, kappa), "extend_coloring: kappa is not proper on K");
  }
  int d = rel.relative_dim();

  ExtendResult res;
  if (d < 0) {  // K = L up to lower faces: nothing to subdivide or color
    res.L = rel.L;
    res.coloring = kappa;
    return res;
  }

  int palette = std::max(m, d + 1);
  SimplicialComplex cur = rel.L;
  Coloring col(palette);
  std::set<VertexId> k_vertices(rel.K.vertices().begin(), rel.K.vertices().end());
  for (const auto& v : cur.vertices()) {
    if (k_vertices.count(v))
      col.set(v, kappa.at(v));
    else
      col.set(v, 0);
  }

  auto star = [&](const Face& target, int color, size_t dull_before, bool prepass) {
    require(!rel.K.has_face(target), "extend_coloring: attempted to subdivide a face of K",
            errc::internal);
    VertexId apex = fresh_label(cur);
    cur = stellar_subdivide(cur, target, apex);
    col.set(apex, color);
    res.log.push_back({target, apex, color, dull_before, prepass});
  };

  // Pre-pass: edges of L \ K whose endpoints lie in K with equal colors.
  while (true) {
    std::optional<Face> bad;
    for (const auto& e : cur.faces_of_dim(1)) {
      if (rel.K.has_face(e)) continue;
      VertexId a = e.verts()[0], b = e.verts()[1];
      if (k_vertices.count(a) && k_vertices.count(b) && col.at(a) == col.at(b)) {
        bad = e;
        break;
      }
    }
    if (!bad) break;
    star(*bad, 0, 0, true);
  }

  // Basic starrings at inclusion-maximal dull faces, smallest first.
  while (true) {
    auto dull = dull_faces(cur, col);
    if (dull.empty()) break;
    Face pick;
    bool have = false;
    for (const auto& f : dull) {
      bool maximal = true;
      for (const auto& g : dull) {
        if (!(g == f) && f.subset_of(g)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      if (!have || f < pick) {
        pick = f;
        have = true;
      }
    }
    require(have, "extend_coloring: no maximal dull face", errc::internal);
    star(pick, pick.dim(), dull.size(), false);
  }

  require(is_proper(cur, col), "extend_coloring: output coloring is improper", errc::internal);
  // K untouched
  for (const auto& g : rel.K.facets())
    require(cur.has_face(g), "extend_coloring: face of K lost", errc::internal);
  res.L = std::move(cur);
  res.coloring = std::move(col);
  return res;
}

}  // namespace xf
