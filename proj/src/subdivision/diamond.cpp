#include "subdivision/diamond.hpp"

#include <algorithm>
#include <set>

#include "core/generate.hpp"
#include "util/error.hpp"

namespace xf {

SimplicialComplex DiamondResult::image_of(const SimplicialComplex& sub) const {
  std::vector<Face> facets;
  for (const auto& g : sub.facets()) {
    auto it = pieces.find(g);
    require(it != pieces.end(), "diamond image: " + g.to_string() + " is not an input d-face");
    facets.insert(facets.end(), it->second.begin(), it->second.end());
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

DiamondResult diamond(const SimplicialComplex& c, const Coloring& kappa) {
  require(!c.is_void(), "diamond: empty complex");
  require(c.is_pure(), "diamond: complex is not pure");
  int dim = *c.dim();
  require(dim >= 1, "diamond: dimension must be at least 1");
  int d = dim - 1;
  require(kappa.palette_size() == d + 2, "diamond: coloring must use d+2 colors");
  require(is_proper(c, kappa), "diamond: coloring is not proper");

  DiamondResult res;
  res.d = d;

  // Start from the d-skeleton; remember where each original d-face goes.
  std::vector<Face> skel;
  for (const auto& g : c.facets())
    for (const auto& v : g) skel.push_back(g.set_minus(v));
  std::sort(skel.begin(), skel.end());
  skel.erase(std::unique(skel.begin(), skel.end()), skel.end());
  SimplicialComplex cur = SimplicialComplex::from_facets(std::vector<Face>(skel));
  std::map<Face, std::vector<Face>> pieces;
  for (const auto& f : skel) pieces[f] = {f};

  std::vector<VertexId> used(c.vertices());
  std::map<VertexId, int> apex_color;
  std::map<Face, VertexId> apex_of;

  for (int k = d; k >= 1; --k) {
    // target color set {d+1-k, ..., d+1}
    std::set<int> want;
    for (int col = d + 1 - k; col <= d + 1; ++col) want.insert(col);
    std::vector<Face> targets;
    for (const auto& f : cur.faces_of_dim(k)) {
      bool original = true;
      std::set<int> cols;
      for (const auto& v : f) {
        auto col = kappa.get(v);
        if (!col) {  // apex vertices never match the pattern
          original = false;
          break;
        }
        cols.insert(*col);
      }
      if (original && cols == want) targets.push_back(f);
    }
    std::sort(targets.begin(), targets.end());
    for (const auto& f : targets) {
      // Apex label encodes the starred face, which makes the per-cell
      // cross-polytope isomorphism constructible without search.
      std::string stem;
      for (const auto& v : f) stem += v.label() + "+";
      VertexId apex = fresh_labels(used, 1, stem)[0];
      used.push_back(apex);
      apex_color[apex] = d - k;
      apex_of[f] = apex;
      // subdivide, tracking piece ownership
      std::map<Face, std::vector<Face>> next_pieces;
      std::vector<Face> next_facets;
      for (const auto& [orig, fs] : pieces) {
        auto& np = next_pieces[orig];
        for (const auto& g : fs) {
          if (!f.subset_of(g)) {
            np.push_back(g);
          } else {
            for (const auto& v : f) np.push_back(g.set_minus(v).with(apex));
          }
        }
        next_facets.insert(next_facets.end(), np.begin(), np.end());
      }
      pieces = std::move(next_pieces);
      cur = SimplicialComplex::from_facets(std::move(next_facets));
    }
  }

  res.complex = cur;
  res.pieces = pieces;

  // Induced coloring with palette {0..d}: original color d+1 folds onto d
  // (all {d,d+1}-colored edges were starred away), apexes keep their color.
  Coloring out(d + 1);
  for (const auto& v : cur.vertices()) {
    auto col = kappa.get(v);
    if (col) {
      out.set(v, *col == d + 1 ? d : *col);
    } else {
      auto it = apex_color.find(v);
      require(it != apex_color.end(), "diamond: unaccounted vertex", errc::internal);
      out.set(v, it->second);
    }
  }
  require(is_proper(cur, out), "diamond produced an improper coloring", errc::internal);
  res.coloring = out;

  // Assemble cells and verify each boundary is a cross-polytope via the
  // label-constructed isomorphism.
  auto cd = make_cross_polytope_boundary(d);
  for (const auto& g : c.facets()) {
    std::vector<Face> cell;
    for (const auto& v : g) {
      const auto& ps = pieces.at(g.set_minus(v));
      cell.insert(cell.end(), ps.begin(), ps.end());
    }
    std::sort(cell.begin(), cell.end());
    res.cells[g] = cell;

    // vertex of g per color
    std::map<int, VertexId> by_color;
    for (const auto& v : g) by_color[kappa.at(v)] = v;
    Isomorphism iso;  // canonical C_d label -> cell vertex
    for (int i = 0; i <= d; ++i) {
      iso.map.push_back({VertexId::of("x" + std::to_string(i)), by_color.at(i)});
      if (i == d) {
        iso.map.push_back({VertexId::of("y" + std::to_string(i)), by_color.at(d + 1)});
      } else {
        // partner = apex of the subface of g with colors {i+1..d+1}
        std::vector<VertexId> sub;
        for (const auto& v : g)
          if (kappa.at(v) >= i + 1) sub.push_back(v);
        auto it = apex_of.find(Face(std::move(sub)));
        require(it != apex_of.end(), "diamond: missing apex for flag face", errc::internal);
        iso.map.push_back({VertexId::of("y" + std::to_string(i)), it->second});
      }
    }
    std::sort(iso.map.begin(), iso.map.end());
    auto mapped = iso.image(cd);
    require(mapped == SimplicialComplex::from_facets(std::vector<Face>(cell)),
            "diamond: cell boundary is not a cross-polytope", errc::internal);
    res.cell_iso[g] = iso;
  }
  return res;
}

}  // namespace xf
