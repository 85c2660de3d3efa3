#pragma once

#include <map>

#include "core/coloring.hpp"
#include "core/complex.hpp"
#include "core/iso.hpp"

namespace xf {

// Result of the diamond operation on a pure (d+1)-dimensional balanced
// complex: the subdivided d-skeleton, one cross-polytopal cell per input
// facet, and the induced (d+1)-coloring (old color d+1 folds onto d).
struct DiamondResult {
  int d = 0;                       // cells are (d+1)-dimensional
  SimplicialComplex complex;       // subdivided d-skeleton
  Coloring coloring;               // palette {0..d}
  // input facet -> facets of its cell boundary (each is isomorphic to C_d)
  std::map<Face, std::vector<Face>> cells;
  // input d-face -> the facets it was subdivided into
  std::map<Face, std::vector<Face>> pieces;
  // input facet -> vertex map from the canonical C_d labels onto the cell
  std::map<Face, Isomorphism> cell_iso;

  // Union of pieces over the d-faces of a subcomplex of the input skeleton.
  SimplicialComplex image_of(const SimplicialComplex& sub) const;
};

// Descending starring per the color rule: for k = d..1, star every k-face
// whose color set is exactly {d+1-k, ..., d+1}; the apex gets color d-k.
// Requires a proper coloring with palette {0..d+1}.
DiamondResult diamond(const SimplicialComplex& c, const Coloring& kappa);

}  // namespace xf
