#pragma once

#include <vector>

#include "core/coloring.hpp"
#include "core/complex.hpp"

namespace xf {

// Pair (L, K) with K a subcomplex of L; dim(L,K) is the maximum dimension of
// a face of L outside K.
struct RelativeComplex {
  SimplicialComplex L, K;
  static RelativeComplex of(SimplicialComplex l, SimplicialComplex k);
  int relative_dim() const;  // -1 when every face of L lies in K
};

struct ExtendStep {
  Face target;
  VertexId apex;
  int color;
  size_t dull_before;  // dull-face count before this starring (0 in the pre-pass)
  bool prepass;        // improperly colored K-K edge subdivided up front
};

struct ExtendResult {
  SimplicialComplex L;     // stellar subdivision of the input L, K untouched
  Coloring coloring;       // proper on all of L'; restriction to V(K) is kappa
  std::vector<ExtendStep> log;
};

// Constructive coloring extension: subdivide improper K-K edges of L \ K,
// color new vertices 0, then star inclusion-maximal dull faces (apex colored
// dim F) until no dull face remains. New vertices only use colors {0..d}.
ExtendResult extend_coloring(const RelativeComplex& rel, const Coloring& kappa, int m);

// Number of dull faces of c under k (a face is dull when every vertex color
// is strictly below its dimension).
size_t count_dull_faces(const SimplicialComplex& c, const Coloring& k);

}  // namespace xf
