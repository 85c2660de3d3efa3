#pragma once

#include "pipeline/report.hpp"

namespace xf {

// Constructive reduction of a balanced 2-sphere: cone, color-extend, shell,
// diamond, then walk the shelling emitting one certified cross-flip per step.
// The report's moves run from a cross-polytope boundary to delta.
ReductionReport reduce_balanced_2sphere(const SimplicialComplex& delta, const Coloring& kappa);

struct AnnealOptions {
  long long budget = 2000;        // applied-move count
  uint64_t seed = 1729;
  double temperature = 1.0;
  double decay = 0.999;           // geometric, per applied move
  size_t embeddings_per_template = 24;
};

// Simulated annealing over available cross-flips minimizing the facet count;
// success = reaching a complex isomorphic to C_d. Deterministic given seed.
ReductionReport heuristic_reduce(const SimplicialComplex& delta, const CrossFlipCatalog& catalog,
                                 const AnnealOptions& opts = {});

// Same strategy over bistellar flips; target is the boundary of a simplex.
ReductionReport bistellar_reduce(const SimplicialComplex& delta, const AnnealOptions& opts = {});

// Color-preserving flip path between properly m-colored 2-spheres (m >= 4):
// both sides reduce to an m-colored simplex boundary through shelled colored
// cones, the palettes are aligned by subdivide/weld pairs, and the paths are
// spliced. No existing vertex is ever recolored.
ReductionReport colored_connect(const SimplicialComplex& delta, const Coloring& kd,
                                const SimplicialComplex& gamma, const Coloring& kg);

// Cross-flip path between balanced closed surfaces of equal PL type.
// 2-spheres splice through the cross-polytope; other surfaces meet in the
// middle via annealing (errors honestly on budget exhaustion).
ReductionReport connect_balanced(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                                 long long budget = 4000, uint64_t seed = 1729);

}  // namespace xf
