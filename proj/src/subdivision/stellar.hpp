#pragma once

#include <optional>
#include <vector>

#include "core/complex.hpp"

namespace xf {

// Ordered starring record; replaying it on the original complex reproduces
// the result bit-exactly.
struct SubdivisionStep {
  Face target;
  VertexId apex;
};
using SubdivisionLog = std::vector<SubdivisionStep>;

// sd_F(Δ) = (Δ \ F) ∪ (apex * ∂F̄ * lk_Δ(F)). Errors: F ∉ Δ, dim F < 1
// (a vertex starring is the identity and is rejected), apex collision.
SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& f, VertexId apex);

SimplicialComplex replay_subdivisions(const SimplicialComplex& c, const SubdivisionLog& log);

// Inverse starring at `apex`. Searches for an admissible face F ∉ Δ with
// st(apex) = apex * ∂F̄ * lk; when several faces are admissible (this does
// happen, e.g. welding the second apex of a flag subdivision) the
// lexicographically smallest is taken unless `expected` pins the choice.
SimplicialComplex stellar_weld(const SimplicialComplex& c, VertexId apex,
                               const std::optional<Face>& expected = std::nullopt);
std::vector<Face> weld_candidates(const SimplicialComplex& c, VertexId apex);

// Lemma-style flag subdivision: faces F_1 ⊂ ... ⊂ F_d of ∂σ^{d+1} with
// dim F_i = i, starred from F_d down to F_1. The result is isomorphic to the
// boundary of the (d+1)-cross-polytope.
std::pair<SimplicialComplex, SubdivisionLog> flag_subdivide(const SimplicialComplex& simplex_bd,
                                                            const std::vector<Face>& flag);

}  // namespace xf
