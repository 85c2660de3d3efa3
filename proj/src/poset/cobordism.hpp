#pragma once

#include <map>
#include <optional>
#include <vector>

#include "core/iso.hpp"
#include "flips/bistellar.hpp"
#include "poset/poset.hpp"

namespace xf {

// A (d+1)-dimensional nonpure pseudomanifold with two marked manifold ends.
// Embeddings are label-preserving: the element for a face of an end carries
// the same vertex set.
struct PseudoCobordism {
  int d = 0;
  SimplicialPoset P;
  SimplicialComplex left, right;
  std::map<Face, ElemId> phi_left, phi_right;  // total on all faces incl ∅
  // Cells in an order shelling (Ω, left) forward and (Ω, right) reversed.
  std::optional<std::vector<ElemId>> witness;

  std::vector<ElemId> cells() const;  // (d+1)-elements, ascending id
};

// Degree trichotomy + pseudoboundary conditions; throws errc::domain with the
// violated condition on failure.
void verify_pseudo_cobordism(const PseudoCobordism& omega);

// Ω = Δ ∪ (Ā * B̄) with both ends marked and the one-cell witness.
PseudoCobordism elementary_cobordism(const SimplicialComplex& delta, const FlipMove& move);

// Glue b's left end onto a's right end; `iso` maps V(a.right) to V(b.left)
// (identity when omitted and the ends are equal). Colliding labels on b's
// side are renamed. Witnesses concatenate.
PseudoCobordism compose(const PseudoCobordism& a, const PseudoCobordism& b,
                        const std::optional<Isomorphism>& iso = std::nullopt);

// Exact search (memoized on cell subsets) for an order that shells both
// directions; verifies and returns a carried witness first.
std::optional<std::vector<ElemId>> find_bidirectional_shelling(const PseudoCobordism& omega,
                                                               long long budget = 20'000'000);

struct DecomposeStep {
  Face cell;          // vertex set of F_j
  Face A, B;          // reverse/forward restriction faces
  FlipMove move;      // (A_j, B_j) applied to Δ_{j-1}
  SimplicialComplex after;  // Δ_j
};
struct Decomposition {
  std::vector<DecomposeStep> steps;
  std::vector<FlipMove> moves() const;
};

// Walks a verified bidirectional shelling, asserting the interval lemmas at
// every position (glb/lub, A_j ∈ Δ_{j-1} \ Δ_j, link = [A_j, F_j)); emits the
// flip sequence with intermediate complexes.
Decomposition decompose(const PseudoCobordism& omega, const std::vector<ElemId>& order);

// Lemma eliminate-face: Ω = Δ ∪ (τ̄ * K), Δ' = (Δ \ τ) ∪ (∂τ̄ * K); K defaults
// to the cone over lk_Δ(τ) (requires the link shellable).
struct EliminateResult {
  SimplicialComplex delta_prime;
  PseudoCobordism omega;
};
EliminateResult eliminate_face(const SimplicialComplex& delta, const Face& tau,
                               const std::optional<SimplicialComplex>& k_ball = std::nullopt);

// Eliminates every vertex of delta in label order, composes the cobordisms,
// then appends elementary cobordisms for `flip_path` (valid from the final
// eliminated complex). Asserts the two ends share only the empty face.
PseudoCobordism disjoint_ends_cobordism(const SimplicialComplex& delta,
                                        const std::vector<FlipMove>& flip_path = {});

// Stellar subdivision of the poset at the element with vertex set sigma
// (must be unambiguous); ends subdivide by the same apex when they contain
// sigma. A fresh bidirectional witness is searched for.
PseudoCobordism subdivide_cobordism(const PseudoCobordism& omega, const Face& sigma,
                                    long long budget = 20'000'000);

}  // namespace xf
