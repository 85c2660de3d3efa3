#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/complex.hpp"
#include "core/iso.hpp"

namespace xf {

// A shellable + co-shellable ball D inside the cross-polytope boundary C_d,
// paired with its complement, both over the canonical x_i/y_i labels.
struct CrossFlipTemplate {
  int d = 0;
  SimplicialComplex D;
  SimplicialComplex complement;
  std::string key;  // canonical form of D
  enum class Provenance { basic, general };
  Provenance provenance = Provenance::general;
};

struct CrossFlipCatalog {
  int d = 0;
  std::string mode;  // "basic" | "general"
  std::vector<CrossFlipTemplate> templates;
  const CrossFlipTemplate* by_key(const std::string& key) const;
};

// general: exhaustive over nonempty proper facet subsets of C_d (d <= 3),
// keeping the pure D that are shellable with shellable complement, deduped by
// canonical key. basic: diamonds of proper nonempty facet subsets of
// ∂σ^{d+1}; every basic template also passes the general predicate.
CrossFlipCatalog enumerate_cross_flip_templates(int d, const std::string& mode,
                                                long long budget = 50'000'000);

// A concrete move: where the template's D sits in the complex (an induced
// embedding) and which fresh labels the interior complement vertices take.
struct CrossFlipMove {
  CrossFlipTemplate tmpl;
  Isomorphism embedding;                                 // V(D) -> V(Δ)
  std::vector<std::pair<VertexId, VertexId>> fresh;      // V(comp)\V(D) -> new labels
  std::string to_string() const;
};

// Moves available on Δ for each template, deterministic order, at most
// `limit` embeddings per template.
std::vector<CrossFlipMove> available_cross_flips(const SimplicialComplex& c,
                                                 const CrossFlipCatalog& catalog, size_t limit);

// Fill `fresh` deterministically for an embedding found on c.
CrossFlipMove make_cross_flip_move(const SimplicialComplex& c, const CrossFlipTemplate& t,
                                   const Isomorphism& embedding);

// Replaces the induced image of D by the complement; with a proper coloring,
// new vertices inherit the color of their cross-polytope partner and the
// result is proper (hard error otherwise).
std::pair<SimplicialComplex, std::optional<Coloring>> apply_cross_flip(
    const SimplicialComplex& c, const CrossFlipMove& move,
    const std::optional<Coloring>& kappa = std::nullopt);

// The move undoing `move` after it was applied to c (template sides swapped,
// embedded at the glued complement).
CrossFlipMove inverse_cross_flip(const SimplicialComplex& before, const CrossFlipMove& move);

}  // namespace xf
