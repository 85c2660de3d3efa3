#pragma once

#include <string>
#include <vector>

#include "core/complex.hpp"

namespace xf {

// Bistellar flip data: replaces Ā * ∂B̄ with ∂Ā * B̄. Applicable on Δ when
// A ∈ Δ, B ∉ Δ and lk_Δ(A) = ∂B̄.
struct FlipMove {
  Face A, B;
  FlipMove inverse() const { return {B, A}; }
  bool operator==(const FlipMove&) const = default;
  std::string to_string() const { return A.to_string() + "->" + B.to_string(); }
};

bool flip_applicable(const SimplicialComplex& c, const FlipMove& m, std::string* why = nullptr);

// All moves (A, B) with lk(A) = ∂B̄ and B ∉ Δ, in deterministic order. Facet
// starrings are listed with a fresh single-vertex B.
std::vector<FlipMove> available_bistellar_flips(const SimplicialComplex& c);

// Errors name the failed applicability condition.
SimplicialComplex apply_bistellar_flip(const SimplicialComplex& c, const FlipMove& m);

}  // namespace xf
