#pragma once

#include <optional>
#include <vector>

#include "core/complex.hpp"
#include "flips/bistellar.hpp"

namespace xf {

struct ShellingOrder {
  std::vector<Face> facets;
  std::vector<Face> restrictions;  // r(F_j) per position
};

struct ShellingCheck {
  std::optional<ShellingOrder> order;  // filled with restrictions when valid
  int violation = -1;                  // first bad position otherwise
};

// Interval criterion: F̄_j \ ∪_{i<j} F̄_i = [r(F_j), F_j]. The restriction is
// computed by the vertex criterion (v ∈ r(F_j) iff F_j\v lies in an earlier
// facet) and validated.
ShellingCheck verify_shelling(const SimplicialComplex& c, const std::vector<Face>& order);

// Exact backtracking with memoized facet-subset states. Returns a witness
// extending `prefix`, or nullopt for definitive absence. Throws errc::budget
// when the node budget runs out (a distinct outcome from "not shellable").
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           const std::vector<Face>& prefix = {},
                                           long long budget = 50'000'000);

// D given by its facets inside cross (the boundary of a cross-polytope):
// true iff the complementary pure subcomplex is shellable.
bool is_co_shellable(const SimplicialComplex& cross, const SimplicialComplex& d,
                     long long budget = 50'000'000);

// Grow a shellable ball by one facet; returns the grown complex plus the
// bistellar move relating the two boundaries (Lemma: elementary shellings
// flip the boundary).
std::pair<SimplicialComplex, FlipMove> shelling_step_boundary(const SimplicialComplex& ball,
                                                              const Face& new_facet);

// apex * shelling of c shells the cone.
ShellingOrder cone_shelling(VertexId apex, const ShellingOrder& base);

// Transforms a shelling of `before` into one of sd_F(before) by expanding
// each facet containing F into its starred block (restriction vertices in
// r_j ∩ F first). The output is re-verified.
ShellingOrder subdivide_shelling(const SimplicialComplex& before, const ShellingOrder& order,
                                 const Face& f, VertexId apex);

// Shellability over subsets of a fixed ambient facet list, memoized on the
// subset lattice; used by the cross-flip catalog (ambient = C_d).
class SubsetShellability {
public:
  explicit SubsetShellability(std::vector<Face> ambient_facets);
  size_t size() const { return facets_.size(); }
  // Precompute reachability for every subset (needs size() <= 22).
  void build_all();
  bool shellable(uint32_t mask) const;
  std::vector<int> witness_order(uint32_t mask) const;  // indices into ambient
  const std::vector<Face>& facets() const { return facets_; }

private:
  bool valid_step(uint32_t used, int f) const;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> inter_;  // pairwise intersections
  int dim_ = 0;
  std::vector<uint8_t> reach_;   // subset -> reachable by a shelling
  std::vector<int8_t> parent_;   // last facet added for witness extraction
};

}  // namespace xf
