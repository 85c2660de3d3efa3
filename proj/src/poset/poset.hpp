#pragma once

#include <map>
#include <optional>
#include <vector>

#include "core/coloring.hpp"
#include "core/complex.hpp"

namespace xf {

using ElemId = int;

struct PosetElem {
  int rank = 0;                   // number of vertices; dimension = rank - 1
  std::vector<VertexId> verts;    // sorted, multiplicity-free
  std::vector<ElemId> covers;     // elements of rank-1 covered by this one
};

// Ranked face poset with a unique bottom element and Boolean lower intervals.
// Vertex labels are unique per rank-1 element; higher elements may be
// parallel (same vertex set, distinct ids).
class SimplicialPoset {
public:
  static SimplicialPoset from_complex(const SimplicialComplex& c);
  // Raw constructor; runs validate().
  static SimplicialPoset from_elements(std::vector<PosetElem> elems);

  size_t size() const { return elems_.size(); }
  const PosetElem& elem(ElemId e) const { return elems_[e]; }
  ElemId bottom() const { return 0; }
  int dim() const;

  const std::vector<ElemId>& covered_by(ElemId e) const { return covered_by_[e]; }
  std::vector<ElemId> elements_of_rank(int rank) const;
  std::vector<ElemId> maximal_elements() const;

  bool leq(ElemId a, ElemId b) const;             // a ≤ b
  std::vector<ElemId> lower_set(ElemId e) const;  // [∅, e]
  std::vector<ElemId> upper_set(ElemId e) const;  // poset link: {x : e ≤ x}

  // The unique element below tau with the given vertex set.
  ElemId sub_element(ElemId tau, const Face& subset) const;

  // Element lookup by vertex set; errors when parallel copies make the vertex
  // set ambiguous.
  std::optional<ElemId> element_for(const Face& verts) const;

  // For a complex-shaped poset (no parallel faces inside the given ideal):
  // the simplicial complex on the elements' vertex sets. Errors on parallels.
  SimplicialComplex ideal_to_complex(const std::vector<ElemId>& ideal) const;

  // Checks Boolean intervals constructively: an element of rank k has exactly
  // k rank-1 members, C(k,j) rank-j members with distinct vertex sets, and
  // rank-2 elements have two distinct endpoints.
  void validate() const;

  // Attach one fresh (rank |cell|) simplex: `region` lists the attaching
  // facets of its boundary and the elements they glue to. The rest of the
  // boundary is created fresh. Labels of glued faces must match.
  SimplicialPoset attach_cell(const Face& cell, const std::vector<std::pair<Face, ElemId>>& region,
                              std::vector<ElemId>* cell_elems_out = nullptr) const;

  // Stellar subdivision at an element: (P \ σ) ∪ ([∅,a] * [∅,σ) * lk(σ)).
  struct Subdivision;
  Subdivision stellar_subdivide(ElemId sigma, VertexId apex) const;

  const std::vector<VertexId>& all_labels() const { return labels_; }

private:
  std::vector<PosetElem> elems_;
  std::vector<std::vector<ElemId>> covered_by_;
  std::vector<VertexId> labels_;
  void finish();  // derived structures + validate
};

struct SimplicialPoset::Subdivision {
  SimplicialPoset P;
  std::vector<ElemId> survivor;                     // old id -> new id or -1
  std::map<std::pair<ElemId, Face>, ElemId> piece;  // (mu >= sigma, rho ⊊ V(sigma)) -> id
  VertexId apex;
};

struct RelShellingCheck {
  std::optional<std::vector<Face>> restrictions;  // vertex sets of r(F_j)
  int violation = -1;
};

// Relative shelling of (P, Q) for a lower order ideal Q (flags per element):
// restriction faces by the covered-face criterion, or first violation.
RelShellingCheck relative_shelling_verify(const SimplicialPoset& p, const std::vector<char>& in_q,
                                          const std::vector<ElemId>& order);

// The ideal generated by a set of elements (downward closure), as flags.
std::vector<char> ideal_closure(const SimplicialPoset& p, const std::vector<ElemId>& gens);

struct PosetColoringResult {
  SimplicialPoset P;
  Coloring coloring;
  struct Step {
    Face target;
    VertexId apex;
    int color;
    size_t dull_before;
  };
  std::vector<Step> log;
};

// Dull-face coloring extension on posets, mirroring the complex version: Q is
// a lower ideal whose faces are never subdivided.
PosetColoringResult extend_coloring_poset(const SimplicialPoset& p, const std::vector<char>& in_q,
                                          const Coloring& kappa, int m);

}  // namespace xf
