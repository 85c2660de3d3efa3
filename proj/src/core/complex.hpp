#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/face.hpp"

namespace xf {

struct FVector {
  // counts[k] = number of faces with k vertices, so counts[0] = f_{-1} = 1
  // for every nonempty complex.
  std::vector<long long> counts;
  long long euler() const;  // alternating sum of f_0..f_d
  bool operator==(const FVector&) const = default;
  std::string to_string() const;
};

// Immutable simplicial complex stored by its inclusion-maximal faces.
// Membership is answered by subset tests against facets; a full face
// enumeration is memoized on demand for small complexes.
class SimplicialComplex {
public:
  SimplicialComplex() = default;  // void complex: no faces at all

  static SimplicialComplex from_facets(std::vector<Face> faces);

  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  // nullopt for the void complex ("empty"); -1 for the complex {∅}.
  std::optional<int> dim() const;
  bool is_pure() const;

  bool has_face(const Face& f) const;
  bool has_vertex(VertexId v) const;

  // All faces grouped by cardinality: result[k] = sorted faces with k
  // vertices. result[0] = {∅} whenever the complex is nonempty. Errors if the
  // enumeration would exceed the desk-scale cap (2^20 faces).
  const std::vector<std::vector<Face>>& all_faces() const;
  std::vector<Face> faces_of_dim(int d) const;
  size_t face_count() const;

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

  // Canonical text serialization: one facet per line, vertices sorted within
  // a facet, facets sorted lexicographically.
  std::string to_text() const;

private:
  std::vector<Face> facets_;      // sorted, pairwise inclusion-incomparable
  std::vector<VertexId> vertices_;

  struct Memo {
    std::mutex mx;
    std::shared_ptr<const std::vector<std::vector<Face>>> table;
  };
  mutable std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

FVector f_vector(const SimplicialComplex& c);

// lk_Δ(F); errors if F ∉ Δ.
SimplicialComplex link(const SimplicialComplex& c, const Face& f);
// st_Δ(F) as a complex (= F̄ * lk_Δ(F)); errors if F ∉ Δ.
SimplicialComplex closed_star(const SimplicialComplex& c, const Face& f);
// Δ \ F = {G ∈ Δ : F ⊄ G}; deleting an absent face is the identity.
SimplicialComplex delete_face(const SimplicialComplex& c, const Face& f);

// Join; errors if vertex sets overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// Join after relabeling colliding vertices of b with fresh labels; returns
// the complex and the relabeling applied to b.
std::pair<SimplicialComplex, std::vector<std::pair<VertexId, VertexId>>> join_relabel(
    const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<VertexId>& w);
// Whether d (a subcomplex of c; errors otherwise) is induced in c.
bool is_induced(const SimplicialComplex& c, const SimplicialComplex& d);
bool is_subcomplex(const SimplicialComplex& c, const SimplicialComplex& d);

// Pure complexes only: the subcomplex generated by ridges lying in exactly
// one facet.
SimplicialComplex boundary_complex(const SimplicialComplex& c);

// cone = apex * c; apex must be fresh.
SimplicialComplex cone(VertexId apex, const SimplicialComplex& c);

SimplicialComplex relabel(const SimplicialComplex& c,
                          const std::vector<std::pair<VertexId, VertexId>>& map);

// `count` labels never colliding with anything in `used`; reserved prefix '~'
// plus a monotone counter, so logs replay deterministically.
std::vector<VertexId> fresh_labels(const std::vector<VertexId>& used, size_t count,
                                   const std::string& stem = "");
VertexId fresh_label(const SimplicialComplex& c, const std::string& stem = "");

}  // namespace xf
