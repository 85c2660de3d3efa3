#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/complex.hpp"

namespace xf {

// Bijective vertex association mapping faces to faces in both directions.
struct Isomorphism {
  std::vector<std::pair<VertexId, VertexId>> map;  // sorted by first
  VertexId image(VertexId v) const;
  Face image(const Face& f) const;
  SimplicialComplex image(const SimplicialComplex& c) const;
  Isomorphism inverse() const;
};

struct CanonOptions {
  long long node_budget = 20'000'000;  // hard error on exhaustion, never a wrong answer
  const Coloring* colors = nullptr;    // color-respecting canonical form
};

// Canonical key: equal iff the complexes are isomorphic (color-respecting when
// colors are supplied). Exact; throws errc::budget on exhaustion.
std::string canonical_form(const SimplicialComplex& c, const CanonOptions& opts = {});

struct CanonResult {
  std::string key;
  std::vector<VertexId> order;  // order[i] = vertex placed at canonical position i
};
CanonResult canonical_form_full(const SimplicialComplex& c, const CanonOptions& opts = {});

std::optional<Isomorphism> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                            const CanonOptions& opts = {});
// Color-respecting isomorphism: ka(v) == kb(iso(v)).
std::optional<Isomorphism> find_colored_isomorphism(const SimplicialComplex& a, const Coloring& ka,
                                                    const SimplicialComplex& b, const Coloring& kb);

// Vertex injections mapping d isomorphically onto induced subcomplexes of c,
// in deterministic order, truncated at limit.
std::vector<Isomorphism> find_induced_embeddings(const SimplicialComplex& d,
                                                 const SimplicialComplex& c, size_t limit,
                                                 bool distinct_images_only = false);

}  // namespace xf
