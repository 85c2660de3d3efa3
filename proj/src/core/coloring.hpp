#pragma once

#include <map>
#include <optional>
#include <string>

#include "core/complex.hpp"

namespace xf {
class Rng;

// Vertex coloring with palette {0..m-1}. Properness is a checkable predicate,
// not a construction invariant.
class Coloring {
public:
  Coloring() = default;
  explicit Coloring(int m) : m_(m) {}

  int palette_size() const { return m_; }
  void set_palette_size(int m);

  void set(VertexId v, int color);
  std::optional<int> get(VertexId v) const;
  int at(VertexId v) const;  // errors if uncolored
  bool colors(VertexId v) const { return a_.count(v) > 0; }
  size_t size() const { return a_.size(); }

  const std::map<VertexId, int>& assignment() const { return a_; }

  Coloring restricted_to(const std::vector<VertexId>& vs) const;
  bool operator==(const Coloring&) const = default;

private:
  std::map<VertexId, int> a_;
  int m_ = 0;
};

// True iff every vertex of c is colored and no edge is monochromatic; errors
// on an uncolored vertex, naming it.
bool is_proper(const SimplicialComplex& c, const Coloring& k);

// Exact backtracking; returns a proper m-coloring or definitive absence.
// Vertices are tried by decreasing degree.
std::optional<Coloring> find_proper_coloring(const SimplicialComplex& c, int m);
// Randomized variant used to sample colorings (still exact for absence).
std::optional<Coloring> find_proper_coloring_random(const SimplicialComplex& c, int m, Rng& rng);

}  // namespace xf
