#pragma once

#include <string>

#include "core/complex.hpp"

namespace xf {

enum class Verdict { yes, no, unknown };

struct ClassifyReport {
  bool empty = false;          // the void complex
  int dim = -1;
  bool pure = false;
  bool connected = false;
  bool closed_pseudomanifold = false;  // pure + every ridge in exactly two facets
  long long euler = 0;
  // Exact for d <= 2; for d = 3 only the vertex-link checks are exact and the
  // sphere verdict stays heuristic (unknown).
  Verdict closed_manifold = Verdict::unknown;  // d<=2 exact
  Verdict sphere = Verdict::unknown;
  Verdict orientable = Verdict::unknown;       // surfaces only
  bool links_are_2spheres = false;             // d = 3: exact per-link check
  std::string notes;
};

ClassifyReport classify(const SimplicialComplex& c);

const char* verdict_name(Verdict v);

// Convenience wrappers over classify.
bool is_closed_surface(const SimplicialComplex& c);
bool is_2sphere(const SimplicialComplex& c);
// Exact for d <= 2, trusted (pseudomanifold + link heuristics) for d >= 3.
bool closed_manifold_check(const SimplicialComplex& c, bool* exact = nullptr);

}  // namespace xf
