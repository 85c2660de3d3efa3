#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "core/classify.hpp"
#include "core/complex.hpp"
#include "core/generate.hpp"
#include "flips/bistellar.hpp"
#include "util/rng.hpp"

namespace xf::test {

// Brute-force face enumeration independent of SimplicialComplex::all_faces:
// dedupes subsets of the facet list directly.
inline std::vector<long long> brute_face_counts(const std::vector<Face>& facets) {
  std::set<Face> seen;
  for (const auto& g : facets)
    for (const auto& s : all_subsets_of(g)) seen.insert(s);
  std::vector<long long> counts;
  for (const auto& f : seen) {
    if (counts.size() <= f.card()) counts.resize(f.card() + 1, 0);
    ++counts[f.card()];
  }
  return counts;
}

// Independent shelling oracle: tries every facet permutation (<= 8 facets)
// against the textbook pure-intersection condition.
inline bool brute_force_shellable(const SimplicialComplex& c) {
  std::vector<Face> facets(c.facets());
  if (facets.size() <= 1) return true;
  int d = *c.dim();
  std::vector<int> perm(facets.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  auto ok_prefix = [&](size_t upto) {
    // F̄_upto ∩ (∪ earlier) pure of dim d-1 and nonempty
    const Face& fj = facets[perm[upto]];
    std::vector<Face> inters;
    for (size_t i = 0; i < upto; ++i) inters.push_back(fj.set_intersect(facets[perm[i]]));
    bool any = false;
    for (const auto& m : inters)
      if (m.dim() == d - 1) any = true;
    if (!any) return false;
    for (const auto& m : inters) {
      if (m.dim() == d - 1) continue;
      bool covered = false;
      for (const auto& r : inters)
        if (r.dim() == d - 1 && m.subset_of(r)) covered = true;
      if (!covered) return false;
    }
    return true;
  };
  // DFS over permutations with prefix pruning
  std::vector<char> used(facets.size(), 0);
  std::vector<int> cur;
  std::function<bool()> dfs = [&]() -> bool {
    if (cur.size() == facets.size()) return true;
    for (size_t f = 0; f < facets.size(); ++f) {
      if (used[f]) continue;
      perm[cur.size()] = static_cast<int>(f);
      if (!cur.empty() && !ok_prefix(cur.size())) continue;
      used[f] = 1;
      cur.push_back(static_cast<int>(f));
      if (dfs()) return true;
      cur.pop_back();
      used[f] = 0;
    }
    return false;
  };
  return dfs();
}

// Random 2-sphere: drift from the simplex boundary by random bistellar flips,
// keeping the facet count within bounds.
inline SimplicialComplex random_sphere(Rng& rng, int steps, size_t max_facets = 24) {
  SimplicialComplex s = make_simplex_boundary(3);
  for (int i = 0; i < steps; ++i) {
    auto avail = available_bistellar_flips(s);
    std::vector<FlipMove> ok;
    for (const auto& m : avail) {
      if (s.facet_count() >= max_facets && m.B.card() <= m.A.card()) continue;
      ok.push_back(m);
    }
    if (ok.empty()) ok = avail;
    s = apply_bistellar_flip(s, ok[rng.below(ok.size())]);
  }
  return s;
}

inline SimplicialComplex relabeled_randomly(const SimplicialComplex& c, Rng& rng) {
  auto fresh = fresh_labels(c.vertices(), c.vertices().size(), "p");
  std::vector<VertexId> shuffled(fresh);
  for (size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
  std::vector<std::pair<VertexId, VertexId>> map;
  for (size_t i = 0; i < c.vertices().size(); ++i) map.push_back({c.vertices()[i], shuffled[i]});
  return relabel(c, map);
}

// A balanced torus: barycentric subdivision of the 7-vertex torus.
inline std::pair<SimplicialComplex, Coloring> balanced_torus() {
  std::vector<Face> facets;
  // Möbius–Kantor 7-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7
  for (int i = 0; i < 7; ++i) {
    auto v = [&](int k) { return VertexId::of("t" + std::to_string((i + k) % 7)); };
    facets.push_back(Face({v(0), v(1), v(3)}));
    facets.push_back(Face({v(0), v(2), v(3)}));
  }
  auto t7 = SimplicialComplex::from_facets(std::move(facets));
  return barycentric_subdivision(t7);
}

}  // namespace xf::test
