#include "subdivision/stellar.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace xf {

SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& f, VertexId apex) {
  require(c.has_face(f), "stellar subdivision: face " + f.to_string() + " is not in the complex");
  require(f.dim() >= 1, "stellar subdivision at " + f.to_string() +
                            " is a no-op (vertex starrings are rejected)");
  require(!c.has_vertex(apex), "stellar subdivision: apex '" + apex.label() + "' already in use");
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    if (!f.subset_of(g)) {
      facets.push_back(g);
    } else {
      for (const auto& v : f) facets.push_back(g.set_minus(v).with(apex));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex replay_subdivisions(const SimplicialComplex& c, const SubdivisionLog& log) {
  SimplicialComplex cur = c;
  for (const auto& step : log) cur = stellar_subdivide(cur, step.target, step.apex);
  return cur;
}

std::vector<Face> weld_candidates(const SimplicialComplex& c, VertexId apex) {
  require(c.has_vertex(apex), "weld: '" + apex.label() + "' is not a vertex");
  auto lk = link(c, Face({apex}));
  std::vector<Face> found;
  const auto& lkv = lk.vertices();
  // Candidates are subsets S of V(lk) with |S| >= 2, S ∉ Δ, ∂S̄ ⊆ lk, such
  // that lk factors as ∂S̄ * L'. Small links keep this enumeration cheap.
  require(lkv.size() <= 24, "weld: link too large to search");
  size_t n = lkv.size();
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    std::vector<VertexId> vs;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) vs.push_back(lkv[i]);
    Face s(std::move(vs));
    if (c.has_face(s)) continue;  // need S ∉ Δ
    bool boundary_in = true;
    for (const auto& v : s) {
      if (!lk.has_face(s.set_minus(v))) {
        boundary_in = false;
        break;
      }
    }
    if (!boundary_in) continue;
    // factor: every facet H of lk must satisfy |H ∩ S| = |S| - 1
    std::vector<Face> lprime;
    bool factors = true;
    for (const auto& h : lk.facets()) {
      if (h.set_intersect(s).card() + 1 != s.card()) {
        factors = false;
        break;
      }
      lprime.push_back(h.set_minus(s));
    }
    if (!factors) continue;
    auto lp = SimplicialComplex::from_facets(std::move(lprime));
    // verify lk == ∂S̄ * L' exactly
    std::vector<Face> prod;
    for (const auto& v : s) {
      Face sub = s.set_minus(v);
      if (lp.is_void()) {
        prod.push_back(sub);
      } else {
        for (const auto& h : lp.facets()) prod.push_back(sub.set_union(h));
      }
    }
    if (!(SimplicialComplex::from_facets(std::move(prod)) == lk)) continue;
    found.push_back(s);
  }
  std::sort(found.begin(), found.end());
  return found;
}

SimplicialComplex stellar_weld(const SimplicialComplex& c, VertexId apex,
                               const std::optional<Face>& expected) {
  auto candidates = weld_candidates(c, apex);
  require(!candidates.empty(), "weld: '" + apex.label() + "' is not a subdivision vertex");
  Face f;
  if (expected) {
    bool ok = false;
    for (const auto& cand : candidates)
      if (cand == *expected) ok = true;
    require(ok, "weld: requested face " + expected->to_string() + " is not admissible");
    f = *expected;
  } else {
    f = candidates.front();  // deterministic tie-break: lexicographically smallest
  }
  // rebuild: drop apex faces, insert F̄ * L'
  auto lk = link(c, Face({apex}));
  std::vector<Face> lprime;
  for (const auto& h : lk.facets()) lprime.push_back(h.set_minus(f));
  auto lp = SimplicialComplex::from_facets(std::move(lprime));
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    if (!g.contains(apex)) facets.push_back(g);
  }
  if (lp.is_void()) {
    facets.push_back(f);
  } else {
    for (const auto& h : lp.facets()) facets.push_back(f.set_union(h));
  }
  auto result = SimplicialComplex::from_facets(std::move(facets));
  require(stellar_subdivide(result, f, apex) == c, "weld did not invert a subdivision",
          errc::internal);
  return result;
}

std::pair<SimplicialComplex, SubdivisionLog> flag_subdivide(const SimplicialComplex& simplex_bd,
                                                            const std::vector<Face>& flag) {
  require(!flag.empty(), "flag subdivision: empty flag");
  for (size_t i = 0; i < flag.size(); ++i) {
    require(flag[i].dim() == static_cast<int>(i) + 1,
            "flag subdivision: face " + flag[i].to_string() + " has wrong dimension");
    require(simplex_bd.has_face(flag[i]),
            "flag subdivision: face " + flag[i].to_string() + " is not in the complex");
    if (i > 0)
      require(flag[i - 1].subset_of(flag[i]), "flag subdivision: faces are not nested");
  }
  SimplicialComplex cur = simplex_bd;
  SubdivisionLog log;
  std::vector<VertexId> used(cur.vertices());
  for (size_t i = flag.size(); i-- > 0;) {  // sd_{F_d} first, down to F_1
    VertexId apex = fresh_labels(used, 1)[0];
    used.push_back(apex);
    cur = stellar_subdivide(cur, flag[i], apex);
    log.push_back({flag[i], apex});
  }
  return {cur, log};
}

}  // namespace xf
