#include "core/classify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace xf {

namespace {

// A 1-complex is a single closed cycle iff it is connected and every vertex
// has degree exactly 2.
bool is_single_cycle(const SimplicialComplex& c) {
  if (c.is_void() || c.dim() != 1 || !c.is_pure()) return false;
  std::map<VertexId, int> deg;
  for (const auto& e : c.facets()) {
    deg[e.verts()[0]]++;
    deg[e.verts()[1]]++;
  }
  for (const auto& [v, d] : deg)
    if (d != 2) return false;
  // connectivity over edges
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : c.facets()) {
    adj[e.verts()[0]].push_back(e.verts()[1]);
    adj[e.verts()[1]].push_back(e.verts()[0]);
  }
  std::set<VertexId> seen;
  std::queue<VertexId> q;
  q.push(c.vertices()[0]);
  seen.insert(c.vertices()[0]);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) q.push(w);
  }
  return seen.size() == c.vertices().size();
}

bool vertex_connected(const SimplicialComplex& c) {
  if (c.vertices().empty()) return true;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : c.faces_of_dim(1)) {
    adj[e.verts()[0]].push_back(e.verts()[1]);
    adj[e.verts()[1]].push_back(e.verts()[0]);
  }
  std::set<VertexId> seen;
  std::queue<VertexId> q;
  q.push(c.vertices()[0]);
  seen.insert(c.vertices()[0]);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) q.push(w);
  }
  return seen.size() == c.vertices().size();
}

// Orientability of a closed surface via orientation propagation across the
// facet-ridge graph.
Verdict surface_orientable(const SimplicialComplex& c) {
  const auto& facets = c.facets();
  std::map<Face, std::vector<int>> by_ridge;
  for (size_t i = 0; i < facets.size(); ++i) {
    for (const auto& v : facets[i]) by_ridge[facets[i].set_minus(v)].push_back(static_cast<int>(i));
  }
  // Orientation of a triangle = even/odd permutation class of its sorted
  // vertex list; store a sign and demand adjacent facets induce opposite
  // orientations on the shared edge.
  std::vector<int> sign(facets.size(), 0);
  for (size_t start = 0; start < facets.size(); ++start) {
    if (sign[start]) continue;
    sign[start] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (const auto& v : facets[i]) {
        Face ridge = facets[i].set_minus(v);
        for (int j : by_ridge[ridge]) {
          if (j == i) continue;
          // Induced orientation of `ridge` in facet i with sign s: a facet
          // {a<b<c} with sign + induces ab, bc, ca. Two facets agree iff they
          // induce the ridge in opposite directions.
          auto induced_dir = [&](int fi) {
            const auto& vs = facets[fi].verts();
            // position of the omitted vertex decides the parity
            Face om = facets[fi].set_minus(ridge);
            int pos = 0;
            for (size_t t = 0; t < vs.size(); ++t)
              if (vs[t] == om.verts()[0]) pos = static_cast<int>(t);
            return (pos % 2 == 0) ? 1 : -1;  // direction of ridge as (lo,hi) * parity
          };
          int need = -sign[i] * induced_dir(i) * induced_dir(j);
          if (sign[j] == 0) {
            sign[j] = need;
            q.push(j);
          } else if (sign[j] != need) {
            return Verdict::no;
          }
        }
      }
    }
  }
  return Verdict::yes;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

ClassifyReport classify(const SimplicialComplex& c) {
  ClassifyReport r;
  if (c.is_void()) {
    r.empty = true;
    r.notes = "empty complex";
    return r;
  }
  r.dim = *c.dim();
  r.pure = c.is_pure();
  r.connected = vertex_connected(c);
  r.euler = f_vector(c).euler();

  if (r.pure && r.dim >= 1) {
    std::map<Face, int> ridge_count;
    for (const auto& g : c.facets())
      for (const auto& v : g) ridge_count[g.set_minus(v)]++;
    r.closed_pseudomanifold = true;
    for (const auto& [f, n] : ridge_count) {
      if (n != 2) {
        r.closed_pseudomanifold = false;
        break;
      }
    }
  }

  if (r.dim == 0) {
    r.closed_manifold = r.pure ? Verdict::yes : Verdict::no;
    r.sphere = (r.pure && c.vertices().size() == 2) ? Verdict::yes : Verdict::no;
  } else if (r.dim == 1) {
    bool closed = r.pure && r.closed_pseudomanifold;  // every vertex in two edges
    if (closed) {
      std::map<VertexId, int> deg;
      for (const auto& e : c.facets()) {
        deg[e.verts()[0]]++;
        deg[e.verts()[1]]++;
      }
      for (const auto& [v, d] : deg)
        if (d != 2) closed = false;
    }
    r.closed_manifold = closed ? Verdict::yes : Verdict::no;
    r.sphere = (closed && r.connected && is_single_cycle(c)) ? Verdict::yes : Verdict::no;
    r.orientable = closed ? Verdict::yes : Verdict::unknown;
  } else if (r.dim == 2) {
    // Exact combinatorial-surface check: every edge in exactly two facets and
    // every vertex link a single cycle.
    bool surface = r.pure && r.closed_pseudomanifold;
    if (surface) {
      for (const auto& v : c.vertices()) {
        if (!is_single_cycle(link(c, Face({v})))) {
          surface = false;
          break;
        }
      }
    }
    r.closed_manifold = surface ? Verdict::yes : Verdict::no;
    r.sphere = (surface && r.connected && r.euler == 2) ? Verdict::yes : Verdict::no;
    if (surface) r.orientable = surface_orientable(c);
  } else if (r.dim == 3) {
    r.links_are_2spheres = r.pure;
    if (r.pure) {
      for (const auto& v : c.vertices()) {
        auto lk = link(c, Face({v}));
        auto lr = classify(lk);
        if (lr.sphere != Verdict::yes) {
          r.links_are_2spheres = false;
          break;
        }
      }
    }
    r.closed_manifold =
        (r.links_are_2spheres && r.closed_pseudomanifold) ? Verdict::yes : Verdict::no;
    r.sphere = Verdict::unknown;  // 3-sphere recognition is out of scope
    r.notes = "sphere status heuristic-only for d >= 3";
  } else {
    r.closed_manifold = Verdict::unknown;
    r.sphere = Verdict::unknown;
    r.notes = "manifold checks beyond vertex links are not implemented for d > 3";
  }
  return r;
}

bool is_closed_surface(const SimplicialComplex& c) {
  auto r = classify(c);
  return r.dim == 2 && r.closed_manifold == Verdict::yes;
}

bool is_2sphere(const SimplicialComplex& c) {
  auto r = classify(c);
  return r.dim == 2 && r.sphere == Verdict::yes;
}

bool closed_manifold_check(const SimplicialComplex& c, bool* exact) {
  auto r = classify(c);
  if (exact) *exact = r.dim <= 2;
  if (r.dim <= 2) return r.closed_manifold == Verdict::yes;
  return r.closed_pseudomanifold;
}

}  // namespace xf
