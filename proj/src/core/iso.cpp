#include "core/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "util/error.hpp"

namespace xf {

VertexId Isomorphism::image(VertexId v) const {
  auto it = std::lower_bound(map.begin(), map.end(), v,
                             [](const auto& p, VertexId x) { return p.first < x; });
  require(it != map.end() && it->first == v,
          "isomorphism does not cover vertex '" + v.label() + "'");
  return it->second;
}

Face Isomorphism::image(const Face& f) const {
  std::vector<VertexId> vs;
  vs.reserve(f.card());
  for (const auto& v : f) vs.push_back(image(v));
  return Face(std::move(vs));
}

SimplicialComplex Isomorphism::image(const SimplicialComplex& c) const {
  std::vector<Face> facets;
  for (const auto& g : c.facets()) facets.push_back(image(g));
  return SimplicialComplex::from_facets(std::move(facets));
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism inv;
  for (const auto& [a, b] : map) inv.map.push_back({b, a});
  std::sort(inv.map.begin(), inv.map.end());
  return inv;
}

namespace {

// Local view of a complex for canonical labeling: vertices 0..n-1, facets as
// sorted index vectors, 1-skeleton adjacency as bitsets (n <= 64 words split).
struct LocalComplex {
  std::vector<VertexId> verts;               // index -> vertex, label-sorted
  std::vector<std::vector<int>> facets;      // sorted index lists
  std::vector<std::vector<char>> adj;        // n x n adjacency
  std::vector<int> color;                    // user colors or 0

  static LocalComplex build(const SimplicialComplex& c, const Coloring* colors) {
    LocalComplex lc;
    lc.verts = c.vertices();
    std::map<VertexId, int> idx;
    for (size_t i = 0; i < lc.verts.size(); ++i) idx[lc.verts[i]] = static_cast<int>(i);
    for (const auto& g : c.facets()) {
      std::vector<int> f;
      for (const auto& v : g) f.push_back(idx[v]);
      std::sort(f.begin(), f.end());
      lc.facets.push_back(std::move(f));
    }
    size_t n = lc.verts.size();
    lc.adj.assign(n, std::vector<char>(n, 0));
    for (const auto& f : lc.facets) {
      for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j) lc.adj[f[i]][f[j]] = lc.adj[f[j]][f[i]] = 1;
    }
    lc.color.assign(n, 0);
    if (colors) {
      for (size_t i = 0; i < n; ++i) {
        auto c0 = colors->get(lc.verts[i]);
        require(c0.has_value(), "canonical form: vertex '" + lc.verts[i].label() + "' uncolored");
        lc.color[i] = *c0 + 1;
      }
    }
    return lc;
  }
};

// Equitable-ish refinement: vertex keys start from (user color, degree,
// multiset of incident facet sizes) and are iterated with sorted neighbor
// keys until the partition stabilizes. Any deterministic function of
// isomorphism-invariant data keeps the search exact.
std::vector<int> refine_classes(const LocalComplex& lc, const std::vector<int>& seed) {
  size_t n = lc.verts.size();
  std::vector<int> cls = seed;
  for (size_t round = 0; round < n + 2; ++round) {
    std::vector<std::vector<long long>> key(n);
    for (size_t v = 0; v < n; ++v) {
      std::vector<long long> k;
      k.push_back(cls[v]);
      std::vector<int> nb;
      for (size_t u = 0; u < n; ++u)
        if (lc.adj[v][u]) nb.push_back(cls[u]);
      std::sort(nb.begin(), nb.end());
      for (int x : nb) k.push_back(x);
      key[v] = std::move(k);
    }
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return key[a] < key[b]; });
    std::vector<int> next(n);
    int c = 0;
    for (size_t i = 0; i < n; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    if (next == cls) break;
    cls = next;
  }
  return cls;
}

std::vector<int> initial_classes(const LocalComplex& lc) {
  size_t n = lc.verts.size();
  std::vector<std::vector<long long>> key(n);
  for (size_t v = 0; v < n; ++v) {
    std::vector<long long> sizes;
    int deg = 0;
    for (const auto& f : lc.facets)
      if (std::binary_search(f.begin(), f.end(), static_cast<int>(v)))
        sizes.push_back(static_cast<long long>(f.size()));
    for (size_t u = 0; u < n; ++u) deg += lc.adj[v][u];
    std::sort(sizes.begin(), sizes.end());
    key[v] = {lc.color[v], deg};
    key[v].insert(key[v].end(), sizes.begin(), sizes.end());
  }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return key[a] < key[b]; });
  std::vector<int> cls(n);
  int c = 0;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && key[order[i]] != key[order[i - 1]]) ++c;
    cls[order[i]] = c;
  }
  return refine_classes(lc, cls);
}

// Canonical labeling search. The key being minimized is the concatenation of
// per-position "rows" (user color + adjacency to earlier positions) followed
// by the facet encoding; both parts are label-independent, so the minimum
// over all refinement-respecting orderings is a canonical invariant.
struct CanonSearch {
  const LocalComplex& lc;
  long long budget;
  long long nodes = 0;

  std::vector<int> best_perm;           // vertex index at each position
  std::vector<std::string> best_rows;   // per-position rows of the best
  bool have_best = false;
  std::string best_facets;

  std::vector<int> pos_of;  // vertex -> assigned position or -1
  std::vector<int> perm;
  std::vector<std::string> rows;

  explicit CanonSearch(const LocalComplex& l, long long b) : lc(l), budget(b) {
    pos_of.assign(lc.verts.size(), -1);
  }

  std::string row_for(int v, size_t upto) const {
    std::string r;
    r.reserve(upto + 4);
    r += static_cast<char>('A' + (lc.color[v] % 26));
    r += std::to_string(lc.color[v]);
    r += ':';
    for (size_t p = 0; p < upto; ++p) r += lc.adj[v][perm[p]] ? '1' : '0';
    return r;
  }

  std::string facet_encoding() const {
    std::vector<std::vector<int>> enc;
    for (const auto& f : lc.facets) {
      std::vector<int> e;
      for (int v : f) e.push_back(pos_of[v]);
      std::sort(e.begin(), e.end());
      enc.push_back(std::move(e));
    }
    std::sort(enc.begin(), enc.end());
    std::string s;
    for (const auto& e : enc) {
      for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
      }
      s += ';';
    }
    return s;
  }

  // cmp < 0: current prefix was strictly better than the best at the time it
  // diverged; used only to disable pruning, the leaf re-compares in full.
  void dfs(std::vector<int> cls, int cmp) {
    if (++nodes > budget) fail(errc::budget, "canonical form: node budget exhausted");
    size_t n = lc.verts.size();
    size_t level = perm.size();
    if (level == n) {
      std::string fe = facet_encoding();
      bool better = !have_best;
      if (have_best) {
        if (rows != best_rows) {
          better = std::lexicographical_compare(rows.begin(), rows.end(), best_rows.begin(),
                                                best_rows.end());
        } else {
          better = fe < best_facets;
        }
      }
      if (better) {
        have_best = true;
        best_perm = perm;
        best_rows = rows;
        best_facets = fe;
      }
      return;
    }
    // target cell: smallest class id among unassigned vertices
    int target = -1;
    for (size_t v = 0; v < n; ++v) {
      if (pos_of[v] < 0 && (target < 0 || cls[v] < cls[target])) target = static_cast<int>(v);
    }
    std::vector<int> cell;
    for (size_t v = 0; v < n; ++v)
      if (pos_of[v] < 0 && cls[v] == cls[target]) cell.push_back(static_cast<int>(v));

    for (int v : cell) {
      std::string row = row_for(v, level);
      int ncmp = cmp;
      if (ncmp == 0 && have_best) {
        if (level < best_rows.size()) {
          if (row > best_rows[level]) continue;  // prune: cannot beat best
          if (row < best_rows[level]) ncmp = -1;
        }
      }
      perm.push_back(v);
      pos_of[v] = static_cast<int>(level);
      rows.push_back(row);
      // individualize v, refine
      std::vector<int> cls2 = cls;
      int mx = 0;
      for (size_t u = 0; u < n; ++u) mx = std::max(mx, cls2[u]);
      cls2[v] = mx + 1;
      cls2 = refine_classes(lc, cls2);
      dfs(std::move(cls2), ncmp);
      rows.pop_back();
      pos_of[v] = -1;
      perm.pop_back();
    }
  }
};

}  // namespace

CanonResult canonical_form_full(const SimplicialComplex& c, const CanonOptions& opts) {
  CanonResult res;
  if (c.is_void()) {
    res.key = "void";
    return res;
  }
  LocalComplex lc = LocalComplex::build(c, opts.colors);
  if (lc.verts.empty()) {  // the complex {∅}
    res.key = "n0;";
    return res;
  }
  CanonSearch s(lc, opts.node_budget);
  s.dfs(initial_classes(lc), 0);
  require(s.have_best, "canonical form search failed", errc::internal);
  std::string key = "n" + std::to_string(lc.verts.size()) + ";";
  for (const auto& r : s.best_rows) key += r + "|";
  key += "#" + s.best_facets;
  res.key = std::move(key);
  res.order.resize(lc.verts.size());
  for (size_t p = 0; p < s.best_perm.size(); ++p) res.order[p] = lc.verts[s.best_perm[p]];
  return res;
}

std::string canonical_form(const SimplicialComplex& c, const CanonOptions& opts) {
  return canonical_form_full(c, opts).key;
}

namespace {

std::optional<Isomorphism> iso_from_canon(const SimplicialComplex& a, const SimplicialComplex& b,
                                          const CanonOptions& oa, const CanonOptions& ob) {
  if (a.vertices().size() != b.vertices().size() || a.facet_count() != b.facet_count())
    return std::nullopt;
  if (f_vector(a) != f_vector(b)) return std::nullopt;
  auto ca = canonical_form_full(a, oa);
  auto cb = canonical_form_full(b, ob);
  if (ca.key != cb.key) return std::nullopt;
  Isomorphism iso;
  for (size_t i = 0; i < ca.order.size(); ++i) iso.map.push_back({ca.order[i], cb.order[i]});
  std::sort(iso.map.begin(), iso.map.end());
  // paranoia: verify the witness
  require(iso.image(a) == b, "canonical orderings disagree", errc::internal);
  return iso;
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                            const CanonOptions& opts) {
  return iso_from_canon(a, b, opts, opts);
}

std::optional<Isomorphism> find_colored_isomorphism(const SimplicialComplex& a, const Coloring& ka,
                                                    const SimplicialComplex& b, const Coloring& kb) {
  CanonOptions oa, ob;
  oa.colors = &ka;
  ob.colors = &kb;
  return iso_from_canon(a, b, oa, ob);
}

std::vector<Isomorphism> find_induced_embeddings(const SimplicialComplex& d,
                                                 const SimplicialComplex& c, size_t limit,
                                                 bool distinct_images_only) {
  std::vector<Isomorphism> out;
  if (limit == 0 || d.is_void()) return out;
  if (d.vertices().size() > c.vertices().size()) return out;

  const auto& dv = d.vertices();
  const auto& cv = c.vertices();
  size_t nd = dv.size(), nc = cv.size();

  // adjacency matrices
  auto adj_of = [](const SimplicialComplex& x) {
    std::map<VertexId, int> idx;
    for (size_t i = 0; i < x.vertices().size(); ++i) idx[x.vertices()[i]] = static_cast<int>(i);
    std::vector<std::vector<char>> adj(x.vertices().size(),
                                       std::vector<char>(x.vertices().size(), 0));
    for (const auto& e : x.faces_of_dim(1)) {
      int a = idx[e.verts()[0]], b = idx[e.verts()[1]];
      adj[a][b] = adj[b][a] = 1;
    }
    return adj;
  };
  auto dadj = adj_of(d);
  auto cadj = adj_of(c);

  // map D's vertices most-constrained-first: greedy max adjacency to earlier
  std::vector<int> dorder;
  {
    std::vector<char> used(nd, 0);
    for (size_t step = 0; step < nd; ++step) {
      int bestv = -1, bestscore = -1;
      for (size_t v = 0; v < nd; ++v) {
        if (used[v]) continue;
        int score = 0;
        for (int u : dorder) score += dadj[v][u];
        if (score > bestscore) {
          bestscore = score;
          bestv = static_cast<int>(v);
        }
      }
      used[bestv] = 1;
      dorder.push_back(bestv);
    }
  }

  std::set<std::vector<VertexId>> seen_images;
  std::vector<int> assign(nd, -1);
  std::vector<char> taken(nc, 0);

  std::function<void(size_t)> dfs = [&](size_t step) {
    if (out.size() >= limit) return;
    if (step == nd) {
      Isomorphism iso;
      std::vector<VertexId> image;
      for (size_t i = 0; i < nd; ++i) {
        iso.map.push_back({dv[i], cv[assign[i]]});
        image.push_back(cv[assign[i]]);
      }
      std::sort(iso.map.begin(), iso.map.end());
      std::sort(image.begin(), image.end());
      // exact induced-isomorphic check
      auto sub = induced_subcomplex(c, image);
      if (!(iso.image(d) == sub)) return;
      if (distinct_images_only && !seen_images.insert(image).second) return;
      out.push_back(std::move(iso));
      return;
    }
    int v = dorder[step];
    for (size_t x = 0; x < nc; ++x) {
      if (taken[x]) continue;
      bool ok = true;
      for (size_t p = 0; p < step; ++p) {
        int u = dorder[p];
        // induced: edges and non-edges must both be preserved
        if (dadj[v][u] != cadj[x][assign[u]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assign[v] = static_cast<int>(x);
      taken[x] = 1;
      dfs(step + 1);
      taken[x] = 0;
      assign[v] = -1;
      if (out.size() >= limit) return;
    }
  };
  dfs(0);
  return out;
}

}  // namespace xf
