#include "poset/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "util/error.hpp"

namespace xf {

namespace {
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}
}  // namespace

SimplicialPoset SimplicialPoset::from_complex(const SimplicialComplex& c) {
  std::vector<PosetElem> elems;
  std::map<Face, ElemId> id_of;
  elems.push_back(PosetElem{0, {}, {}});
  id_of[Face()] = 0;
  const auto& table = c.all_faces();
  for (size_t card = 1; card < table.size(); ++card) {
    for (const auto& f : table[card]) {
      PosetElem e;
      e.rank = static_cast<int>(card);
      e.verts = f.verts();
      for (const auto& v : f) e.covers.push_back(id_of.at(f.set_minus(v)));
      std::sort(e.covers.begin(), e.covers.end());
      id_of[f] = static_cast<ElemId>(elems.size());
      elems.push_back(std::move(e));
    }
  }
  return from_elements(std::move(elems));
}

SimplicialPoset SimplicialPoset::from_elements(std::vector<PosetElem> elems) {
  SimplicialPoset p;
  p.elems_ = std::move(elems);
  p.finish();
  return p;
}

void SimplicialPoset::finish() {
  covered_by_.assign(elems_.size(), {});
  for (size_t e = 0; e < elems_.size(); ++e) {
    for (ElemId c : elems_[e].covers) covered_by_[c].push_back(static_cast<ElemId>(e));
  }
  std::set<VertexId> ls;
  for (const auto& e : elems_)
    for (const auto& v : e.verts) ls.insert(v);
  labels_.assign(ls.begin(), ls.end());
  validate();
}

int SimplicialPoset::dim() const {
  int r = 0;
  for (const auto& e : elems_) r = std::max(r, e.rank);
  return r - 1;
}

std::vector<ElemId> SimplicialPoset::elements_of_rank(int rank) const {
  std::vector<ElemId> out;
  for (size_t e = 0; e < elems_.size(); ++e)
    if (elems_[e].rank == rank) out.push_back(static_cast<ElemId>(e));
  return out;
}

std::vector<ElemId> SimplicialPoset::maximal_elements() const {
  std::vector<ElemId> out;
  for (size_t e = 0; e < elems_.size(); ++e)
    if (covered_by_[e].empty()) out.push_back(static_cast<ElemId>(e));
  return out;
}

bool SimplicialPoset::leq(ElemId a, ElemId b) const {
  if (a == b) return true;
  if (elems_[a].rank >= elems_[b].rank) return false;
  // descend from b
  std::vector<ElemId> stack = {b};
  std::set<ElemId> seen;
  while (!stack.empty()) {
    ElemId e = stack.back();
    stack.pop_back();
    for (ElemId c : elems_[e].covers) {
      if (c == a) return true;
      if (elems_[c].rank > elems_[a].rank && seen.insert(c).second) stack.push_back(c);
    }
  }
  return false;
}

std::vector<ElemId> SimplicialPoset::lower_set(ElemId e) const {
  std::set<ElemId> seen = {e};
  std::queue<ElemId> q;
  q.push(e);
  while (!q.empty()) {
    ElemId x = q.front();
    q.pop();
    for (ElemId c : elems_[x].covers)
      if (seen.insert(c).second) q.push(c);
  }
  return std::vector<ElemId>(seen.begin(), seen.end());
}

std::vector<ElemId> SimplicialPoset::upper_set(ElemId e) const {
  std::set<ElemId> seen = {e};
  std::queue<ElemId> q;
  q.push(e);
  while (!q.empty()) {
    ElemId x = q.front();
    q.pop();
    for (ElemId c : covered_by_[x])
      if (seen.insert(c).second) q.push(c);
  }
  return std::vector<ElemId>(seen.begin(), seen.end());
}

ElemId SimplicialPoset::sub_element(ElemId tau, const Face& subset) const {
  Face target = subset;
  require(target.subset_of(Face(std::vector<VertexId>(elems_[tau].verts))),
          "sub_element: not a vertex subset of the element", errc::internal);
  ElemId cur = tau;
  while (static_cast<int>(target.card()) < elems_[cur].rank) {
    bool moved = false;
    for (ElemId c : elems_[cur].covers) {
      Face cf{std::vector<VertexId>(elems_[c].verts)};
      if (target.subset_of(cf)) {
        cur = c;
        moved = true;
        break;
      }
    }
    require(moved, "sub_element: Boolean descent failed", errc::internal);
  }
  return cur;
}

std::optional<ElemId> SimplicialPoset::element_for(const Face& verts) const {
  std::optional<ElemId> found;
  for (size_t e = 0; e < elems_.size(); ++e) {
    if (static_cast<int>(verts.card()) == elems_[e].rank &&
        std::equal(verts.begin(), verts.end(), elems_[e].verts.begin(), elems_[e].verts.end())) {
      require(!found.has_value(),
              "element_for: vertex set " + verts.to_string() + " is ambiguous (parallel faces)");
      found = static_cast<ElemId>(e);
    }
  }
  return found;
}

SimplicialComplex SimplicialPoset::ideal_to_complex(const std::vector<ElemId>& ideal) const {
  std::set<std::vector<VertexId>> seen;
  std::vector<Face> faces;
  for (ElemId e : ideal) {
    if (elems_[e].rank == 0) continue;
    require(seen.insert(elems_[e].verts).second,
            "ideal is not a simplicial complex (parallel faces)", errc::internal);
    faces.push_back(Face(std::vector<VertexId>(elems_[e].verts)));
  }
  if (faces.empty()) {
    return ideal.empty() ? SimplicialComplex()
                         : SimplicialComplex::from_facets({Face()});
  }
  return SimplicialComplex::from_facets(std::move(faces));
}

void SimplicialPoset::validate() const {
  require(!elems_.empty(), "poset: missing bottom element");
  require(elems_[0].rank == 0 && elems_[0].verts.empty() && elems_[0].covers.empty(),
          "poset: element 0 must be the empty face");
  std::set<VertexId> vertex_labels;
  for (size_t e = 0; e < elems_.size(); ++e) {
    const auto& el = elems_[e];
    require(static_cast<int>(el.verts.size()) == el.rank, "poset: rank != vertex count");
    require(std::is_sorted(el.verts.begin(), el.verts.end()), "poset: unsorted vertex list");
    for (size_t i = 1; i < el.verts.size(); ++i)
      require(!(el.verts[i] == el.verts[i - 1]), "poset: duplicate vertex in element (loop)");
    if (el.rank == 1) {
      require(vertex_labels.insert(el.verts[0]).second,
              "poset: two rank-1 elements share label '" + el.verts[0].label() + "'");
    }
    if (el.rank == 0) {
      require(e == 0, "poset: second bottom element");
      continue;
    }
    require(static_cast<int>(el.covers.size()) == el.rank, "poset: wrong cover count");
    std::set<std::vector<VertexId>> cover_sets;
    for (ElemId c : el.covers) {
      require(c >= 0 && c < static_cast<ElemId>(elems_.size()), "poset: cover out of range");
      require(elems_[c].rank == el.rank - 1, "poset: cover rank mismatch");
      Face cf{std::vector<VertexId>(elems_[c].verts)};
      require(cf.subset_of(Face(std::vector<VertexId>(el.verts))),
              "poset: cover vertices not a subset");
      require(cover_sets.insert(elems_[c].verts).second,
              "poset: two covers with the same vertex set (non-Boolean interval)");
    }
  }
  // Boolean interval check: |{σ ≤ τ : rk σ = j}| = C(rk τ, j) with distinct
  // vertex sets.
  for (size_t e = 0; e < elems_.size(); ++e) {
    const auto& el = elems_[e];
    if (el.rank <= 1) continue;
    auto lower = lower_set(static_cast<ElemId>(e));
    std::vector<std::set<std::vector<VertexId>>> per_rank(el.rank + 1);
    std::vector<long long> count(el.rank + 1, 0);
    for (ElemId x : lower) {
      ++count[elems_[x].rank];
      require(per_rank[elems_[x].rank].insert(elems_[x].verts).second,
              "poset: non-Boolean interval (parallel faces below an element)");
    }
    for (int j = 0; j <= el.rank; ++j) {
      require(count[j] == binom(el.rank, j), "poset: non-Boolean interval (wrong face counts)");
    }
  }
}

SimplicialPoset SimplicialPoset::attach_cell(const Face& cell,
                                             const std::vector<std::pair<Face, ElemId>>& region,
                                             std::vector<ElemId>* cell_elems_out) const {
  int k = static_cast<int>(cell.card());
  require(k >= 1, "attach_cell: empty cell");
  // map: subsets of `cell` -> element id (existing or new)
  std::map<Face, ElemId> glue;
  glue[Face()] = bottom();
  for (const auto& [f, e] : region) {
    require(f.subset_of(cell), "attach_cell: region face not inside the cell");
    require(e >= 0 && e < static_cast<ElemId>(elems_.size()), "attach_cell: bad element id");
    require(elems_[e].verts == f.verts(), "attach_cell: label mismatch for " + f.to_string());
    require(static_cast<int>(f.card()) < k, "attach_cell: region face must be proper");
    // lower closure via Boolean descent; consistency across region facets
    for (const auto& s : all_subsets_of(f)) {
      ElemId se = sub_element(e, s);
      auto it = glue.find(s);
      if (it == glue.end()) {
        glue[s] = se;
      } else {
        require(it->second == se, "attach_cell: inconsistent attaching region at " + s.to_string());
      }
    }
  }
  // fresh labels must not collide with existing ones outside the glued region
  for (const auto& v : cell) {
    if (glue.count(Face({v}))) continue;
    require(!std::binary_search(labels_.begin(), labels_.end(), v),
            "attach_cell: vertex '" + v.label() + "' exists but is not in the attaching region");
  }
  std::vector<PosetElem> elems = elems_;
  for (size_t card = 1; card <= cell.card(); ++card) {
    for (const auto& s : subsets_of(cell, card)) {
      if (glue.count(s)) continue;
      PosetElem e;
      e.rank = static_cast<int>(card);
      e.verts = s.verts();
      for (const auto& v : s) e.covers.push_back(glue.at(s.set_minus(v)));
      std::sort(e.covers.begin(), e.covers.end());
      glue[s] = static_cast<ElemId>(elems.size());
      elems.push_back(std::move(e));
    }
  }
  if (cell_elems_out) {
    cell_elems_out->clear();
    for (const auto& s : all_subsets_of(cell)) cell_elems_out->push_back(glue.at(s));
  }
  return from_elements(std::move(elems));
}

SimplicialPoset::Subdivision SimplicialPoset::stellar_subdivide(ElemId sigma, VertexId apex) const {
  require(sigma > 0 && sigma < static_cast<ElemId>(elems_.size()), "subdivide: bad element");
  require(!std::binary_search(labels_.begin(), labels_.end(), apex),
          "subdivide: apex '" + apex.label() + "' already in use");
  Subdivision out;
  out.apex = apex;
  Face sigma_verts{std::vector<VertexId>(elems_[sigma].verts)};

  auto upper = upper_set(sigma);
  std::set<ElemId> upset(upper.begin(), upper.end());

  std::vector<PosetElem> elems;
  out.survivor.assign(elems_.size(), -1);
  for (size_t e = 0; e < elems_.size(); ++e) {
    if (upset.count(static_cast<ElemId>(e))) continue;
    out.survivor[e] = static_cast<ElemId>(elems.size());
    elems.push_back(elems_[e]);
  }
  for (auto& e : elems) {
    for (auto& c : e.covers) {
      c = out.survivor[c];
      require(c >= 0, "subdivide: survivor covers a removed element", errc::internal);
    }
  }
  // new elements n(mu, rho), mu >= sigma, rho ⊊ V(sigma); ordered by
  // (rank, mu, rho) for determinism
  std::vector<std::pair<ElemId, Face>> pieces;
  for (ElemId mu : upper) {
    for (const auto& rho : all_subsets_of(sigma_verts)) {
      if (rho.card() == sigma_verts.card()) continue;
      pieces.push_back({mu, rho});
    }
  }
  std::sort(pieces.begin(), pieces.end(), [&](const auto& a, const auto& b) {
    int ra = 1 + static_cast<int>(a.second.card()) + elems_[a.first].rank - elems_[sigma].rank;
    int rb = 1 + static_cast<int>(b.second.card()) + elems_[b.first].rank - elems_[sigma].rank;
    if (ra != rb) return ra < rb;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  for (const auto& [mu, rho] : pieces) {
    PosetElem e;
    e.rank = 1 + static_cast<int>(rho.card()) + elems_[mu].rank - elems_[sigma].rank;
    Face free_part = Face(std::vector<VertexId>(elems_[mu].verts)).set_minus(sigma_verts);
    e.verts = rho.set_union(free_part).with(apex).verts();
    // covers: drop apex -> survivor; shrink rho; shrink mu within lk(sigma)
    e.covers.push_back(out.survivor[sub_element(mu, rho.set_union(free_part))]);
    for (const auto& v : rho) e.covers.push_back(out.piece.at({mu, rho.set_minus(v)}));
    for (ElemId mu2 : elems_[mu].covers) {
      if (upset.count(mu2)) e.covers.push_back(out.piece.at({mu2, rho}));
    }
    std::sort(e.covers.begin(), e.covers.end());
    require(static_cast<int>(e.covers.size()) == e.rank, "subdivide: cover bookkeeping failed",
            errc::internal);
    out.piece[{mu, rho}] = static_cast<ElemId>(elems.size());
    elems.push_back(std::move(e));
  }
  out.P = from_elements(std::move(elems));
  return out;
}

std::vector<char> ideal_closure(const SimplicialPoset& p, const std::vector<ElemId>& gens) {
  std::vector<char> in(p.size(), 0);
  std::queue<ElemId> q;
  for (ElemId g : gens) {
    if (!in[g]) {
      in[g] = 1;
      q.push(g);
    }
  }
  while (!q.empty()) {
    ElemId e = q.front();
    q.pop();
    for (ElemId c : p.elem(e).covers) {
      if (!in[c]) {
        in[c] = 1;
        q.push(c);
      }
    }
  }
  if (!gens.empty()) in[p.bottom()] = 1;
  return in;
}

RelShellingCheck relative_shelling_verify(const SimplicialPoset& p, const std::vector<char>& in_q,
                                          const std::vector<ElemId>& order) {
  RelShellingCheck out;
  std::vector<char> in_earlier(in_q);  // Q ∪ earlier lower intervals
  std::vector<Face> restrictions;
  for (size_t j = 0; j < order.size(); ++j) {
    ElemId fj = order[j];
    require(!in_earlier[fj], "relative shelling: facet repeated or inside Q");
    // vertex criterion: v ≤ r(F_j) iff F_j \ v ∈ earlier ∪ Q
    const auto& el = p.elem(fj);
    std::vector<VertexId> rv;
    for (ElemId c : el.covers) {
      if (in_earlier[c]) {
        // the missing vertex of this cover belongs to r
        Face cf{std::vector<VertexId>(p.elem(c).verts)};
        for (const auto& v : el.verts)
          if (!cf.contains(v)) rv.push_back(v);
      }
    }
    Face r(std::move(rv));
    ElemId relem = p.sub_element(fj, r);
    if (in_earlier[relem]) {
      out.violation = static_cast<int>(j);
      return out;
    }
    restrictions.push_back(r);
    for (ElemId x : p.lower_set(fj)) in_earlier[x] = 1;
  }
  // completeness: the order must sweep out all of P \ Q
  for (size_t e = 0; e < p.size(); ++e) {
    if (!in_earlier[e]) {
      out.violation = static_cast<int>(order.size());
      return out;
    }
  }
  out.restrictions = std::move(restrictions);
  return out;
}

PosetColoringResult extend_coloring_poset(const SimplicialPoset& p, const std::vector<char>& in_q,
                                          const Coloring& kappa, int m) {
  require(m >= 1, "palette size must be at least 1");
  // d = dim(P, Q)
  int d = -1;
  for (size_t e = 0; e < p.size(); ++e)
    if (!in_q[e]) d = std::max(d, p.elem(e).rank - 1);

  PosetColoringResult res;
  // vertices of Q must be colored and properly so on Q's rank-2 elements
  for (size_t e = 0; e < p.size(); ++e) {
    if (!in_q[e]) continue;
    const auto& el = p.elem(e);
    if (el.rank == 1) require(kappa.colors(el.verts[0]), "extend: uncolored vertex in Q");
    if (el.rank == 2)
      require(kappa.at(el.verts[0]) != kappa.at(el.verts[1]), "extend: improper coloring on Q");
  }
  if (d < 0) {  // nothing outside Q
    res.P = p;
    res.coloring = kappa;
    return res;
  }

  SimplicialPoset cur = p;
  std::vector<char> q = in_q;
  int palette = std::max(m, d + 1);
  Coloring col(palette);
  std::set<VertexId> q_vertices;
  for (size_t e = 0; e < cur.size(); ++e)
    if (q[e] && cur.elem(e).rank == 1) q_vertices.insert(cur.elem(e).verts[0]);
  for (const auto& v : cur.all_labels()) {
    if (q_vertices.count(v))
      col.set(v, kappa.at(v));
    else
      col.set(v, 0);
  }

  auto subdivide_at = [&](ElemId target, int apex_color, size_t dull_before) {
    std::vector<VertexId> used = cur.all_labels();
    VertexId apex = fresh_labels(used, 1)[0];
    Face tverts{std::vector<VertexId>(cur.elem(target).verts)};
    auto sd = cur.stellar_subdivide(target, apex);
    std::vector<char> q2(sd.P.size(), 0);
    for (size_t e = 0; e < q.size(); ++e)
      if (q[e]) {
        require(sd.survivor[e] >= 0, "extend: subdivided a face of Q", errc::internal);
        q2[sd.survivor[e]] = 1;
      }
    cur = sd.P;
    q = std::move(q2);
    col.set(apex, apex_color);
    res.log.push_back({tverts, apex, apex_color, dull_before});
  };

  // start by subdividing improper edges outside Q with both endpoints in Q
  while (true) {
    std::optional<ElemId> bad;
    for (size_t e = 0; e < cur.size(); ++e) {
      if (q[e] || cur.elem(e).rank != 2) continue;
      VertexId a = cur.elem(e).verts[0], b = cur.elem(e).verts[1];
      if (q_vertices.count(a) && q_vertices.count(b) && col.at(a) == col.at(b)) {
        bad = static_cast<ElemId>(e);
        break;
      }
    }
    if (!bad) break;
    size_t dull_count = 0;  // pre-pass; recorded as 0-marker
    subdivide_at(*bad, 0, dull_count);
  }

  // dull loop
  auto dull_elements = [&]() {
    std::vector<ElemId> out;
    for (size_t e = 0; e < cur.size(); ++e) {
      const auto& el = cur.elem(e);
      if (el.rank < 2) continue;
      bool dull = true;
      for (const auto& v : el.verts) {
        if (col.at(v) >= el.rank - 1) {
          dull = false;
          break;
        }
      }
      if (dull) out.push_back(static_cast<ElemId>(e));
    }
    return out;
  };
  while (true) {
    auto dull = dull_elements();
    if (dull.empty()) break;
    // inclusion-maximal dull element, lexicographically smallest vertex set
    ElemId best = -1;
    for (ElemId e : dull) {
      bool maximal = true;
      for (ElemId other : dull) {
        if (other != e && cur.leq(e, other)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      if (best < 0) {
        best = e;
      } else {
        Face fe{std::vector<VertexId>(cur.elem(e).verts)};
        Face fb{std::vector<VertexId>(cur.elem(best).verts)};
        if (fe < fb) best = e;
      }
    }
    require(!q[best], "extend: dull face inside Q", errc::internal);
    subdivide_at(best, cur.elem(best).rank - 1, dull.size());
  }

  // palette sanity: everything proper now
  for (size_t e = 0; e < cur.size(); ++e) {
    if (cur.elem(e).rank == 2)
      require(col.at(cur.elem(e).verts[0]) != col.at(cur.elem(e).verts[1]),
              "extend: improper edge after the dull loop", errc::internal);
  }
  res.P = cur;
  res.coloring = col;
  return res;
}

}  // namespace xf
