#include "poset/cobordism.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

#include "core/classify.hpp"
#include "shelling/shelling.hpp"
#include "subdivision/stellar.hpp"
#include "util/error.hpp"

namespace xf {

namespace {

std::map<Face, ElemId> identity_embedding(const SimplicialPoset& p, const SimplicialComplex& c) {
  // complex faces are unambiguous inside posets built from complexes
  std::map<std::vector<VertexId>, std::vector<ElemId>> by_verts;
  for (size_t e = 0; e < p.size(); ++e) by_verts[p.elem(e).verts].push_back(static_cast<ElemId>(e));
  std::map<Face, ElemId> out;
  out[Face()] = p.bottom();
  for (const auto& bucket : c.all_faces()) {
    for (const auto& f : bucket) {
      if (f.empty()) continue;
      auto it = by_verts.find(f.verts());
      require(it != by_verts.end() && it->second.size() == 1,
              "embedding: face " + f.to_string() + " not uniquely represented", errc::internal);
      out[f] = it->second[0];
    }
  }
  return out;
}

std::vector<char> image_flags(const SimplicialPoset& p, const std::map<Face, ElemId>& phi) {
  std::vector<char> in(p.size(), 0);
  for (const auto& [f, e] : phi) in[e] = 1;
  return in;
}

void check_embedding(const PseudoCobordism& o, const SimplicialComplex& end,
                     const std::map<Face, ElemId>& phi, const char* side) {
  require(phi.count(Face()) && phi.at(Face()) == o.P.bottom(),
          std::string("cobordism: ") + side + " embedding misses the empty face");
  size_t count = 0;
  for (const auto& bucket : end.all_faces()) count += bucket.size();
  require(phi.size() == count, std::string("cobordism: ") + side + " embedding not total");
  for (const auto& [f, e] : phi) {
    require(e >= 0 && e < static_cast<ElemId>(o.P.size()),
            std::string("cobordism: ") + side + " embedding out of range");
    require(o.P.elem(e).verts == f.verts(),
            std::string("cobordism: ") + side + " embedding changes labels");
    require(end.has_face(f), std::string("cobordism: ") + side + " embedding has a stray face");
  }
  // image is an ideal
  auto in = image_flags(o.P, phi);
  for (size_t e = 0; e < o.P.size(); ++e) {
    if (!in[e]) continue;
    for (ElemId c : o.P.elem(e).covers)
      require(in[c], std::string("cobordism: ") + side + " image is not a lower ideal");
  }
}

}  // namespace

std::vector<ElemId> PseudoCobordism::cells() const {
  std::vector<ElemId> out;
  for (size_t e = 0; e < P.size(); ++e)
    if (P.elem(e).rank == d + 2) out.push_back(static_cast<ElemId>(e));
  return out;
}

void verify_pseudo_cobordism(const PseudoCobordism& o) {
  require(o.d >= 0, "cobordism: bad dimension");
  for (const auto* end : {&o.left, &o.right}) {
    auto r = classify(*end);
    require(r.dim == o.d, "cobordism: end dimension mismatch");
    if (o.d <= 2) {
      require(r.closed_manifold == Verdict::yes, "cobordism: end is not a closed manifold");
    } else {
      require(r.closed_pseudomanifold, "cobordism: end is not a closed pseudomanifold");
    }
  }
  require(o.P.dim() <= o.d + 1, "cobordism: poset dimension too large");
  check_embedding(o, o.left, o.phi_left, "left");
  check_embedding(o, o.right, o.phi_right, "right");

  auto in_l = image_flags(o.P, o.phi_left);
  auto in_r = image_flags(o.P, o.phi_right);

  // degree trichotomy on d-elements
  std::vector<ElemId> dfaces = o.P.elements_of_rank(o.d + 1);
  std::vector<char> boundary_gen(o.P.size(), 0);
  for (ElemId e : dfaces) {
    int deg = 0;
    for (ElemId up : o.P.covered_by(e))
      if (o.P.elem(up).rank == o.d + 2) ++deg;
    require(deg <= 2, "cobordism: a d-face lies in more than two cells");
    bool inl = in_l[e], inr = in_r[e];
    if (deg == 0) {
      require(inl && inr, "cobordism: degree-0 d-face not shared by both ends");
    } else {
      require(!(inl && inr), "cobordism: shared d-face has positive degree");
      if (deg <= 1) {
        require(inl || inr, "cobordism: pseudoboundary d-face outside both ends");
      } else {
        require(!inl && !inr, "cobordism: interior d-face inside an end");
      }
    }
    if (deg <= 1) boundary_gen[e] = 1;
  }
  // φ(Δ) ∪ φ'(Δ') must equal the closure of the degree<=1 d-faces
  std::vector<ElemId> gens;
  for (size_t e = 0; e < o.P.size(); ++e)
    if (boundary_gen[e]) gens.push_back(static_cast<ElemId>(e));
  auto closure = ideal_closure(o.P, gens);
  for (size_t e = 0; e < o.P.size(); ++e) {
    bool in_union = in_l[e] || in_r[e];
    bool in_bd = closure[e] != 0 || (gens.empty() && e == 0);
    if (o.P.elem(e).rank == o.d + 2) continue;
    require(in_union == in_bd, "cobordism: ends do not match the pseudoboundary");
  }
  // every maximal element is a cell or lies inside an end
  for (ElemId e : o.P.maximal_elements()) {
    require(o.P.elem(e).rank == o.d + 2 || in_l[e] || in_r[e],
            "cobordism: stray maximal element outside cells and ends");
  }
}

PseudoCobordism elementary_cobordism(const SimplicialComplex& delta, const FlipMove& move) {
  std::string why;
  require(flip_applicable(delta, move, &why), "elementary cobordism: " + why);
  PseudoCobordism o;
  o.d = *delta.dim();
  o.left = delta;
  auto p0 = SimplicialPoset::from_complex(delta);
  auto phi0 = identity_embedding(p0, delta);

  Face cell = move.A.set_union(move.B);
  std::vector<std::pair<Face, ElemId>> region;
  for (const auto& b : move.B) {
    Face f = cell.set_minus(b);
    region.push_back({f, phi0.at(f)});
  }
  std::vector<ElemId> cell_elems;
  o.P = p0.attach_cell(cell, region, &cell_elems);
  auto cell_subsets = all_subsets_of(cell);
  std::map<Face, ElemId> cell_elem_of;
  for (size_t i = 0; i < cell_subsets.size(); ++i) cell_elem_of[cell_subsets[i]] = cell_elems[i];

  o.phi_left = phi0;  // ids of existing elements are preserved by attach_cell
  o.right = apply_bistellar_flip(delta, move);
  for (const auto& bucket : o.right.all_faces()) {
    for (const auto& f : bucket) {
      if (move.B.card() > 0 && move.B.subset_of(f)) {
        o.phi_right[f] = cell_elem_of.at(f);
      } else {
        o.phi_right[f] = phi0.at(f);
      }
    }
  }
  o.phi_right[Face()] = o.P.bottom();
  o.witness = std::vector<ElemId>{cell_elem_of.at(cell)};
  verify_pseudo_cobordism(o);
  return o;
}

PseudoCobordism compose(const PseudoCobordism& a, const PseudoCobordism& b,
                        const std::optional<Isomorphism>& iso_opt) {
  Isomorphism iso;
  if (iso_opt) {
    iso = *iso_opt;
    require(iso.image(a.right) == b.left, "compose: identification is not an isomorphism");
  } else {
    require(a.right == b.left,
            "compose: ends differ and no identification was supplied");
    for (const auto& v : a.right.vertices()) iso.map.push_back({v, v});
  }
  require(a.d == b.d, "compose: dimension mismatch");
  Isomorphism iso_inv = iso.inverse();

  // element map for b's poset: merged end elements take a's ids
  std::vector<ElemId> m2(b.P.size(), -1);
  std::vector<char> merged(b.P.size(), 0);
  for (const auto& [f2, e2] : b.phi_left) {
    m2[e2] = a.phi_right.at(iso_inv.image(f2));
    merged[e2] = 1;
  }
  // label map for b's side
  std::set<std::string> used;
  for (const auto& v : a.P.all_labels()) used.insert(v.label());
  for (const auto& v : b.P.all_labels()) used.insert(v.label());
  std::map<VertexId, VertexId> lambda;
  for (const auto& [v1, v2] : iso.map) lambda[v2] = v1;
  long long counter = 0;
  for (const auto& v : b.P.all_labels()) {
    if (lambda.count(v)) continue;
    bool collides = false;
    for (size_t e = 0; e < a.P.size(); ++e) {
      if (a.P.elem(e).rank == 1 && a.P.elem(e).verts[0] == v) {
        collides = true;
        break;
      }
    }
    if (!collides) {
      lambda[v] = v;
    } else {
      std::string cand;
      do {
        cand = "~" + std::to_string(counter++);
      } while (used.count(cand));
      used.insert(cand);
      lambda[v] = VertexId::of(cand);
    }
  }
  auto map_verts = [&](const std::vector<VertexId>& vs) {
    std::vector<VertexId> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(lambda.at(v));
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<PosetElem> elems;
  for (size_t e = 0; e < a.P.size(); ++e) elems.push_back(a.P.elem(e));
  for (size_t e = 0; e < b.P.size(); ++e) {
    if (merged[e]) continue;
    m2[e] = static_cast<ElemId>(elems.size());
    elems.push_back(PosetElem{});
  }
  for (size_t e = 0; e < b.P.size(); ++e) {
    if (merged[e]) continue;
    PosetElem ne;
    ne.rank = b.P.elem(e).rank;
    ne.verts = map_verts(b.P.elem(e).verts);
    for (ElemId c : b.P.elem(e).covers) ne.covers.push_back(m2[c]);
    std::sort(ne.covers.begin(), ne.covers.end());
    elems[m2[e]] = std::move(ne);
  }

  PseudoCobordism o;
  o.d = a.d;
  o.P = SimplicialPoset::from_elements(std::move(elems));
  o.left = a.left;
  o.phi_left = a.phi_left;
  std::vector<std::pair<VertexId, VertexId>> lam_pairs(lambda.begin(), lambda.end());
  o.right = relabel(b.right, lam_pairs);
  for (const auto& [f, e] : b.phi_right) {
    std::vector<VertexId> vs = map_verts(f.verts());
    o.phi_right[Face(std::move(vs))] = m2[e];
  }
  if (a.witness && b.witness) {
    std::vector<ElemId> w = *a.witness;
    for (ElemId e : *b.witness) w.push_back(m2[e]);
    o.witness = std::move(w);
  }
  verify_pseudo_cobordism(o);
  return o;
}

namespace {

struct BidirSearch {
  const SimplicialPoset& p;
  std::vector<ElemId> cells;
  std::vector<char> in_l, in_r;
  std::vector<uint64_t> below;  // element -> mask of cells above it
  uint64_t full;

  BidirSearch(const PseudoCobordism& o) : p(o.P) {
    cells = o.cells();
    require(cells.size() <= 62, "bidirectional shelling: too many cells");
    in_l = image_flags(p, o.phi_left);
    in_r = image_flags(p, o.phi_right);
    below.assign(p.size(), 0);
    for (size_t i = 0; i < cells.size(); ++i) {
      for (ElemId e : p.lower_set(cells[i])) below[e] |= uint64_t(1) << i;
    }
    full = cells.empty() ? 0 : (uint64_t(1) << cells.size()) - 1;
  }

  // relative shelling step for cell i against (ideal flags, cell mask)
  bool step_ok(const std::vector<char>& in_q, uint64_t mask, size_t i) const {
    ElemId fj = cells[i];
    const auto& el = p.elem(fj);
    std::vector<VertexId> rv;
    for (ElemId c : el.covers) {
      if (in_q[c] || (below[c] & mask)) {
        Face cf{std::vector<VertexId>(p.elem(c).verts)};
        for (const auto& v : el.verts)
          if (!cf.contains(v)) rv.push_back(v);
      }
    }
    ElemId relem = p.sub_element(fj, Face(std::move(rv)));
    return !(in_q[relem] || (below[relem] & mask));
  }

  bool forward_ok(uint64_t used, size_t i) const { return step_ok(in_l, used, i); }
  bool reverse_ok(uint64_t used, size_t i) const {
    uint64_t rest = full & ~used & ~(uint64_t(1) << i);
    return step_ok(in_r, rest, i);
  }
};

}  // namespace

std::optional<std::vector<ElemId>> find_bidirectional_shelling(const PseudoCobordism& o,
                                                               long long budget) {
  BidirSearch s(o);
  size_t t = s.cells.size();
  auto verify_order = [&](const std::vector<ElemId>& order) {
    if (order.size() != t) return false;
    auto fwd = relative_shelling_verify(o.P, s.in_l, order);
    if (!fwd.restrictions) return false;
    std::vector<ElemId> rev(order.rbegin(), order.rend());
    auto bwd = relative_shelling_verify(o.P, s.in_r, rev);
    return bwd.restrictions.has_value();
  };
  if (o.witness && verify_order(*o.witness)) return o.witness;
  if (t == 0) return std::vector<ElemId>{};

  std::map<ElemId, size_t> idx;
  for (size_t i = 0; i < t; ++i) idx[s.cells[i]] = i;
  std::unordered_set<uint64_t> dead;
  std::vector<size_t> order;
  long long nodes = 0;
  std::function<bool(uint64_t)> dfs = [&](uint64_t used) -> bool {
    if (order.size() == t) return true;
    if (++nodes > budget) fail(errc::budget, "bidirectional shelling: budget exhausted");
    if (dead.count(used)) return false;
    for (size_t i = 0; i < t; ++i) {
      if (used >> i & 1) continue;
      if (!s.forward_ok(used, i) || !s.reverse_ok(used, i)) continue;
      order.push_back(i);
      if (dfs(used | (uint64_t(1) << i))) return true;
      order.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::vector<ElemId> out;
  for (size_t i : order) out.push_back(s.cells[i]);
  require(verify_order(out), "bidirectional shelling search produced a bad order", errc::internal);
  return out;
}

Decomposition decompose(const PseudoCobordism& o, const std::vector<ElemId>& order) {
  BidirSearch s(o);
  auto fwd = relative_shelling_verify(o.P, s.in_l, order);
  require(fwd.restrictions.has_value(), "decompose: order does not shell (Ω, left)");
  std::vector<ElemId> rev(order.rbegin(), order.rend());
  auto bwd = relative_shelling_verify(o.P, s.in_r, rev);
  require(bwd.restrictions.has_value(), "decompose: reversed order does not shell (Ω, right)");

  size_t t = order.size();
  // suffix ideals Ω'_j = inR ∪ cells j+1..t
  std::vector<std::vector<char>> bwd_flags(t + 1);
  bwd_flags[t] = s.in_r;
  for (size_t j = t; j-- > 0;) {
    bwd_flags[j] = bwd_flags[j + 1];
    for (ElemId e : o.P.lower_set(order[j])) bwd_flags[j][e] = 1;
  }
  std::vector<char> fwd_flags = s.in_l;

  Decomposition out;
  SimplicialComplex cur = o.left;
  for (size_t j = 0; j < t; ++j) {
    ElemId fj = order[j];
    Face cell{std::vector<VertexId>(o.P.elem(fj).verts)};
    Face b = (*fwd.restrictions)[j];
    Face a = (*bwd.restrictions)[t - 1 - j];
    // Lemma (meet/join): glb = ∅, lub = F_j, both proper and nonempty
    require(a.set_intersect(b).empty(), "decompose: glb(A,B) != ∅", errc::internal);
    require(a.set_union(b) == cell, "decompose: lub(A,B) != F_j", errc::internal);
    require(!a.empty() && !b.empty(), "decompose: A or B empty", errc::internal);

    ElemId a_elem = o.P.sub_element(fj, a);
    // Δ_{j-1} flags = fwd_flags ∧ bwd_flags[j]; Δ_j uses fwd after adding F_j
    auto in_delta_prev = [&](ElemId e) { return fwd_flags[e] && bwd_flags[j][e]; };
    require(in_delta_prev(a_elem), "decompose: A_j not in Δ_{j-1}", errc::internal);

    // lk_{Δ_{j-1}}(A_j) must be [A_j, F_j)
    std::set<ElemId> lk_set;
    for (ElemId e : o.P.upper_set(a_elem))
      if (in_delta_prev(e)) lk_set.insert(e);
    std::set<ElemId> interval;
    for (ElemId e : o.P.lower_set(fj))
      if (o.P.leq(a_elem, e) && e != fj) interval.insert(e);
    require(lk_set == interval, "decompose: lk(A_j) != [A_j, F_j)", errc::internal);

    for (ElemId e : o.P.lower_set(fj)) fwd_flags[e] = 1;
    require(!(fwd_flags[a_elem] && bwd_flags[j + 1][a_elem]), "decompose: A_j still in Δ_j",
            errc::internal);
    std::vector<ElemId> delta_j;
    for (size_t e = 0; e < o.P.size(); ++e)
      if (fwd_flags[e] && bwd_flags[j + 1][e]) delta_j.push_back(static_cast<ElemId>(e));
    auto next = o.P.ideal_to_complex(delta_j);

    FlipMove move{a, b};
    auto flipped = apply_bistellar_flip(cur, move);
    require(flipped == next, "decompose: flip does not reproduce Δ_j", errc::internal);
    out.steps.push_back({cell, a, b, move, next});
    cur = next;
  }
  require(cur == o.right, "decompose: final complex is not the right end", errc::internal);
  return out;
}

std::vector<FlipMove> Decomposition::moves() const {
  std::vector<FlipMove> out;
  for (const auto& s : steps) out.push_back(s.move);
  return out;
}

EliminateResult eliminate_face(const SimplicialComplex& delta, const Face& tau,
                               const std::optional<SimplicialComplex>& k_ball) {
  require(delta.has_face(tau), "eliminate: " + tau.to_string() + " is not a face");
  require(!tau.empty(), "eliminate: empty face");
  auto lk = link(delta, tau);

  SimplicialComplex k;
  ShellingOrder k_order;
  if (k_ball) {
    k = *k_ball;
    require(boundary_complex(k) == lk, "eliminate: ∂K != lk(τ)");
    require(is_induced(k, lk), "eliminate: ∂K is not induced in K");
    for (const auto& v : k.vertices()) {
      require(lk.has_vertex(v) || !delta.has_vertex(v),
              "eliminate: interior vertex '" + v.label() + "' of K collides with Δ");
    }
    auto so = find_shelling(k);
    require(so.has_value(), "eliminate: supplied K is not shellable");
    k_order = *so;
  } else {
    auto so = find_shelling(lk);
    require(so.has_value(), "eliminate: link of " + tau.to_string() +
                                " is not shellable; supply K explicitly");
    VertexId apex = fresh_label(delta, "");
    k = cone(apex, lk);
    k_order = cone_shelling(apex, *so);
  }

  // Ω = Δ ∪ (τ̄ * K), Δ' = (Δ \ τ) ∪ (∂τ̄ * K)
  std::vector<Face> omega_facets(delta.facets());
  for (const auto& f : k.facets()) omega_facets.push_back(tau.set_union(f));
  auto omega_cx = SimplicialComplex::from_facets(std::move(omega_facets));

  std::vector<Face> dp_facets(delete_face(delta, tau).facets());
  if (tau.card() == 1) {
    for (const auto& f : k.facets()) dp_facets.push_back(f);
  } else {
    for (const auto& v : tau)
      for (const auto& f : k.facets()) dp_facets.push_back(tau.set_minus(v).set_union(f));
  }
  auto delta_prime = SimplicialComplex::from_facets(std::move(dp_facets));

  PseudoCobordism o;
  o.d = *delta.dim();
  o.P = SimplicialPoset::from_complex(omega_cx);
  o.left = delta;
  o.right = delta_prime;
  o.phi_left = identity_embedding(o.P, delta);
  o.phi_right = identity_embedding(o.P, delta_prime);

  // witness G_t..G_1 shells (Ω, Δ); G_1..G_t shells (Ω, Δ')
  std::vector<ElemId> cells_rev;
  for (size_t j = k_order.facets.size(); j-- > 0;) {
    Face g = tau.set_union(k_order.facets[j]);
    auto e = o.P.element_for(g);
    require(e.has_value(), "eliminate: missing cell element", errc::internal);
    cells_rev.push_back(*e);
  }
  o.witness = cells_rev;
  verify_pseudo_cobordism(o);
  auto check = find_bidirectional_shelling(o);
  require(check.has_value() && *check == cells_rev,
          "eliminate: constructed witness failed verification", errc::internal);
  EliminateResult res;
  res.delta_prime = std::move(delta_prime);
  res.omega = std::move(o);
  return res;
}

PseudoCobordism disjoint_ends_cobordism(const SimplicialComplex& delta,
                                        const std::vector<FlipMove>& flip_path) {
  require(!delta.is_void(), "disjoint ends: empty complex");
  std::vector<VertexId> order(delta.vertices());
  std::optional<PseudoCobordism> acc;
  SimplicialComplex cur = delta;
  for (const auto& v : order) {
    auto step = eliminate_face(cur, Face({v}));
    cur = step.delta_prime;
    acc = acc ? compose(*acc, step.omega) : std::move(step.omega);
  }
  for (const auto& mv : flip_path) {
    auto el = elementary_cobordism(cur, mv);
    cur = el.right;
    acc = acc ? compose(*acc, el) : std::move(el);
  }
  require(acc.has_value(), "disjoint ends: nothing to do");
  // the two ends must share no nonempty face
  auto in_l = image_flags(acc->P, acc->phi_left);
  auto in_r = image_flags(acc->P, acc->phi_right);
  for (size_t e = 0; e < acc->P.size(); ++e) {
    if (e == static_cast<size_t>(acc->P.bottom())) continue;
    require(!(in_l[e] && in_r[e]), "disjoint ends: ends share a nonempty face", errc::internal);
  }
  return *acc;
}

PseudoCobordism subdivide_cobordism(const PseudoCobordism& o, const Face& sigma,
                                    long long budget) {
  auto se = o.P.element_for(sigma);
  require(se.has_value(), "subdivide: " + sigma.to_string() + " is not a face of the cobordism");
  std::vector<VertexId> used = o.P.all_labels();
  VertexId apex = fresh_labels(used, 1)[0];
  auto sd = o.P.stellar_subdivide(*se, apex);

  PseudoCobordism out;
  out.d = o.d;
  out.P = sd.P;

  auto rebuild_end = [&](const SimplicialComplex& end, const std::map<Face, ElemId>& phi,
                         SimplicialComplex* end_out, std::map<Face, ElemId>* phi_out) {
    if (!end.has_face(sigma) || phi.at(sigma) != *se) {
      // untouched end: all faces survive
      *end_out = end;
      for (const auto& [f, e] : phi) (*phi_out)[f] = (f.empty()) ? sd.P.bottom() : sd.survivor[e];
      (*phi_out)[Face()] = sd.P.bottom();
      return;
    }
    SimplicialComplex sub;
    if (sigma.card() == 1) {
      sub = relabel(end, {{sigma.verts()[0], apex}});
    } else {
      sub = stellar_subdivide(end, sigma, apex);
    }
    *end_out = sub;
    for (const auto& bucket : sub.all_faces()) {
      for (const auto& f : bucket) {
        if (f.empty()) {
          (*phi_out)[f] = sd.P.bottom();
        } else if (!f.contains(apex)) {
          (*phi_out)[f] = sd.survivor[phi.at(f)];
        } else {
          Face rho = f.set_minus(apex).set_intersect(sigma);
          Face free_part = f.set_minus(apex).set_minus(sigma);
          ElemId mu = phi.at(sigma.set_union(free_part));
          (*phi_out)[f] = sd.piece.at({mu, rho});
        }
      }
    }
  };
  rebuild_end(o.left, o.phi_left, &out.left, &out.phi_left);
  rebuild_end(o.right, o.phi_right, &out.right, &out.phi_right);
  verify_pseudo_cobordism(out);
  auto w = find_bidirectional_shelling(out, budget);
  require(w.has_value(), "subdivide: no bidirectional shelling found for the subdivision",
          errc::internal);
  out.witness = w;
  return out;
}

}  // namespace xf
