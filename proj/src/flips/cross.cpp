#include "flips/cross.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "core/classify.hpp"
#include "core/generate.hpp"
#include "shelling/shelling.hpp"
#include "subdivision/diamond.hpp"
#include "util/error.hpp"

namespace xf {

const CrossFlipTemplate* CrossFlipCatalog::by_key(const std::string& key) const {
  for (const auto& t : templates)
    if (t.key == key) return &t;
  return nullptr;
}

std::string CrossFlipMove::to_string() const {
  return "cross-flip(" + std::to_string(tmpl.D.facet_count()) + "->" +
         std::to_string(tmpl.complement.facet_count()) + ")";
}

namespace {

SimplicialComplex complex_from_mask(const std::vector<Face>& facets, uint32_t mask) {
  std::vector<Face> fs;
  for (size_t i = 0; i < facets.size(); ++i)
    if (mask >> i & 1) fs.push_back(facets[i]);
  return SimplicialComplex::from_facets(std::move(fs));
}

// Dedupe by canonical key of D. The complement is determined by D up to
// symmetry; this is not assumed but checked: a key collision with mismatched
// complement keys is a hard error.
struct TemplateDedupe {
  std::map<std::string, std::string> comp_key_of;
  bool insert(const std::string& dkey, const std::string& ckey) {
    auto it = comp_key_of.find(dkey);
    if (it == comp_key_of.end()) {
      comp_key_of[dkey] = ckey;
      return true;
    }
    require(it->second == ckey,
            "cross-flip catalog: isomorphic D with non-isomorphic complements", errc::internal);
    return false;
  }
};

CrossFlipCatalog enumerate_general(int d, long long budget) {
  require(d >= 1 && d <= 3, "general cross-flip enumeration supports d in 1..3");
  auto cross = make_cross_polytope_boundary(d);
  SubsetShellability oracle(cross.facets());
  oracle.build_all();
  size_t n = cross.facet_count();
  CrossFlipCatalog cat;
  cat.d = d;
  cat.mode = "general";
  TemplateDedupe dedupe;
  (void)budget;
  uint32_t full = (n == 32) ? 0xffffffffu : ((uint32_t(1) << n) - 1);
  for (uint32_t mask = 1; mask < full; ++mask) {
    if (!oracle.shellable(mask) || !oracle.shellable(full & ~mask)) continue;
    CrossFlipTemplate t;
    t.d = d;
    t.D = complex_from_mask(cross.facets(), mask);
    t.complement = complex_from_mask(cross.facets(), full & ~mask);
    t.key = canonical_form(t.D);
    t.provenance = CrossFlipTemplate::Provenance::general;
    if (dedupe.insert(t.key, canonical_form(t.complement))) cat.templates.push_back(std::move(t));
  }
  std::sort(cat.templates.begin(), cat.templates.end(),
            [](const CrossFlipTemplate& a, const CrossFlipTemplate& b) {
              if (a.D.facet_count() != b.D.facet_count())
                return a.D.facet_count() < b.D.facet_count();
              return a.key < b.key;
            });
  return cat;
}

CrossFlipCatalog enumerate_basic(int d, long long budget) {
  require(d >= 1, "basic cross-flip enumeration needs d >= 1");
  // Diamond the (d+1)-simplex; its unique cell boundary is a copy of C_d.
  auto simplex = make_simplex(d + 1);
  Coloring kappa(d + 2);
  {
    int i = 0;
    for (const auto& v : simplex.vertices()) kappa.set(v, i++);
  }
  auto dia = diamond(simplex, kappa);
  const Face& cell = simplex.facets()[0];
  Isomorphism to_canonical = dia.cell_iso.at(cell).inverse();  // cell labels -> x_i/y_i

  auto bd_facets = subsets_of(cell, cell.card() - 1);  // facets of ∂σ^{d+1}
  auto cross = make_cross_polytope_boundary(d);

  CrossFlipCatalog cat;
  cat.d = d;
  cat.mode = "basic";
  TemplateDedupe dedupe;
  uint32_t full = (uint32_t(1) << bd_facets.size()) - 1;
  for (uint32_t mask = 1; mask < full; ++mask) {
    std::vector<Face> df;
    for (size_t i = 0; i < bd_facets.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      const auto& ps = dia.pieces.at(bd_facets[i]);
      df.insert(df.end(), ps.begin(), ps.end());
    }
    auto D = to_canonical.image(SimplicialComplex::from_facets(std::move(df)));
    std::vector<Face> cf;
    for (const auto& g : cross.facets())
      if (!std::binary_search(D.facets().begin(), D.facets().end(), g)) cf.push_back(g);
    CrossFlipTemplate t;
    t.d = d;
    t.complement = SimplicialComplex::from_facets(std::move(cf));
    t.D = std::move(D);
    t.key = canonical_form(t.D);
    t.provenance = CrossFlipTemplate::Provenance::basic;
    // every basic template must pass the general predicate
    require(find_shelling(t.D, {}, budget).has_value(),
            "basic cross-flip template is not shellable", errc::internal);
    require(is_co_shellable(cross, t.D, budget), "basic cross-flip template is not co-shellable",
            errc::internal);
    if (dedupe.insert(t.key, canonical_form(t.complement))) cat.templates.push_back(std::move(t));
  }
  std::sort(cat.templates.begin(), cat.templates.end(),
            [](const CrossFlipTemplate& a, const CrossFlipTemplate& b) {
              if (a.D.facet_count() != b.D.facet_count())
                return a.D.facet_count() < b.D.facet_count();
              return a.key < b.key;
            });
  return cat;
}

}  // namespace

CrossFlipCatalog enumerate_cross_flip_templates(int d, const std::string& mode, long long budget) {
  if (mode == "general") return enumerate_general(d, budget);
  if (mode == "basic") return enumerate_basic(d, budget);
  fail(errc::domain, "unknown catalog mode '" + mode + "' (expected basic|general)");
}

CrossFlipMove make_cross_flip_move(const SimplicialComplex& c, const CrossFlipTemplate& t,
                                   const Isomorphism& embedding) {
  CrossFlipMove m;
  m.tmpl = t;
  m.embedding = embedding;
  std::vector<VertexId> interior;
  for (const auto& v : t.complement.vertices())
    if (!t.D.has_vertex(v)) interior.push_back(v);
  auto fresh = fresh_labels(c.vertices(), interior.size());
  for (size_t i = 0; i < interior.size(); ++i) m.fresh.push_back({interior[i], fresh[i]});
  return m;
}

std::vector<CrossFlipMove> available_cross_flips(const SimplicialComplex& c,
                                                 const CrossFlipCatalog& catalog, size_t limit) {
  std::vector<CrossFlipMove> out;
  for (const auto& t : catalog.templates) {
    auto embeddings = find_induced_embeddings(t.D, c, limit);
    for (const auto& e : embeddings) out.push_back(make_cross_flip_move(c, t, e));
  }
  return out;
}

std::pair<SimplicialComplex, std::optional<Coloring>> apply_cross_flip(
    const SimplicialComplex& c, const CrossFlipMove& move,
    const std::optional<Coloring>& kappa) {
  const auto& t = move.tmpl;
  {
    // closed-manifold precondition, exact for d <= 2, trusted beyond
    auto r = classify(c);
    if (r.dim <= 2) {
      require(r.closed_manifold == Verdict::yes,
              "cross-flip: complex is not a closed combinatorial manifold");
    } else {
      require(r.closed_pseudomanifold, "cross-flip: complex is not a closed pseudomanifold");
    }
  }
  // image of D must be induced and isomorphic to D
  auto image = move.embedding.image(t.D);
  for (const auto& g : image.facets())
    require(c.has_face(g), "cross-flip: embedded facet " + g.to_string() + " is not a face");
  require(induced_subcomplex(c, image.vertices()) == image,
          "cross-flip: image of D is not induced");
  // fresh labels must be genuinely fresh
  std::map<VertexId, VertexId> fresh(move.fresh.begin(), move.fresh.end());
  std::set<VertexId> fresh_used;
  for (const auto& [tv, nv] : fresh) {
    require(!c.has_vertex(nv), "cross-flip: label '" + nv.label() + "' is not fresh");
    require(fresh_used.insert(nv).second, "cross-flip: duplicate fresh label");
  }
  // combined map on V(C_d) = V(D) ∪ V(complement)
  auto map_vertex = [&](VertexId v) -> VertexId {
    if (t.D.has_vertex(v)) return move.embedding.image(v);
    auto it = fresh.find(v);
    require(it != fresh.end(), "cross-flip: missing fresh label for '" + v.label() + "'",
            errc::internal);
    return it->second;
  };

  std::vector<Face> facets;
  std::set<Face> removed(image.facets().begin(), image.facets().end());
  for (const auto& g : c.facets())
    if (!removed.count(g)) facets.push_back(g);
  for (const auto& g : t.complement.facets()) {
    std::vector<VertexId> vs;
    for (const auto& v : g) vs.push_back(map_vertex(v));
    facets.push_back(Face(std::move(vs)));
  }
  auto result = SimplicialComplex::from_facets(std::move(facets));

  std::optional<Coloring> out_kappa;
  if (kappa) {
    require(is_proper(c, *kappa), "cross-flip: input coloring not proper");
    Coloring k(kappa->palette_size());
    for (const auto& v : result.vertices()) {
      auto col = kappa->get(v);
      if (col) {
        k.set(v, *col);
        continue;
      }
      // new vertex: color of its cross-polytope partner inside D
      VertexId tv;
      bool found = false;
      for (const auto& [a, b] : move.fresh) {
        if (b == v) {
          tv = a;
          found = true;
          break;
        }
      }
      require(found, "cross-flip: uncolored vertex '" + v.label() + "'", errc::internal);
      // partner of x_i is y_i and vice versa
      const std::string& l = tv.label();
      std::string partner = (l[0] == 'x' ? "y" : "x") + l.substr(1);
      VertexId pv = VertexId::of(partner);
      require(t.D.has_vertex(pv), "cross-flip: partner vertex is not in D", errc::internal);
      k.set(v, kappa->at(move.embedding.image(pv)));
    }
    require(is_proper(result, k), "cross-flip produced an improper coloring", errc::internal);
    out_kappa = std::move(k);
  }
  return {result, out_kappa};
}

CrossFlipMove inverse_cross_flip(const SimplicialComplex& before, const CrossFlipMove& move) {
  CrossFlipMove inv;
  inv.tmpl.d = move.tmpl.d;
  inv.tmpl.D = move.tmpl.complement;
  inv.tmpl.complement = move.tmpl.D;
  inv.tmpl.key = canonical_form(inv.tmpl.D);
  inv.tmpl.provenance = move.tmpl.provenance;
  // embedding of the complement: boundary vertices through the original
  // embedding, interior through the fresh assignment
  for (const auto& v : move.tmpl.complement.vertices()) {
    if (move.tmpl.D.has_vertex(v)) {
      inv.embedding.map.push_back({v, move.embedding.image(v)});
    } else {
      for (const auto& [a, b] : move.fresh)
        if (a == v) inv.embedding.map.push_back({v, b});
    }
  }
  std::sort(inv.embedding.map.begin(), inv.embedding.map.end());
  // fresh labels of the inverse: the interior vertices of D get their old
  // labels back (they are gone from the flipped complex)
  for (const auto& v : move.tmpl.D.vertices()) {
    if (!inv.tmpl.D.has_vertex(v)) {
      inv.fresh.push_back({v, move.embedding.image(v)});
    }
  }
  (void)before;
  return inv;
}

}  // namespace xf
