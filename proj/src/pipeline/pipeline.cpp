#include "pipeline/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "coloring/extend.hpp"
#include "core/classify.hpp"
#include "core/generate.hpp"
#include "shelling/shelling.hpp"
#include "subdivision/diamond.hpp"
#include "subdivision/stellar.hpp"
#include "util/error.hpp"
#include "util/rng.hpp"

namespace xf {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Cone over delta, color-extended to a proper coloring and equipped with a
// shelling transformed through the extension's subdivision log.
struct ColoredBall {
  SimplicialComplex omega;
  Coloring coloring;
  ShellingOrder shelling;
};

ColoredBall build_colored_ball(const SimplicialComplex& delta, const Coloring& kappa, int m) {
  VertexId apex = fresh_label(delta, "c");
  auto cone0 = cone(apex, delta);
  auto base = find_shelling(delta);
  require(base.has_value(), "pipeline: input sphere is not shellable", errc::internal);
  ShellingOrder order = cone_shelling(apex, *base);

  auto ext = extend_coloring(RelativeComplex::of(cone0, delta), kappa, m);
  SimplicialComplex cur = cone0;
  for (const auto& step : ext.log) {
    order = subdivide_shelling(cur, order, step.target, step.apex);
    cur = stellar_subdivide(cur, step.target, step.apex);
  }
  require(cur == ext.L, "pipeline: shelling transform diverged from the extension",
          errc::internal);
  return {ext.L, ext.coloring, order};
}

StepCertificate certify_balanced_surface(const SimplicialComplex& c, const Coloring& k) {
  StepCertificate cert;
  auto r = classify(c);
  cert.manifold_ok = (r.dim == 2 && r.closed_manifold == Verdict::yes);
  cert.euler = r.euler;
  cert.coloring_proper = is_proper(c, k);
  return cert;
}

}  // namespace

ReductionReport reduce_balanced_2sphere(const SimplicialComplex& delta, const Coloring& kappa) {
  auto t0 = std::chrono::steady_clock::now();
  require(is_2sphere(delta), "reduce: input is not a combinatorial 2-sphere");
  require(kappa.palette_size() == 3, "reduce: expected a 3-coloring");
  require(is_proper(delta, kappa), "reduce: coloring is not proper");

  ReductionReport rep;
  rep.kind = "reduce-balanced-2sphere";

  auto ball = build_colored_ball(delta, kappa, 3);
  auto dia = diamond(ball.omega, ball.coloring);
  auto cross = make_cross_polytope_boundary(2);
  std::string cross_key = canonical_form(cross);

  // occupancy of boundary facets over the cells added so far (degree 1 = boundary)
  std::map<Face, int> occupancy;
  auto add_cell = [&](const Face& g) {
    for (const auto& f : dia.cells.at(g)) occupancy[f]++;
  };
  auto boundary_now = [&]() {
    std::vector<Face> fs;
    for (const auto& [f, n] : occupancy)
      if (n == 1) fs.push_back(f);
    return SimplicialComplex::from_facets(std::move(fs));
  };

  const auto& order = ball.shelling;
  add_cell(order.facets[0]);
  SimplicialComplex bcur = boundary_now();
  require(canonical_form(bcur) == cross_key, "reduce: first cell boundary is not a cross-polytope",
          errc::internal);
  Coloring ccur = dia.coloring.restricted_to(bcur.vertices());
  rep.start = bcur;
  rep.start_coloring = ccur;
  rep.keys.push_back(content_key(bcur));

  for (size_t j = 1; j < order.facets.size(); ++j) {
    const Face& g = order.facets[j];
    const Face& r = order.restrictions[j];
    require(r.card() > 0 && r.card() < g.card(), "reduce: degenerate restriction face",
            errc::internal);
    // Γ_j = faces of ∂Ḡ_j already present; its diamond is the D side
    std::vector<Face> d_facets;
    for (const auto& v : r) {
      const auto& ps = dia.pieces.at(g.set_minus(v));
      d_facets.insert(d_facets.end(), ps.begin(), ps.end());
    }
    auto d_actual = SimplicialComplex::from_facets(std::move(d_facets));
    const Isomorphism& cell_iso = dia.cell_iso.at(g);  // canonical -> cell labels
    Isomorphism to_canonical = cell_iso.inverse();

    CrossFlipMove move;
    move.tmpl.d = 2;
    move.tmpl.D = to_canonical.image(d_actual);
    {
      std::vector<Face> cf;
      for (const auto& f : cross.facets())
        if (!std::binary_search(move.tmpl.D.facets().begin(), move.tmpl.D.facets().end(), f))
          cf.push_back(f);
      move.tmpl.complement = SimplicialComplex::from_facets(std::move(cf));
    }
    move.tmpl.key = canonical_form(move.tmpl.D);
    move.tmpl.provenance = CrossFlipTemplate::Provenance::basic;
    for (const auto& v : move.tmpl.D.vertices()) move.embedding.map.push_back({v, cell_iso.image(v)});
    std::sort(move.embedding.map.begin(), move.embedding.map.end());
    for (const auto& v : move.tmpl.complement.vertices()) {
      if (!move.tmpl.D.has_vertex(v)) move.fresh.push_back({v, cell_iso.image(v)});
    }

    StepCertificate cert;
    cert.template_shellable = find_shelling(move.tmpl.D).has_value();
    cert.template_co_shellable = is_co_shellable(cross, move.tmpl.D);
    cert.induced_ok = induced_subcomplex(bcur, d_actual.vertices()) == d_actual;
    require(cert.template_shellable && cert.template_co_shellable && cert.induced_ok,
            "reduce: emitted move failed certification", errc::internal);

    auto [next, ncol] = apply_cross_flip(bcur, move, ccur);
    add_cell(g);
    require(next == boundary_now(), "reduce: flip disagrees with the cell boundary",
            errc::internal);
    auto expected_col = dia.coloring.restricted_to(next.vertices());
    require(ncol.has_value() && *ncol == expected_col, "reduce: transported coloring mismatch",
            errc::internal);
    bcur = std::move(next);
    ccur = *ncol;

    auto scert = certify_balanced_surface(bcur, ccur);
    cert.manifold_ok = scert.manifold_ok && classify(bcur).sphere == Verdict::yes;
    cert.coloring_proper = scert.coloring_proper;
    cert.euler = scert.euler;
    require(cert.all(), "reduce: intermediate is not a balanced 2-sphere", errc::internal);
    rep.moves.push_back(cross_record(move));
    rep.certificates.push_back(cert);
    rep.keys.push_back(content_key(bcur));
  }
  require(bcur == delta, "reduce: final boundary is not the input sphere", errc::internal);
  rep.end = bcur;
  rep.end_coloring = ccur;
  rep.success = true;
  rep.stats.steps = static_cast<long long>(rep.moves.size());
  rep.stats.runtime_ms = ms_since(t0);
  rep.message = "cross-flip path from the cross-polytope boundary to the input";
  return rep;
}

namespace {

ReductionReport anneal(const SimplicialComplex& delta, const CrossFlipCatalog* catalog,
                       const AnnealOptions& opts, bool bistellar_mode) {
  auto t0 = std::chrono::steady_clock::now();
  ReductionReport rep;
  rep.kind = bistellar_mode ? "bistellar-reduce" : "heuristic-reduce";
  rep.seed = opts.seed;
  rep.budget = opts.budget;
  require(!delta.is_void(), "reduce: empty complex");
  int d = *delta.dim();
  {
    auto r = classify(delta);
    if (d <= 2) {
      require(r.closed_manifold == Verdict::yes, "reduce: not a closed manifold");
    } else {
      require(r.closed_pseudomanifold, "reduce: not a closed pseudomanifold");
    }
  }

  std::optional<Coloring> col;
  if (!bistellar_mode) {
    auto k = find_proper_coloring(delta, d + 1);
    require(k.has_value(), "heuristic reduce: complex is not balanced");
    col = k;
  }
  auto target = bistellar_mode ? make_simplex_boundary(d + 1) : make_cross_polytope_boundary(d);
  auto target_f = f_vector(target);
  auto target_key = canonical_form(target);

  SimplicialComplex cur = delta;
  rep.start = cur;
  rep.start_coloring = col;
  rep.keys.push_back(content_key(cur));
  long long euler0 = f_vector(cur).euler();

  Rng rng(opts.seed);
  double temp = opts.temperature;
  long long proposal_cap = opts.budget * 50 + 1000;

  while (static_cast<long long>(rep.moves.size()) < opts.budget) {
    if (f_vector(cur) == target_f && canonical_form(cur) == target_key) {
      rep.success = true;
      break;
    }
    MoveRecord rec;
    long long gain = 0;
    if (bistellar_mode) {
      auto avail = available_bistellar_flips(cur);
      if (avail.empty()) break;
      const auto& mv = avail[rng.below(avail.size())];
      gain = static_cast<long long>(mv.A.card()) - static_cast<long long>(mv.B.card());
      rec = bistellar_record(mv);
    } else {
      auto avail = available_cross_flips(cur, *catalog, opts.embeddings_per_template);
      if (avail.empty()) break;
      const auto& mv = avail[rng.below(avail.size())];
      gain = static_cast<long long>(mv.tmpl.complement.facet_count()) -
             static_cast<long long>(mv.tmpl.D.facet_count());
      rec = cross_record(mv);
    }
    ++rep.stats.proposals;
    if (rep.stats.proposals > proposal_cap) {
      rep.message = "proposal cap reached";
      break;
    }
    bool accept = gain <= 0 || rng.unit() < std::exp(-static_cast<double>(gain) / temp);
    if (!accept) continue;

    auto [next, ncol] = apply_move(cur, col, rec);
    StepCertificate cert;
    auto r = classify(next);
    cert.euler = r.euler;
    cert.manifold_ok = (d <= 2) ? (r.closed_manifold == Verdict::yes && r.euler == euler0)
                                : r.closed_pseudomanifold;
    cert.coloring_proper = !ncol || is_proper(next, *ncol);
    require(cert.all(), "reduce: applied move broke an invariant", errc::internal);
    cur = std::move(next);
    col = std::move(ncol);
    temp *= opts.decay;
    rep.moves.push_back(std::move(rec));
    rep.certificates.push_back(cert);
    rep.keys.push_back(content_key(cur));
  }
  if (!rep.success && f_vector(cur) == target_f && canonical_form(cur) == target_key)
    rep.success = true;
  rep.end = cur;
  rep.end_coloring = col;
  rep.stats.steps = static_cast<long long>(rep.moves.size());
  rep.stats.runtime_ms = ms_since(t0);
  if (rep.message.empty())
    rep.message = rep.success ? "reached the minimal complex" : "stopped at a local minimum";
  return rep;
}

}  // namespace

ReductionReport heuristic_reduce(const SimplicialComplex& delta, const CrossFlipCatalog& catalog,
                                 const AnnealOptions& opts) {
  return anneal(delta, &catalog, opts, false);
}

ReductionReport bistellar_reduce(const SimplicialComplex& delta, const AnnealOptions& opts) {
  return anneal(delta, nullptr, opts, true);
}

namespace {

// Forward flip path from the boundary of the first cell to delta, walking a
// shelled colored ball; every step is one bistellar flip on the boundary.
struct HalfPath {
  std::vector<MoveRecord> forward;    // S -> delta
  std::vector<MoveRecord> backward;   // delta -> S
  SimplicialComplex simplex_end;      // S (a simplex boundary)
  Coloring simplex_coloring;
  Coloring delta_coloring;
};

HalfPath colored_half_path(const SimplicialComplex& delta, const Coloring& kappa, int m) {
  HalfPath hp;
  auto ball = build_colored_ball(delta, kappa, m);
  const auto& order = ball.shelling;

  SimplicialComplex grown = SimplicialComplex::from_facets({order.facets[0]});
  SimplicialComplex bcur = boundary_complex(grown);
  hp.simplex_end = bcur;
  hp.simplex_coloring = ball.coloring.restricted_to(bcur.vertices());
  Coloring ccur = hp.simplex_coloring;

  for (size_t j = 1; j < order.facets.size(); ++j) {
    auto [next_ball, mv] = shelling_step_boundary(grown, order.facets[j]);
    auto next = apply_bistellar_flip(bcur, mv);
    require(next == boundary_complex(next_ball), "colored path: boundary mismatch",
            errc::internal);
    MoveRecord rec = bistellar_record(mv);
    Coloring ncol(ccur.palette_size());
    for (const auto& v : next.vertices()) {
      auto old = ccur.get(v);
      if (old) {
        ncol.set(v, *old);
      } else {
        int c = ball.coloring.at(v);
        ncol.set(v, c);
        rec.new_colors[v] = c;
      }
    }
    require(is_proper(next, ncol), "colored path: improper intermediate", errc::internal);

    // inverse move re-creates the vertices removed by the forward one
    MoveRecord inv = bistellar_record(mv.inverse());
    for (const auto& v : bcur.vertices()) {
      if (!next.has_vertex(v)) inv.new_colors[v] = ccur.at(v);
    }
    hp.forward.push_back(std::move(rec));
    hp.backward.push_back(std::move(inv));
    grown = std::move(next_ball);
    bcur = std::move(next);
    ccur = std::move(ncol);
  }
  std::reverse(hp.backward.begin(), hp.backward.end());
  require(bcur == delta, "colored path: walk did not end at the input", errc::internal);
  hp.delta_coloring = ccur;
  for (const auto& v : delta.vertices())
    require(ccur.at(v) == kappa.at(v), "colored path: an input vertex changed color",
            errc::internal);
  return hp;
}

// Flip pairs that turn an m-coloring of a simplex boundary into one that uses
// only colors {0..d+1}: star the facet opposite the offending vertex with a
// freshly colored apex, then weld the vertex away.
std::vector<MoveRecord> recolor_to_low_palette(SimplicialComplex& s, Coloring& k) {
  std::vector<MoveRecord> out;
  int d1 = *s.dim() + 1;  // vertices of the simplex boundary = d+2, colors {0..d+1}
  while (true) {
    std::optional<VertexId> high;
    std::set<int> used;
    for (const auto& v : s.vertices()) used.insert(k.at(v));
    for (const auto& v : s.vertices()) {
      if (k.at(v) > d1) {
        high = v;
        break;
      }
    }
    if (!high) break;
    int low = -1;
    for (int c = 0; c <= d1; ++c) {
      if (!used.count(c)) {
        low = c;
        break;
      }
    }
    require(low >= 0, "recolor: no free low color", errc::internal);
    Face opposite{[&] {
      std::vector<VertexId> vs;
      for (const auto& v : s.vertices())
        if (!(v == *high)) vs.push_back(v);
      return vs;
    }()};
    VertexId w = fresh_label(s, "r");
    MoveRecord sub = bistellar_record({opposite, Face({w})});
    sub.new_colors[w] = low;
    auto [s1, k1] = apply_move(s, k, sub);
    out.push_back(std::move(sub));
    MoveRecord weld = bistellar_record({Face({*high}), opposite});
    auto [s2, k2] = apply_move(s1, k1, weld);
    out.push_back(std::move(weld));
    s = std::move(s2);
    k = std::move(*k2);
  }
  return out;
}

// Replay `moves` (recorded on another complex) onto `cur` through a running
// vertex bijection rho; fresh labels are re-chosen on this side.
struct MappedReplay {
  std::vector<MoveRecord> moves;
  SimplicialComplex end;
  std::optional<Coloring> coloring;
  std::map<VertexId, VertexId> rho;  // other-side label -> this-side label
};

MappedReplay replay_with_map(const std::vector<MoveRecord>& moves,
                             std::map<VertexId, VertexId> rho, SimplicialComplex cur,
                             std::optional<Coloring> col) {
  MappedReplay out;
  auto map_v = [&](VertexId v) {
    auto it = rho.find(v);
    require(it != rho.end(), "splice: unmapped vertex '" + v.label() + "'", errc::internal);
    return it->second;
  };
  for (const auto& m : moves) {
    MoveRecord nm;
    nm.kind = m.kind;
    if (m.kind == MoveRecord::Kind::bistellar) {
      std::vector<VertexId> av, bv;
      std::vector<VertexId> used_now(cur.vertices());
      for (const auto& v : m.flip.A) av.push_back(map_v(v));
      for (const auto& v : m.flip.B) {
        auto it = rho.find(v);
        if (it != rho.end()) {
          bv.push_back(it->second);
        } else {
          VertexId f = fresh_labels(used_now, 1)[0];
          used_now.push_back(f);
          rho[v] = f;
          bv.push_back(f);
        }
      }
      nm.flip = FlipMove{Face(std::move(av)), Face(std::move(bv))};
      for (const auto& [v, c] : m.new_colors) nm.new_colors[rho.at(v)] = c;
    } else {
      CrossFlipMove cm;
      cm.tmpl = m.cross->tmpl;
      for (const auto& [tv, target] : m.cross->embedding.map)
        cm.embedding.map.push_back({tv, map_v(target)});
      std::sort(cm.embedding.map.begin(), cm.embedding.map.end());
      std::vector<VertexId> used_now(cur.vertices());
      for (const auto& [tv, fb] : m.cross->fresh) {
        auto fresh = fresh_labels(used_now, 1);
        used_now.push_back(fresh[0]);
        rho[fb] = fresh[0];
        cm.fresh.push_back({tv, fresh[0]});
      }
      nm.cross = std::move(cm);
    }
    auto [next, ncol] = apply_move(cur, col, nm);
    out.moves.push_back(std::move(nm));
    cur = std::move(next);
    col = std::move(ncol);
  }
  out.end = std::move(cur);
  out.coloring = std::move(col);
  out.rho = std::move(rho);
  return out;
}

}  // namespace

ReductionReport colored_connect(const SimplicialComplex& delta, const Coloring& kd,
                                const SimplicialComplex& gamma, const Coloring& kg) {
  auto t0 = std::chrono::steady_clock::now();
  require(kd.palette_size() == kg.palette_size(),
          "colored connect: palettes differ between the two inputs");
  int m = kd.palette_size();
  require(m >= 4, "colored connect: theorem needs m >= d+2 = 4");
  require(is_2sphere(delta) && is_2sphere(gamma), "colored connect: inputs must be 2-spheres");
  require(is_proper(delta, kd) && is_proper(gamma, kg), "colored connect: improper coloring");

  ReductionReport rep;
  rep.kind = "colored-connect";
  rep.start = delta;
  rep.start_coloring = kd;

  if (delta == gamma && kd.restricted_to(delta.vertices()) == kg.restricted_to(gamma.vertices())) {
    rep.end = gamma;
    rep.end_coloring = kg;
    rep.success = true;
    rep.keys.push_back(content_key(delta));
    rep.message = "inputs already coincide";
    rep.stats.runtime_ms = ms_since(t0);
    return rep;
  }

  auto ha = colored_half_path(delta, kd, m);
  auto hb = colored_half_path(gamma, kg, m);

  // Δ -> S_A, then recolor S_A into colors {0..3}
  SimplicialComplex sa = ha.simplex_end;
  Coloring ka = ha.simplex_coloring;
  std::vector<MoveRecord> path = ha.backward;
  {
    SimplicialComplex s = sa;
    Coloring k = ka;
    auto rc = recolor_to_low_palette(s, k);
    path.insert(path.end(), rc.begin(), rc.end());
    sa = std::move(s);
    ka = std::move(k);
  }
  // Γ -> S_B, recolored; then reversed to go S_B -> Γ
  SimplicialComplex sb = hb.simplex_end;
  Coloring kb = hb.simplex_coloring;
  std::vector<MoveRecord> b_to_low;
  {
    SimplicialComplex s = sb;
    Coloring k = kb;
    b_to_low = recolor_to_low_palette(s, k);
    sb = std::move(s);
    kb = std::move(k);
  }
  // reverse of (Γ -> S_B -> low): forward moves are hb.forward after the
  // low-palette fixups are undone; build by replaying and inverting
  std::vector<MoveRecord> sb_to_gamma;
  {
    // invert b_to_low (each pair: subdivide then weld)
    SimplicialComplex s = sb;
    Coloring k = kb;
    std::vector<MoveRecord> inv;
    // replay b_to_low backwards from its end (= sb after fixups? no: sb is the
    // end). We need inverses of b_to_low applied from sb.
    // Reconstruct: replay forward from hb.simplex_end recording inverses.
    SimplicialComplex scur = hb.simplex_end;
    std::optional<Coloring> kcur = hb.simplex_coloring;
    for (const auto& mvr : b_to_low) {
      MoveRecord im = bistellar_record(mvr.flip.inverse());
      auto [next, nk] = apply_move(scur, kcur, mvr);
      for (const auto& v : scur.vertices())
        if (!next.has_vertex(v)) im.new_colors[v] = kcur->at(v);
      inv.push_back(std::move(im));
      scur = std::move(next);
      kcur = std::move(nk);
    }
    std::reverse(inv.begin(), inv.end());
    sb_to_gamma = std::move(inv);
    sb_to_gamma.insert(sb_to_gamma.end(), hb.forward.begin(), hb.forward.end());
  }

  // seam: color-matching bijection S_B(can) -> S_A(can)
  std::map<VertexId, VertexId> rho;
  {
    std::map<int, VertexId> by_color_a;
    for (const auto& v : sa.vertices()) by_color_a[ka.at(v)] = v;
    for (const auto& v : sb.vertices()) {
      auto it = by_color_a.find(kb.at(v));
      require(it != by_color_a.end(), "colored connect: seam colors do not match",
              errc::internal);
      rho[v] = it->second;
    }
  }
  auto mapped = replay_with_map(sb_to_gamma, std::move(rho), sa, ka);
  path.insert(path.end(), mapped.moves.begin(), mapped.moves.end());

  // replay the whole path from delta with certification
  SimplicialComplex cur = delta;
  std::optional<Coloring> col = kd;
  rep.keys.push_back(content_key(cur));
  for (auto& mv : path) {
    auto prev_col = col;
    auto [next, ncol] = apply_move(cur, col, mv);
    StepCertificate cert;
    auto r = classify(next);
    cert.euler = r.euler;
    cert.manifold_ok = (r.sphere == Verdict::yes);
    cert.coloring_proper = ncol && is_proper(next, *ncol);
    // no recoloring of surviving vertices
    for (const auto& v : next.vertices()) {
      if (prev_col->colors(v) && prev_col->at(v) != ncol->at(v)) cert.coloring_proper = false;
    }
    require(cert.all(), "colored connect: certification failed", errc::internal);
    rep.certificates.push_back(cert);
    cur = std::move(next);
    col = std::move(ncol);
    rep.moves.push_back(std::move(mv));
    rep.keys.push_back(content_key(cur));
  }
  // the result is gamma up to the splice relabeling, color-preservingly
  auto witness = find_colored_isomorphism(cur, *col, gamma, kg);
  require(witness.has_value(), "colored connect: end is not the target sphere", errc::internal);
  rep.end = cur;
  rep.end_coloring = col;
  rep.success = true;
  rep.stats.steps = static_cast<long long>(rep.moves.size());
  rep.stats.runtime_ms = ms_since(t0);
  rep.message = "color-preserving flip path; end matches the target up to relabeling";
  return rep;
}

ReductionReport connect_balanced(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                                 long long budget, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  auto ra = classify(delta);
  auto rb = classify(gamma);
  require(ra.dim == 2 && ra.closed_manifold == Verdict::yes && rb.dim == 2 &&
              rb.closed_manifold == Verdict::yes,
          "connect: inputs must be closed surfaces");
  require(ra.euler == rb.euler && ra.orientable == rb.orientable,
          "connect: PL-type mismatch between the inputs");
  auto kda = find_proper_coloring(delta, 3);
  auto kga = find_proper_coloring(gamma, 3);
  require(kda.has_value() && kga.has_value(), "connect: inputs must be balanced");

  ReductionReport rep;
  rep.kind = "connect-balanced";
  rep.seed = seed;
  rep.budget = budget;
  rep.start = delta;
  rep.start_coloring = kda;

  std::vector<MoveRecord> path;
  SimplicialComplex seam_a, seam_b;
  std::optional<Coloring> seam_ka, seam_kb;
  std::vector<MoveRecord> b_side;  // seam_b -> gamma

  if (ra.sphere == Verdict::yes) {
    auto rda = reduce_balanced_2sphere(delta, *kda);
    auto rdb = reduce_balanced_2sphere(gamma, *kga);
    // reverse rda: delta -> C2
    {
      SimplicialComplex cur = rda.start;
      std::vector<MoveRecord> inv;
      for (const auto& mv : rda.moves) {
        auto im = inverse_cross_flip(cur, *mv.cross);
        auto [next, nc] = apply_cross_flip(cur, *mv.cross, std::nullopt);
        (void)nc;
        inv.push_back(cross_record(im));
        cur = std::move(next);
      }
      std::reverse(inv.begin(), inv.end());
      path = std::move(inv);
    }
    seam_a = rda.start;
    seam_ka = rda.start_coloring;
    seam_b = rdb.start;
    seam_kb = rdb.start_coloring;
    b_side = rdb.moves;
  } else {
    auto catalog = enumerate_cross_flip_templates(2, "general");
    AnnealOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    auto rha = heuristic_reduce(delta, catalog, opts);
    opts.seed = seed + 1;
    auto rhb = heuristic_reduce(gamma, catalog, opts);
    require(canonical_form(rha.end) == canonical_form(rhb.end),
            "connect: no common minimum reached within budget (the theorem guarantees a path, "
            "not this search)",
            errc::budget);
    path = rha.moves;
    seam_a = rha.end;
    seam_ka = rha.end_coloring;
    seam_b = rhb.end;
    seam_kb = rhb.end_coloring;
    // reverse rhb: minimum -> gamma
    {
      SimplicialComplex cur = rhb.start;
      std::vector<MoveRecord> inv;
      for (const auto& mv : rhb.moves) {
        auto im = inverse_cross_flip(cur, *mv.cross);
        auto [next, nc] = apply_cross_flip(cur, *mv.cross, std::nullopt);
        (void)nc;
        inv.push_back(cross_record(im));
        cur = std::move(next);
      }
      std::reverse(inv.begin(), inv.end());
      b_side = std::move(inv);
    }
  }

  // seam bijection (color-matching when possible)
  std::map<VertexId, VertexId> rho;
  {
    auto iso = seam_ka && seam_kb ? find_colored_isomorphism(seam_b, *seam_kb, seam_a, *seam_ka)
                                  : find_isomorphism(seam_b, seam_a);
    require(iso.has_value(), "connect: seam complexes are not isomorphic", errc::internal);
    for (const auto& [b, a] : iso->map) rho[b] = a;
  }
  auto mapped = replay_with_map(b_side, std::move(rho), seam_a, seam_ka);
  path.insert(path.end(), mapped.moves.begin(), mapped.moves.end());

  // replay with certification
  SimplicialComplex cur = delta;
  std::optional<Coloring> col = kda;
  rep.keys.push_back(content_key(cur));
  for (auto& mv : path) {
    auto [next, ncol] = apply_move(cur, col, mv);
    StepCertificate cert;
    auto r = classify(next);
    cert.euler = r.euler;
    cert.manifold_ok = (r.dim == 2 && r.closed_manifold == Verdict::yes && r.euler == ra.euler);
    cert.coloring_proper = ncol && is_proper(next, *ncol);
    require(cert.all(), "connect: certification failed", errc::internal);
    rep.certificates.push_back(cert);
    cur = std::move(next);
    col = std::move(ncol);
    rep.moves.push_back(std::move(mv));
    rep.keys.push_back(content_key(cur));
  }
  auto wit = find_isomorphism(cur, gamma);
  require(wit.has_value(), "connect: end is not the target", errc::internal);
  rep.end = cur;
  rep.end_coloring = col;
  rep.success = true;
  rep.stats.steps = static_cast<long long>(rep.moves.size());
  rep.stats.runtime_ms = ms_since(t0);
  rep.message = "cross-flip path; end matches the target up to relabeling";
  return rep;
}

}  // namespace xf
