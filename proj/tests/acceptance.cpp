// Acceptance suite: one line per criterion, hard time limits, nonzero exit
// on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "coloring/extend.hpp"
#include "core/classify.hpp"
#include "core/generate.hpp"
#include "core/iso.hpp"
#include "flips/bistellar.hpp"
#include "flips/cross.hpp"
#include "helpers.hpp"
#include "pipeline/pipeline.hpp"
#include "poset/cobordism.hpp"
#include "shelling/shelling.hpp"
#include "subdivision/diamond.hpp"
#include "subdivision/stellar.hpp"
#include "util/error.hpp"
#include "util/rng.hpp"

using namespace xf;
using namespace xf::test;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<std::string()> run;  // returns "" on pass, else a reason
};

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

#define EXPECT(cond, msg)                 \
  do {                                    \
    if (!(cond)) return std::string(msg); \
  } while (0)

std::string criterion1() {
  for (int d = 1; d <= 8; ++d) {
    auto cd = make_cross_polytope_boundary(d);
    auto fv = f_vector(cd);
    for (int i = 0; i <= d + 1; ++i) {
      long long expect = (1LL << i) * binom(d + 1, i);
      if (fv.counts[i] != expect)
        return "f-vector mismatch at d=" + std::to_string(d) + ", i=" + std::to_string(i);
    }
    EXPECT(is_proper(cd, cross_polytope_coloring(d)),
           "canonical coloring improper at d=" + std::to_string(d));
    EXPECT(classify(cd).closed_pseudomanifold,
           "not a closed pseudomanifold at d=" + std::to_string(d));
  }
  return "";
}

std::string criterion2() {
  for (int d = 1; d <= 4; ++d) {
    auto bs = make_simplex_boundary(d + 1);
    std::vector<Face> flag;
    const auto& vs = bs.vertices();
    for (int i = 1; i <= d; ++i)
      flag.push_back(Face(std::vector<VertexId>(vs.end() - (i + 1), vs.end())));
    auto [result, log] = flag_subdivide(bs, flag);
    EXPECT(canonical_form(result) == canonical_form(make_cross_polytope_boundary(d)),
           "flag subdivision not a cross-polytope at d=" + std::to_string(d));
  }
  for (int d = 1; d <= 3; ++d) {
    auto s = make_simplex(d + 1);
    Coloring k(d + 2);
    int i = 0;
    for (const auto& v : s.vertices()) k.set(v, i++);
    auto dia = diamond(s, k);
    EXPECT(canonical_form(dia.complex) == canonical_form(make_cross_polytope_boundary(d)),
           "diamond boundary not a cross-polytope at d=" + std::to_string(d));
  }
  return "";
}

std::string criterion3() {
  Rng rng(33001);
  for (int trial = 0; trial < 200; ++trial) {
    // random L: |V| <= 10, dim <= 3
    int nv = rng.range(3, 10);
    std::vector<VertexId> vs;
    for (int i = 0; i < nv; ++i) vs.push_back(VertexId::of("u" + std::to_string(i)));
    std::vector<Face> facets;
    int nf = rng.range(2, 8);
    for (int i = 0; i < nf; ++i) {
      int card = rng.range(1, std::min(4, nv));
      std::set<VertexId> pick;
      while (static_cast<int>(pick.size()) < card) pick.insert(vs[rng.below(vs.size())]);
      facets.push_back(Face(std::vector<VertexId>(pick.begin(), pick.end())));
    }
    auto L = SimplicialComplex::from_facets(std::move(facets));
    std::vector<Face> kgen;
    for (const auto& bucket : L.all_faces())
      for (const auto& f : bucket)
        if (!f.empty() && rng.chance(0.3)) kgen.push_back(f);
    auto K = SimplicialComplex::from_facets(std::move(kgen));
    int m = rng.range(1, 5);
    Coloring kappa(m);
    if (!K.is_void()) {
      auto kk = find_proper_coloring_random(K, m, rng);
      if (!kk.has_value()) {
        --trial;  // palette too small for this K; resample
        continue;
      }
      kappa = *kk;
    }
    auto rel = RelativeComplex::of(L, K);
    int d = rel.relative_dim();
    auto res = extend_coloring(rel, kappa, m);
    // proper (independent edge scan)
    for (const auto& e : res.L.faces_of_dim(1)) {
      if (res.coloring.at(e.verts()[0]) == res.coloring.at(e.verts()[1]))
        return "improper output at trial " + std::to_string(trial);
    }
    // K untouched, colors preserved
    for (const auto& g : K.facets())
      EXPECT(res.L.has_face(g), "face of K lost at trial " + std::to_string(trial));
    for (const auto& v : K.vertices())
      EXPECT(res.coloring.at(v) == kappa.at(v), "K vertex recolored");
    // new-vertex palette ⊆ {0..d}
    std::set<VertexId> kv(K.vertices().begin(), K.vertices().end());
    for (const auto& v : res.L.vertices()) {
      if (!kv.count(v))
        EXPECT(res.coloring.at(v) <= std::max(d, 0), "new vertex outside {0..d}");
    }
    // dull count strictly decreasing along the basic-starring log
    size_t last = SIZE_MAX;
    for (const auto& s : res.log) {
      if (s.prepass) continue;
      EXPECT(s.dull_before < last, "dull count not strictly decreasing");
      last = s.dull_before;
    }
    EXPECT(count_dull_faces(res.L, res.coloring) == 0, "dull faces remain");
  }
  return "";
}

std::string criterion4() {
  // exactly 4 moves on ∂σ^3, verified against a brute-force oracle
  auto bs3 = make_simplex_boundary(3);
  auto avail = available_bistellar_flips(bs3);
  EXPECT(avail.size() == 4, "expected 4 moves on the simplex boundary");
  {
    // oracle: all (A, B) pairs with B over link vertices plus a fresh one
    size_t oracle_count = 0;
    VertexId fresh = fresh_label(bs3);
    for (const auto& bucket : bs3.all_faces()) {
      for (const auto& a : bucket) {
        if (a.empty()) continue;
        auto lk = link(bs3, a);
        std::vector<VertexId> pool(lk.vertices());
        pool.push_back(fresh);
        for (size_t mask = 1; mask < (size_t(1) << pool.size()); ++mask) {
          std::vector<VertexId> bvs;
          for (size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) bvs.push_back(pool[i]);
          Face b(std::move(bvs));
          if (!a.set_intersect(b).empty() || bs3.has_face(b)) continue;
          std::vector<Face> bd;
          for (const auto& v : b) bd.push_back(b.set_minus(v));
          if (SimplicialComplex::from_facets(std::move(bd)) == lk) ++oracle_count;
        }
      }
    }
    EXPECT(oracle_count == 4, "oracle count differs");
  }

  // 1000 roundtrips: sphere and balanced torus
  Rng rng(44001);
  auto [torus, tcol] = balanced_torus();
  SimplicialComplex sphere = make_simplex_boundary(3);
  SimplicialComplex tor = torus;
  for (int trial = 0; trial < 1000; ++trial) {
    SimplicialComplex& cur = (trial % 2 == 0) ? sphere : tor;
    long long euler = (trial % 2 == 0) ? 2 : 0;
    auto avail2 = available_bistellar_flips(cur);
    auto mv = avail2[rng.below(avail2.size())];
    auto next = apply_bistellar_flip(cur, mv);
    EXPECT(f_vector(next).euler() == euler, "Euler characteristic changed");
    EXPECT(is_closed_surface(next), "surface check failed");
    auto back = apply_bistellar_flip(next, mv.inverse());
    // bit-exact restoration implies canonical-form equality; spot-check the
    // canonical forms directly as well
    EXPECT(back == cur, "inverse did not restore the complex");
    if (trial % 50 == 0) {
      EXPECT(canonical_form(back) == canonical_form(cur), "canonical form changed");
    }
    size_t cap = (trial % 2 == 0) ? 18 : 42;
    if (next.facet_count() <= cap) cur = next;
  }
  return "";
}

std::string criterion5() {
  // d = 2: exhaustive over the 2^8 facet subsets
  auto cat2 = enumerate_cross_flip_templates(2, "general");
  std::set<std::pair<size_t, size_t>> pairs;
  for (const auto& t : cat2.templates) {
    pairs.insert({t.D.facet_count(), t.complement.facet_count()});
    EXPECT(brute_force_shellable(t.D), "d=2 template fails the permutation oracle (D)");
    EXPECT(brute_force_shellable(t.complement),
           "d=2 template fails the permutation oracle (complement)");
  }
  for (auto need : std::vector<std::pair<size_t, size_t>>{{1, 7}, {2, 6}, {3, 5}, {4, 4}})
    EXPECT(pairs.count(need) == 1, "missing facet-count pair for d=2");
  auto bas2 = enumerate_cross_flip_templates(2, "basic");
  for (const auto& t : bas2.templates)
    EXPECT(cat2.by_key(t.key) != nullptr, "basic template missing from the general catalog");

  // d = 3: all 2^16 subsets, every emitted template certified by the
  // independent backtracking searcher
  auto cat3 = enumerate_cross_flip_templates(3, "general");
  EXPECT(cat3.templates.size() > 0, "empty d=3 catalog");
  auto c3 = make_cross_polytope_boundary(3);
  for (const auto& t : cat3.templates) {
    EXPECT(find_shelling(t.D).has_value(), "d=3 template D not shellable by the searcher");
    EXPECT(is_co_shellable(c3, t.D), "d=3 template not co-shellable by the searcher");
  }
  return "";
}

std::string criterion6() {
  auto check_report = [](const ReductionReport& rep, const SimplicialComplex& delta,
                         Clock::time_point started) -> std::string {
    EXPECT(rep.success, "reduction reported failure");
    EXPECT(canonical_form(rep.start) == canonical_form(make_cross_polytope_boundary(2)),
           "start is not a cross-polytope boundary");
    EXPECT(rep.end == delta, "end is not the input");
    // full certification replay
    SimplicialComplex cur = rep.start;
    std::optional<Coloring> col = rep.start_coloring;
    for (const auto& mv : rep.moves) {
      auto [next, ncol] = apply_move(cur, col, mv);
      if (!is_2sphere(next)) return "intermediate is not a 2-sphere";
      if (!ncol || !is_proper(next, *ncol)) return "intermediate is not balanced";
      cur = next;
      col = ncol;
    }
    EXPECT(cur == delta, "replay did not reach the input");
    double secs = std::chrono::duration<double>(Clock::now() - started).count();
    EXPECT(secs < 60.0, "single run exceeded 60 s");
    return "";
  };

  // (a) bipyramids over 2n-gons, n = 2..8
  for (int n = 2; n <= 8; ++n) {
    auto t0 = Clock::now();
    auto bp = make_bipyramid(2 * n);
    auto rep = reduce_balanced_2sphere(bp, bipyramid_coloring(2 * n));
    auto err = check_report(rep, bp, t0);
    if (!err.empty()) return "bipyramid 2n=" + std::to_string(2 * n) + ": " + err;
  }
  // (b) barycentric subdivision of ∂σ^3
  {
    auto t0 = Clock::now();
    auto [bsd, bcol] = barycentric_subdivision(make_simplex_boundary(3));
    auto rep = reduce_balanced_2sphere(bsd, bcol);
    auto err = check_report(rep, bsd, t0);
    if (!err.empty()) return "barycentric: " + err;
  }
  // (c) 100 random balanced 2-spheres generated by <= 20 random cross-flips
  Rng rng(66001);
  auto cat = enumerate_cross_flip_templates(2, "general");
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex cur = make_cross_polytope_boundary(2);
    std::optional<Coloring> col = cross_polytope_coloring(2);
    int steps = rng.range(1, 20);
    for (int i = 0; i < steps; ++i) {
      auto avail = available_cross_flips(cur, cat, 6);
      std::vector<CrossFlipMove> ok;
      for (auto& m : avail) {
        if (cur.facet_count() >= 34 &&
            m.tmpl.complement.facet_count() > m.tmpl.D.facet_count())
          continue;
        ok.push_back(m);
      }
      if (ok.empty()) break;
      auto& mv = ok[rng.below(ok.size())];
      auto [next, ncol] = apply_cross_flip(cur, mv, col);
      cur = next;
      col = ncol;
    }
    auto t0 = Clock::now();
    auto rep = reduce_balanced_2sphere(cur, col->restricted_to(cur.vertices()));
    auto err = check_report(rep, cur, t0);
    if (!err.empty()) return "random sphere " + std::to_string(trial) + ": " + err;
  }
  return "";
}

std::string criterion7() {
  Rng rng(77001);
  int counter = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex start =
        (trial % 2 == 0) ? make_simplex_boundary(3) : make_cross_polytope_boundary(2);
    SimplicialComplex cur = start;
    int len = rng.range(1, 8);
    std::vector<FlipMove> moves;
    for (int i = 0; i < len; ++i) {
      auto avail = available_bistellar_flips(cur);
      std::vector<FlipMove> ok;
      for (const auto& m : avail) {
        if (cur.facet_count() >= 16 && m.B.card() <= m.A.card()) continue;
        ok.push_back(m);
      }
      if (ok.empty()) ok = avail;
      auto mv = ok[rng.below(ok.size())];
      if (mv.B.card() == 1 && !cur.has_vertex(mv.B.verts()[0]))
        mv.B = Face({VertexId::of("acc7f" + std::to_string(counter++))});
      cur = apply_bistellar_flip(cur, mv);
      moves.push_back(mv);
    }
    std::optional<PseudoCobordism> acc;
    SimplicialComplex walk = start;
    for (const auto& mv : moves) {
      auto el = elementary_cobordism(walk, mv);
      walk = el.right;
      acc = acc ? compose(*acc, el) : el;
    }
    auto dec = decompose(*acc, *acc->witness);  // lemma assertions run inside
    EXPECT(dec.steps.size() == moves.size(), "length mismatch");
    for (size_t i = 0; i < moves.size(); ++i) {
      EXPECT(dec.steps[i].A == moves[i].A && dec.steps[i].B == moves[i].B,
             "decompose returned a different sequence");
      // glb/lub re-checked independently at the vertex level
      EXPECT(dec.steps[i].A.set_intersect(dec.steps[i].B).empty(), "glb(A,B) != ∅");
      EXPECT(dec.steps[i].A.set_union(dec.steps[i].B) == dec.steps[i].cell, "lub(A,B) != F_j");
      const auto& before = i == 0 ? start : dec.steps[i - 1].after;
      EXPECT(before.has_face(dec.steps[i].A), "A_j not in Δ_{j-1}");
      EXPECT(!dec.steps[i].after.has_face(dec.steps[i].A), "A_j still in Δ_j");
      auto lk = link(before, dec.steps[i].A);
      std::vector<Face> bd;
      for (const auto& v : dec.steps[i].B) bd.push_back(dec.steps[i].B.set_minus(v));
      EXPECT(lk == SimplicialComplex::from_facets(std::move(bd)),
             "lk(A_j) != [A_j, F_j) at the complex level");
    }
    EXPECT(dec.steps.back().after == cur, "final end mismatch");
  }
  return "";
}

std::string criterion8() {
  for (const auto& delta : {make_simplex_boundary(2), make_simplex_boundary(3),
                            make_cross_polytope_boundary(2)}) {
    auto dis = disjoint_ends_cobordism(delta);
    // ends share only the empty face
    std::set<Face> lf;
    for (const auto& [f, e] : dis.phi_left) lf.insert(f);
    for (const auto& [f, e] : dis.phi_right) {
      if (!f.empty()) EXPECT(lf.count(f) == 0, "ends share a nonempty face");
    }
    EXPECT(dis.witness.has_value(), "no bidirectional witness");
    auto w = find_bidirectional_shelling(dis);
    EXPECT(w.has_value(), "bidirectional verification failed");
    // cone construction keeps the ends isomorphic
    EXPECT(find_isomorphism(dis.left, dis.right).has_value(), "ends not isomorphic");
  }
  return "";
}

std::string criterion9() {
  auto c2 = make_cross_polytope_boundary(2);
  FlipMove edge{Face::of({"x0", "x1"}), Face::of({"x2", "y2"})};
  auto el = elementary_cobordism(c2, edge);
  Face ab = edge.A.set_union(edge.B);
  auto ends_expected = [&](const SimplicialComplex& end, const Face& sigma,
                           const SimplicialComplex& got, VertexId apex) {
    if (!end.has_face(sigma)) return end == got;
    if (sigma.card() == 1) return relabel(end, {{sigma.verts()[0], apex}}) == got;
    return stellar_subdivide(end, sigma, apex) == got;
  };
  for (const auto& sigma : all_subsets_of(ab)) {
    if (sigma.card() < 1) continue;
    auto sub = subdivide_cobordism(el, sigma);
    EXPECT(sub.witness.has_value(), "no witness after subdividing at " + sigma.to_string());
    auto w = find_bidirectional_shelling(sub);
    EXPECT(w.has_value(), "verification failed at " + sigma.to_string());
    // the ends are the correspondingly subdivided ends
    VertexId apex = sub.P.all_labels().back();
    for (const auto& v : sub.P.all_labels())
      if (v.label().rfind("~", 0) == 0) apex = v;
    EXPECT(ends_expected(el.left, sigma, sub.left, apex),
           "left end mismatch at " + sigma.to_string());
    EXPECT(ends_expected(el.right, sigma, sub.right, apex),
           "right end mismatch at " + sigma.to_string());
  }
  return "";
}

std::string criterion10() {
  Rng rng(10001);
  for (int trial = 0; trial < 20; ++trial) {
    auto d1 = random_sphere(rng, rng.range(2, 8), 20);  // <= 12 vertices
    auto d2 = random_sphere(rng, rng.range(2, 8), 20);
    auto k1 = find_proper_coloring(d1, 4);
    auto k2 = find_proper_coloring(d2, 4);
    EXPECT(k1.has_value() && k2.has_value(), "4-coloring not found");
    auto rep = colored_connect(d1, *k1, d2, *k2);
    EXPECT(rep.success, "connection failed");
    // replay: every intermediate properly 4-colored, no vertex ever recolored
    SimplicialComplex cur = rep.start;
    std::optional<Coloring> col = rep.start_coloring;
    for (const auto& mv : rep.moves) {
      auto [next, ncol] = apply_move(cur, col, mv);
      if (!ncol || !is_proper(next, *ncol)) return "improper intermediate";
      if (ncol->palette_size() != 4) return "palette changed";
      for (const auto& v : next.vertices()) {
        if (col->colors(v) && col->at(v) != ncol->at(v)) return "vertex recolored";
      }
      cur = next;
      col = ncol;
    }
    EXPECT(cur == rep.end, "replay mismatch");
    EXPECT(find_colored_isomorphism(cur, *col, d2, *k2).has_value(),
           "end does not match the target sphere");
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "cross-polytope invariants d=1..8", 5.0, criterion1},
      {2, "flag subdivision and diamond give cross-polytopes", 10.0, criterion2},
      {3, "coloring-extension suite (200 random relative complexes)", 30.0, criterion3},
      {4, "flip calculus (oracle count + 1000 roundtrips)", 60.0, criterion4},
      {5, "cross-flip catalogs d=2 and d=3 with certification", 600.0, criterion5},
      {6, "balanced 2-sphere reduction at desk scale", 60.0 * 109, criterion6},
      {7, "pseudo-cobordism compose/decompose (100 random sequences)", 120.0, criterion7},
      {8, "eliminate-face / disjoint ends", 10.0, criterion8},
      {9, "subdivision preserves shellability (cases 1-3)", 30.0, criterion9},
      {10, "colored connection of 20 random pairs", 120.0, criterion10},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only && c.number != only) continue;
    auto t0 = Clock::now();
    std::string err;
    try {
      err = c.run();
    } catch (const Error& e) {
      err = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool timed_out = secs >= c.limit_seconds;
    bool pass = err.empty() && !timed_out;
    all_pass = all_pass && pass;
    std::printf("criterion %2d: %s — %s (%.2f s, limit %.0f s)%s%s\n", c.number,
                pass ? "PASS" : "FAIL", c.title, secs, c.limit_seconds,
                err.empty() ? "" : " — ", err.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
