#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "core/classify.hpp"
#include "core/generate.hpp"
#include "core/iso.hpp"
#include "flips/bistellar.hpp"
#include "flips/cross.hpp"
#include "helpers.hpp"
#include "shelling/shelling.hpp"
#include "util/error.hpp"
#include "util/rng.hpp"

using namespace xf;
using namespace xf::test;

namespace {

// Brute-force oracle: every (A, B) with A a nonempty face, B over subsets of
// V(lk(A)) plus one fresh vertex, tested against the raw conditions.
std::vector<FlipMove> oracle_flips(const SimplicialComplex& c) {
  std::vector<FlipMove> out;
  VertexId fresh = fresh_label(c);
  for (const auto& bucket : c.all_faces()) {
    for (const auto& a : bucket) {
      if (a.empty()) continue;
      auto lk = link(c, a);
      std::vector<VertexId> pool(lk.vertices());
      pool.push_back(fresh);
      size_t n = pool.size();
      for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::vector<VertexId> bs;
        for (size_t i = 0; i < n; ++i)
          if (mask >> i & 1) bs.push_back(pool[i]);
        if (bs.empty()) continue;
        Face b(std::move(bs));
        if (!a.set_intersect(b).empty()) continue;
        if (c.has_face(b)) continue;
        std::vector<Face> bd;
        for (const auto& v : b) bd.push_back(b.set_minus(v));
        if (!(SimplicialComplex::from_facets(std::move(bd)) == lk)) continue;
        out.push_back({a, b});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("available flips on the simplex boundary") {
  auto bs3 = make_simplex_boundary(3);
  auto avail = available_bistellar_flips(bs3);
  CHECK(avail.size() == 4);
  for (const auto& m : avail) {
    CHECK(m.A.card() == 3);
    CHECK(m.B.card() == 1);
  }
  auto oracle = oracle_flips(bs3);
  CHECK(oracle.size() == 4);
}

TEST_CASE("available flips on the octahedron match the oracle") {
  auto c2 = make_cross_polytope_boundary(2);
  auto avail = available_bistellar_flips(c2);
  auto oracle = oracle_flips(c2);
  std::set<std::pair<Face, Face>> sa, so;
  for (const auto& m : avail) sa.insert({m.A, m.B});
  for (const auto& m : oracle) so.insert({m.A, m.B});
  CHECK(sa == so);
  // includes the 8 facet starrings
  size_t starrings = 0;
  for (const auto& m : avail)
    if (m.A.card() == 3) ++starrings;
  CHECK(starrings == 8);
}

TEST_CASE("apply bistellar flip") {
  auto bs3 = make_simplex_boundary(3);
  auto avail = available_bistellar_flips(bs3);
  auto flipped = apply_bistellar_flip(bs3, avail[0]);
  CHECK(f_vector(flipped).counts == std::vector<long long>{1, 5, 9, 6});
  CHECK(classify(flipped).sphere == Verdict::yes);

  // the inverse appears in the flipped complex's move list
  auto inv = avail[0].inverse();
  bool found = false;
  for (const auto& m : available_bistellar_flips(flipped))
    if (m.A == inv.A && m.B == inv.B) found = true;
  CHECK(found);
  CHECK(canonical_form(apply_bistellar_flip(flipped, inv)) == canonical_form(bs3));

  // gluing σ^3 on top of Ā*∂B̄ realizes the exchange: ∂(Δ ∪ Ā*B̄) minus the
  // flipped part equals the flip result (checked on an octahedron edge move)
  auto c2 = make_cross_polytope_boundary(2);
  FlipMove edge{Face::of({"x0", "x1"}), Face::of({"x2", "y2"})};
  std::string why;
  REQUIRE(flip_applicable(c2, edge, &why));
  auto after = apply_bistellar_flip(c2, edge);
  CHECK(classify(after).sphere == Verdict::yes);
  CHECK(f_vector(after).euler() == 2);

  CHECK_THROWS_WITH_AS(apply_bistellar_flip(c2, FlipMove{Face::of({"x0"}), Face::of({"y0"})}),
                       doctest::Contains("not applicable"), Error);
}

TEST_CASE("random flip/inverse roundtrips preserve the surface") {
  Rng rng(404);
  auto [torus, tcol] = balanced_torus();
  SimplicialComplex sphere = make_simplex_boundary(3);
  SimplicialComplex tor = torus;
  for (int trial = 0; trial < 60; ++trial) {
    SimplicialComplex& cur = (trial % 2 == 0) ? sphere : tor;
    long long euler = f_vector(cur).euler();
    auto key = canonical_form(cur);
    auto avail = available_bistellar_flips(cur);
    REQUIRE(!avail.empty());
    auto mv = avail[rng.below(avail.size())];
    auto next = apply_bistellar_flip(cur, mv);
    CHECK(f_vector(next).euler() == euler);
    CHECK(is_closed_surface(next));
    CHECK(canonical_form(apply_bistellar_flip(next, mv.inverse())) == key);
    // drift, keeping sizes tame
    if (next.facet_count() <= (trial % 2 == 0 ? 16 : 40)) cur = next;
  }
}

TEST_CASE("cross-flip catalog d=1") {
  auto cat = enumerate_cross_flip_templates(1, "general");
  // C_1 is a 4-cycle: D = 1,2,3-edge paths, all shellable/co-shellable;
  // up to isomorphism that is one template per size
  CHECK(cat.templates.size() == 3);
  for (const auto& t : cat.templates)
    CHECK(t.D.facet_count() + t.complement.facet_count() == 4);
  auto bas = enumerate_cross_flip_templates(1, "basic");
  for (const auto& t : bas.templates) CHECK(cat.by_key(t.key) != nullptr);
}

TEST_CASE("cross-flip catalog d=2") {
  auto cat = enumerate_cross_flip_templates(2, "general");
  auto c2 = make_cross_polytope_boundary(2);

  std::set<std::pair<size_t, size_t>> pairs;
  for (const auto& t : cat.templates) {
    pairs.insert({t.D.facet_count(), t.complement.facet_count()});
    // independent certification: brute-force permutation shelling oracle
    CHECK(brute_force_shellable(t.D));
    CHECK(brute_force_shellable(t.complement));
    // ∂D = ∂(complement) exactly
    CHECK(boundary_complex(t.D) == boundary_complex(t.complement));
  }
  CHECK(pairs.count({1, 7}) == 1);
  CHECK(pairs.count({2, 6}) == 1);
  CHECK(pairs.count({3, 5}) == 1);
  CHECK(pairs.count({4, 4}) == 1);

  // basic templates come from the 14 proper nonempty facet subsets of ∂σ^3
  // and live inside the general catalog
  auto bas = enumerate_cross_flip_templates(2, "basic");
  CHECK(bas.templates.size() >= 4);
  for (const auto& t : bas.templates) {
    auto* g = cat.by_key(t.key);
    REQUIRE(g != nullptr);
    CHECK(canonical_form(t.complement) == canonical_form(g->complement));
  }
  std::set<std::pair<size_t, size_t>> bpairs;
  for (const auto& t : bas.templates)
    bpairs.insert({t.D.facet_count(), t.complement.facet_count()});
  CHECK(bpairs.count({3, 5}) == 1);  // pentagon shape
  CHECK(bpairs.count({4, 4}) == 1);  // trivial move
}

TEST_CASE("apply cross-flip: trivial move and involution") {
  auto c2 = make_cross_polytope_boundary(2);
  auto cat = enumerate_cross_flip_templates(2, "general");
  auto kappa = cross_polytope_coloring(2);

  for (const auto& t : cat.templates) {
    auto embs = find_induced_embeddings(t.D, c2, 4);
    if (embs.empty()) continue;
    auto mv = make_cross_flip_move(c2, t, embs[0]);
    auto [next, ncol] = apply_cross_flip(c2, mv, kappa);
    REQUIRE(ncol.has_value());
    CHECK(is_proper(next, *ncol));
    CHECK(is_2sphere(next));
    if (t.D.facet_count() == 4 && t.complement.facet_count() == 4) {
      // trivial move: result isomorphic to C_2
      CHECK(canonical_form(next) == canonical_form(c2));
    }
    // applying the inverse at the same spot returns to the start
    auto inv = inverse_cross_flip(c2, mv);
    auto [back, bcol] = apply_cross_flip(next, inv, *ncol);
    CHECK(back == c2);
    CHECK(*bcol == kappa.restricted_to(c2.vertices()));
  }
}

TEST_CASE("shrinking moves take a bipyramid equator to the octahedron") {
  // greedy: keep applying the best shrinking cross-flip; the hexagon
  // bipyramid reaches C_2 (a balanced edge weld drops four facets at once)
  auto cat = enumerate_cross_flip_templates(2, "general");
  SimplicialComplex cur = make_bipyramid(6);
  std::optional<Coloring> col = bipyramid_coloring(6);
  auto c2key = canonical_form(make_cross_polytope_boundary(2));
  int steps = 0;
  while (canonical_form(cur) != c2key && steps < 6) {
    auto avail = available_cross_flips(cur, cat, 4);
    const CrossFlipMove* best = nullptr;
    for (const auto& m : avail) {
      if (m.tmpl.complement.facet_count() >= m.tmpl.D.facet_count()) continue;
      if (!best || m.tmpl.D.facet_count() - m.tmpl.complement.facet_count() >
                       best->tmpl.D.facet_count() - best->tmpl.complement.facet_count())
        best = &m;
    }
    REQUIRE(best != nullptr);
    auto [next, ncol] = apply_cross_flip(cur, *best, col);
    cur = next;
    col = ncol;
    ++steps;
  }
  CHECK(canonical_form(cur) == c2key);
  CHECK(is_proper(cur, *col));
}

TEST_CASE("random cross-flips preserve balancedness") {
  Rng rng(909);
  auto cat = enumerate_cross_flip_templates(2, "general");
  SimplicialComplex cur = make_cross_polytope_boundary(2);
  std::optional<Coloring> col = cross_polytope_coloring(2);
  for (int step = 0; step < 40; ++step) {
    auto avail = available_cross_flips(cur, cat, 6);
    std::vector<CrossFlipMove> ok;
    for (auto& m : avail) {
      if (cur.facet_count() > 26 &&
          m.tmpl.complement.facet_count() > m.tmpl.D.facet_count())
        continue;
      ok.push_back(m);
    }
    REQUIRE(!ok.empty());
    auto& mv = ok[rng.below(ok.size())];
    auto [next, ncol] = apply_cross_flip(cur, mv, col);
    REQUIRE(ncol.has_value());
    CHECK(is_closed_surface(next));
    CHECK(f_vector(next).euler() == 2);
    CHECK(is_proper(next, *ncol));
    // inverse roundtrip preserves the complex exactly
    auto inv = inverse_cross_flip(cur, mv);
    auto [back, bc] = apply_cross_flip(next, inv, *ncol);
    CHECK(back == cur);
    cur = next;
    col = ncol;
  }
}

TEST_CASE("cross-flip error paths") {
  auto c2 = make_cross_polytope_boundary(2);
  auto cat = enumerate_cross_flip_templates(2, "general");
  const CrossFlipTemplate* t17 = nullptr;
  for (const auto& t : cat.templates)
    if (t.D.facet_count() == 1) t17 = &t;
  REQUIRE(t17 != nullptr);
  auto embs = find_induced_embeddings(t17->D, c2, 1);
  REQUIRE(!embs.empty());
  auto mv = make_cross_flip_move(c2, *t17, embs[0]);
  // corrupting a fresh label to an existing vertex must fail
  auto bad = mv;
  for (auto& [tv, nv] : bad.fresh) nv = VertexId::of("x0");
  CHECK_THROWS_WITH_AS(apply_cross_flip(c2, bad, std::nullopt), doctest::Contains("not fresh"),
                       Error);
}
