#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coloring/extend.hpp"
#include "subdivision/stellar.hpp"
#include "core/classify.hpp"
#include "core/generate.hpp"
#include "helpers.hpp"
#include "util/error.hpp"
#include "util/rng.hpp"

using namespace xf;
using namespace xf::test;

TEST_CASE("is_proper") {
  auto c2 = make_cross_polytope_boundary(2);
  CHECK(is_proper(c2, cross_polytope_coloring(2)));

  auto cyc = SimplicialComplex::from_facets(
      {Face::of({"a", "b"}), Face::of({"b", "c"}), Face::of({"a", "c"})});
  Coloring bad(2);
  bad.set(VertexId::of("a"), 0);
  bad.set(VertexId::of("b"), 0);
  bad.set(VertexId::of("c"), 1);
  CHECK_FALSE(is_proper(cyc, bad));

  Coloring partial(2);
  partial.set(VertexId::of("a"), 0);
  CHECK_THROWS_WITH_AS(is_proper(cyc, partial), doctest::Contains("uncolored"), Error);

  CHECK(is_proper(make_bipyramid(6), bipyramid_coloring(6)));
}

TEST_CASE("find_proper_coloring") {
  // ∂σ^{d+1} needs exactly d+2 colors (complete graph)
  for (int d = 1; d <= 3; ++d) {
    auto bs = make_simplex_boundary(d + 1);
    CHECK(find_proper_coloring(bs, d + 2).has_value());
    CHECK_FALSE(find_proper_coloring(bs, d + 1).has_value());
  }
  // barycentric subdivision of ∂σ^3 is balanced: 3 colors suffice
  auto [bsd, bcol] = barycentric_subdivision(make_simplex_boundary(3));
  CHECK(is_proper(bsd, bcol));
  auto found = find_proper_coloring(bsd, 3);
  REQUIRE(found.has_value());
  CHECK(is_proper(bsd, *found));
}

TEST_CASE("extend_coloring small examples") {
  // K = L properly colored: identity
  auto c2 = make_cross_polytope_boundary(2);
  auto id = extend_coloring(RelativeComplex::of(c2, c2), cross_polytope_coloring(2), 3);
  CHECK(id.L == c2);
  CHECK(id.log.empty());

  // L = triangle, K = its three vertices all colored 0, m = 1
  auto tri = make_simplex(2);
  SimplicialComplex k = SimplicialComplex::from_facets(
      {Face::of({"v0"}), Face::of({"v1"}), Face::of({"v2"})});
  Coloring zeros(1);
  for (const auto& v : k.vertices()) zeros.set(v, 0);
  auto res = extend_coloring(RelativeComplex::of(tri, k), zeros, 1);
  CHECK(is_proper(res.L, res.coloring));
  // K vertices untouched
  for (const auto& v : k.vertices()) CHECK(res.coloring.at(v) == 0);
  // palette within {0..2} (d = 2), established by an independent scan
  for (const auto& v : res.L.vertices()) {
    CHECK(res.coloring.at(v) >= 0);
    CHECK(res.coloring.at(v) <= 2);
  }
  // every original edge with equal-colored endpoints was subdivided
  CHECK_FALSE(res.L.has_face(Face::of({"v0", "v1"})));

  // cone over C_2 with K = C_2: output proper with palette {0..3}, and no
  // face of C_2 subdivided
  auto omega = cone(VertexId::of("apex"), c2);
  auto ext = extend_coloring(RelativeComplex::of(omega, c2), cross_polytope_coloring(2), 3);
  CHECK(is_proper(ext.L, ext.coloring));
  for (const auto& g : c2.facets()) CHECK(ext.L.has_face(g));
  int maxc = 0;
  for (const auto& [v, c] : ext.coloring.assignment()) maxc = std::max(maxc, c);
  CHECK(maxc == 3);
  for (const auto& s : ext.log) CHECK_FALSE(c2.has_face(s.target));
}

TEST_CASE("extend_coloring error paths") {
  auto tri = make_simplex(2);
  auto edge = SimplicialComplex::from_facets({Face::of({"v0", "v1"})});
  Coloring same(2);
  same.set(VertexId::of("v0"), 1);
  same.set(VertexId::of("v1"), 1);
  CHECK_THROWS_AS(extend_coloring(RelativeComplex::of(tri, edge), same, 2), Error);

  auto stray = SimplicialComplex::from_facets({Face::of({"zz"})});
  CHECK_THROWS_AS(RelativeComplex::of(tri, stray), Error);
}

namespace {

// Random relative complex generator used by the regression: L with at most
// max_v vertices and dim <= 3; K a random down-closed face subset.
struct RandomRel {
  SimplicialComplex L, K;
  Coloring kappa;
  int m;
};

RandomRel random_relative(Rng& rng) {
  while (true) {
    int nv = rng.range(3, 10);
    std::vector<VertexId> vs;
    for (int i = 0; i < nv; ++i) vs.push_back(VertexId::of("u" + std::to_string(i)));
    int nf = rng.range(2, 7);
    std::vector<Face> facets;
    for (int i = 0; i < nf; ++i) {
      int card = rng.range(1, std::min(4, nv));  // dim <= 3
      std::set<VertexId> pick;
      while (static_cast<int>(pick.size()) < card) pick.insert(vs[rng.below(vs.size())]);
      facets.push_back(Face(std::vector<VertexId>(pick.begin(), pick.end())));
    }
    auto L = SimplicialComplex::from_facets(std::move(facets));
    // K: down-closure of a random subset of L's faces
    std::vector<Face> kgen;
    for (const auto& bucket : L.all_faces())
      for (const auto& f : bucket)
        if (!f.empty() && rng.chance(0.3)) kgen.push_back(f);
    auto K = SimplicialComplex::from_facets(std::move(kgen));
    int m = rng.range(1, 5);
    if (K.is_void()) return {L, K, Coloring(m), m};
    auto kap = find_proper_coloring_random(K, m, rng);
    if (!kap.has_value()) continue;  // palette too small for this K; resample
    return {L, K, *kap, m};
  }
}

}  // namespace

TEST_CASE("extend_coloring randomized invariants") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto rel = random_relative(rng);
    auto rc = RelativeComplex::of(rel.L, rel.K);
    int d = rc.relative_dim();
    auto res = extend_coloring(rc, rel.kappa, rel.m);

    // output proper, by an independent edge scan
    for (const auto& e : res.L.faces_of_dim(1))
      CHECK(res.coloring.at(e.verts()[0]) != res.coloring.at(e.verts()[1]));
    // K untouched, K colors kept
    for (const auto& g : rel.K.facets()) CHECK(res.L.has_face(g));
    for (const auto& v : rel.K.vertices()) CHECK(res.coloring.at(v) == rel.kappa.at(v));
    // new vertices only use colors {0..d}
    std::set<VertexId> kv(rel.K.vertices().begin(), rel.K.vertices().end());
    for (const auto& v : res.L.vertices()) {
      if (!kv.count(v)) {
        CHECK(res.coloring.at(v) >= 0);
        CHECK(res.coloring.at(v) <= std::max(d, 0));
      }
    }
    // no K face is ever a subdivision target; dull counts strictly decrease
    size_t last_dull = SIZE_MAX;
    for (const auto& s : res.log) {
      CHECK_FALSE(rel.K.has_face(s.target));
      if (!s.prepass) {
        CHECK(s.dull_before < last_dull);
        last_dull = s.dull_before;
      }
    }
    // replaying the log reproduces the output complex
    SimplicialComplex replay = rel.L;
    for (const auto& s : res.log) replay = stellar_subdivide(replay, s.target, s.apex);
    CHECK(replay == res.L);
    // zero dull faces at the end
    CHECK(count_dull_faces(res.L, res.coloring) == 0);
  }
}
