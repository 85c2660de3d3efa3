#include "core/generate.hpp"

#include <functional>

#include "util/error.hpp"

namespace xf {

namespace {
VertexId v_label(const std::string& stem, int i) { return VertexId::of(stem + std::to_string(i)); }
}  // namespace

SimplicialComplex make_simplex(int n) {
  require(n >= 0, "simplex dimension must be nonnegative");
  std::vector<VertexId> vs;
  for (int i = 0; i <= n; ++i) vs.push_back(v_label("v", i));
  return SimplicialComplex::from_facets({Face(std::move(vs))});
}

SimplicialComplex make_simplex_boundary(int n) {
  require(n >= 1, "simplex boundary needs dimension >= 1");
  std::vector<VertexId> vs;
  for (int i = 0; i <= n; ++i) vs.push_back(v_label("v", i));
  return SimplicialComplex::from_facets(subsets_of(Face(std::move(vs)), n));
}

SimplicialComplex make_cross_polytope_boundary(int d) {
  require(d >= 0, "cross-polytope dimension must be nonnegative");
  // Facets pick exactly one of {x_i, y_i} per coordinate.
  std::vector<Face> facets;
  for (int mask = 0; mask < (1 << (d + 1)); ++mask) {
    std::vector<VertexId> vs;
    for (int i = 0; i <= d; ++i) {
      vs.push_back(v_label((mask >> i) & 1 ? "y" : "x", i));
    }
    facets.push_back(Face(std::move(vs)));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

Coloring cross_polytope_coloring(int d) {
  Coloring k(d + 1);
  for (int i = 0; i <= d; ++i) {
    k.set(v_label("x", i), i);
    k.set(v_label("y", i), i);
  }
  return k;
}

SimplicialComplex make_bipyramid(int gon) {
  require(gon >= 4 && gon % 2 == 0, "bipyramid base must be an even gon >= 4");
  std::vector<Face> facets;
  for (int i = 0; i < gon; ++i) {
    VertexId a = v_label("e", i), b = v_label("e", (i + 1) % gon);
    facets.push_back(Face({a, b, VertexId::of("a0")}));
    facets.push_back(Face({a, b, VertexId::of("a1")}));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

Coloring bipyramid_coloring(int gon) {
  Coloring k(3);
  for (int i = 0; i < gon; ++i) k.set(v_label("e", i), i % 2);
  k.set(VertexId::of("a0"), 2);
  k.set(VertexId::of("a1"), 2);
  return k;
}

std::pair<SimplicialComplex, Coloring> barycentric_subdivision(const SimplicialComplex& c) {
  require(!c.is_void(), "barycentric subdivision of the void complex");
  auto face_vertex = [](const Face& f) {
    std::string l;
    for (size_t i = 0; i < f.card(); ++i) {
      if (i) l += "|";
      l += f.verts()[i].label();
    }
    return VertexId::of(l);
  };
  // Facets are the maximal chains of nonempty faces.
  std::vector<Face> out;
  std::vector<VertexId> chain;
  std::function<void(const Face&)> descend = [&](const Face& f) {
    chain.push_back(face_vertex(f));
    if (f.card() == 1) {
      out.push_back(Face(std::vector<VertexId>(chain.begin(), chain.end())));
    } else {
      for (const auto& v : f) descend(f.set_minus(v));
    }
    chain.pop_back();
  };
  for (const auto& g : c.facets()) {
    if (g.empty()) continue;
    descend(g);
  }
  if (out.empty()) out.push_back(Face());
  auto sd = SimplicialComplex::from_facets(std::move(out));
  // The '|' join must not collide with pre-existing labels.
  size_t nonempty_faces = 0;
  for (const auto& bucket : c.all_faces()) nonempty_faces += bucket.size();
  if (!c.is_void()) nonempty_faces -= 1;  // the empty face
  require(sd.vertices().size() == nonempty_faces,
          "barycentric subdivision: label scheme collision with existing '|' labels");
  int d = sd.dim().value_or(-1);
  Coloring k(std::max(1, d + 1));
  for (const auto& bucket : c.all_faces()) {
    for (const auto& f : bucket) {
      if (!f.empty()) k.set(face_vertex(f), f.dim());
    }
  }
  return {sd, k};
}

}  // namespace xf
