#pragma once

#include "core/complex.hpp"
#include "core/coloring.hpp"

namespace xf {

// Deterministic labelings:
//   simplex / simplex_boundary:  v0..vn
//   cross_polytope_boundary:     x0..xd, y0..yd with κ(xi)=κ(yi)=i
//   bipyramid over a gon-gon:    e0..e_{gon-1}, apexes a0 a1; colors alternate
//                                0/1 on the equator, apexes get 2
//   barycentric subdivision:     one vertex per face, label joins the face's
//                                labels with '|'; color = face dimension

SimplicialComplex make_simplex(int n);
SimplicialComplex make_simplex_boundary(int n);
SimplicialComplex make_cross_polytope_boundary(int d);
Coloring cross_polytope_coloring(int d);
SimplicialComplex make_bipyramid(int gon);
Coloring bipyramid_coloring(int gon);
std::pair<SimplicialComplex, Coloring> barycentric_subdivision(const SimplicialComplex& c);

}  // namespace xf
