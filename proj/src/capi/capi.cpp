#include "crossflip/crossflip.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "coloring/extend.hpp"
#include "core/classify.hpp"
#include "core/generate.hpp"
#include "core/iso.hpp"
#include "io/io.hpp"
#include "io/structured.hpp"
#include "pipeline/pipeline.hpp"
#include "poset/cobordism.hpp"
#include "util/error.hpp"

struct cf_complex {
  xf::SimplicialComplex v;
};
struct cf_coloring {
  xf::Coloring v;
};
struct cf_catalog {
  xf::CrossFlipCatalog v;
};
struct cf_report {
  xf::ReductionReport v;
};
struct cf_cobordism {
  xf::PseudoCobordism v;
};

namespace {

thread_local std::string g_last_error;

int code_of(const xf::Error& e) {
  switch (e.code()) {
    case xf::errc::domain: return CF_ERR_DOMAIN;
    case xf::errc::parse: return CF_ERR_PARSE;
    case xf::errc::budget: return CF_ERR_BUDGET;
    case xf::errc::io: return CF_ERR_IO;
    default: return CF_ERR_INTERNAL;
  }
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return CF_OK;
  } catch (const xf::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

xf::Face face_from_labels(const char* labels) {
  std::istringstream ss(labels ? labels : "");
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return xf::Face::of_labels(toks);
}

}  // namespace

extern "C" {

const char* cf_version(void) { return "crossflip 1.0.0"; }
const char* cf_last_error(void) { return g_last_error.c_str(); }

void cf_string_free(char* s) { free(s); }
void cf_complex_free(cf_complex* c) { delete c; }
void cf_coloring_free(cf_coloring* k) { delete k; }
void cf_catalog_free(cf_catalog* c) { delete c; }
void cf_report_free(cf_report* r) { delete r; }
void cf_cobordism_free(cf_cobordism* o) { delete o; }

int cf_complex_parse_text(const char* text, cf_complex** out) {
  return guarded([&] { *out = new cf_complex{xf::parse_complex_text(text ? text : "")}; });
}

int cf_complex_to_text(const cf_complex* c, char** out) {
  return guarded([&] { *out = dup_string(xf::serialize_complex_text(c->v)); });
}

int cf_complex_parse_json(const char* text, cf_complex** out, cf_coloring** colors_out) {
  return guarded([&] {
    xf::Coloring k;
    auto cx = xf::parse_complex_json(text ? text : "", colors_out ? &k : nullptr);
    *out = new cf_complex{std::move(cx)};
    if (colors_out) *colors_out = k.size() ? new cf_coloring{std::move(k)} : nullptr;
  });
}

int cf_complex_to_json(const cf_complex* c, const cf_coloring* colors, char** out) {
  return guarded([&] {
    *out = dup_string(xf::serialize_complex_json(c->v, colors ? &colors->v : nullptr));
  });
}

int cf_generate(const char* kind, long long param, cf_complex** out, cf_coloring** colors_out) {
  return guarded([&] {
    std::string k = kind ? kind : "";
    int p = static_cast<int>(param);
    xf::SimplicialComplex cx;
    std::optional<xf::Coloring> col;
    if (k == "simplex") {
      cx = xf::make_simplex(p);
    } else if (k == "simplex-boundary") {
      cx = xf::make_simplex_boundary(p);
    } else if (k == "cross-polytope") {
      cx = xf::make_cross_polytope_boundary(p);
      col = xf::cross_polytope_coloring(p);
    } else if (k == "bipyramid") {
      cx = xf::make_bipyramid(p);
      col = xf::bipyramid_coloring(p);
    } else {
      xf::fail(xf::errc::domain, "unknown generator kind '" + k + "'");
    }
    *out = new cf_complex{std::move(cx)};
    if (colors_out) *colors_out = col ? new cf_coloring{std::move(*col)} : nullptr;
  });
}

int cf_barycentric(const cf_complex* in, cf_complex** out, cf_coloring** colors_out) {
  return guarded([&] {
    auto [cx, col] = xf::barycentric_subdivision(in->v);
    *out = new cf_complex{std::move(cx)};
    if (colors_out) *colors_out = new cf_coloring{std::move(col)};
  });
}

int cf_classify_json(const cf_complex* c, char** out) {
  return guarded([&] { *out = dup_string(xf::classify_json(c->v)); });
}

int cf_f_vector_json(const cf_complex* c, char** out) {
  return guarded([&] {
    auto fv = xf::f_vector(c->v);
    std::string s = "[";
    for (size_t i = 0; i < fv.counts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(fv.counts[i]);
    }
    *out = dup_string(s + "]");
  });
}

int cf_canonical_key(const cf_complex* c, char** out) {
  return guarded([&] { *out = dup_string(xf::canonical_form(c->v)); });
}

int cf_isomorphic(const cf_complex* a, const cf_complex* b, int* yes) {
  return guarded([&] { *yes = xf::find_isomorphism(a->v, b->v).has_value() ? 1 : 0; });
}

int cf_coloring_parse_text(const char* text, cf_coloring** out) {
  return guarded([&] { *out = new cf_coloring{xf::parse_coloring_text(text ? text : "")}; });
}

int cf_coloring_to_text(const cf_coloring* k, char** out) {
  return guarded([&] { *out = dup_string(xf::serialize_coloring_text(k->v)); });
}

int cf_is_proper(const cf_complex* c, const cf_coloring* k, int* proper) {
  return guarded([&] { *proper = xf::is_proper(c->v, k->v) ? 1 : 0; });
}

int cf_find_coloring(const cf_complex* c, int m, int* found, cf_coloring** out) {
  return guarded([&] {
    auto k = xf::find_proper_coloring(c->v, m);
    *found = k.has_value() ? 1 : 0;
    if (out) *out = k ? new cf_coloring{std::move(*k)} : nullptr;
  });
}

int cf_extend_coloring(const cf_complex* L, const cf_complex* K, const cf_coloring* kappa, int m,
                       cf_complex** L_out, cf_coloring** coloring_out, char** log_json) {
  return guarded([&] {
    auto rel = xf::RelativeComplex::of(L->v, K->v);
    auto res = xf::extend_coloring(rel, kappa->v, m);
    *L_out = new cf_complex{std::move(res.L)};
    *coloring_out = new cf_coloring{std::move(res.coloring)};
    if (log_json) *log_json = dup_string(xf::serialize_extend_log_json(res.log));
  });
}

int cf_available_flips_json(const cf_complex* c, char** out) {
  return guarded(
      [&] { *out = dup_string(xf::serialize_flips_json(xf::available_bistellar_flips(c->v))); });
}

int cf_apply_move_json(const cf_complex* c, const cf_coloring* coloring, const char* move_json,
                       cf_complex** out, cf_coloring** coloring_out) {
  return guarded([&] {
    auto mv = xf::parse_move_json(move_json ? move_json : "");
    std::optional<xf::Coloring> col;
    if (coloring) col = coloring->v;
    auto [next, ncol] = xf::apply_move(c->v, col, mv);
    *out = new cf_complex{std::move(next)};
    if (coloring_out) *coloring_out = ncol ? new cf_coloring{std::move(*ncol)} : nullptr;
  });
}

int cf_catalog_enumerate(int d, const char* mode, cf_catalog** out) {
  return guarded([&] {
    *out = new cf_catalog{xf::enumerate_cross_flip_templates(d, mode ? mode : "general")};
  });
}

int cf_catalog_to_json(const cf_catalog* c, char** out) {
  return guarded([&] { *out = dup_string(xf::serialize_catalog_json(c->v)); });
}

int cf_catalog_parse_json(const char* text, cf_catalog** out) {
  return guarded([&] { *out = new cf_catalog{xf::parse_catalog_json(text ? text : "")}; });
}

int cf_catalog_size(const cf_catalog* c, int* out) {
  return guarded([&] { *out = static_cast<int>(c->v.templates.size()); });
}

int cf_reduce_balanced(const cf_complex* c, const cf_coloring* k, cf_report** out) {
  return guarded([&] { *out = new cf_report{xf::reduce_balanced_2sphere(c->v, k->v)}; });
}

int cf_heuristic_reduce(const cf_complex* c, const cf_catalog* catalog, long long budget,
                        uint64_t seed, cf_report** out) {
  return guarded([&] {
    xf::AnnealOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    *out = new cf_report{xf::heuristic_reduce(c->v, catalog->v, opts)};
  });
}

int cf_bistellar_reduce(const cf_complex* c, long long budget, uint64_t seed, cf_report** out) {
  return guarded([&] {
    xf::AnnealOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    *out = new cf_report{xf::bistellar_reduce(c->v, opts)};
  });
}

int cf_colored_connect(const cf_complex* a, const cf_coloring* ka, const cf_complex* b,
                       const cf_coloring* kb, cf_report** out) {
  return guarded([&] { *out = new cf_report{xf::colored_connect(a->v, ka->v, b->v, kb->v)}; });
}

int cf_connect_balanced(const cf_complex* a, const cf_complex* b, long long budget, uint64_t seed,
                        cf_report** out) {
  return guarded([&] { *out = new cf_report{xf::connect_balanced(a->v, b->v, budget, seed)}; });
}

int cf_report_to_json(const cf_report* r, char** out) {
  return guarded([&] { *out = dup_string(xf::serialize_report_json(r->v)); });
}

int cf_report_parse_json(const char* text, cf_report** out) {
  return guarded([&] { *out = new cf_report{xf::parse_report_json(text ? text : "")}; });
}

int cf_report_success(const cf_report* r, int* out) {
  return guarded([&] { *out = r->v.success ? 1 : 0; });
}

int cf_report_replay(const cf_report* r, int* ok, char** error_out) {
  return guarded([&] {
    auto res = xf::replay_report(r->v);
    *ok = res.ok ? 1 : 0;
    if (error_out) *error_out = res.error.empty() ? nullptr : dup_string(res.error);
  });
}

int cf_cobordism_parse_json(const char* text, cf_cobordism** out) {
  return guarded([&] { *out = new cf_cobordism{xf::parse_cobordism_json(text ? text : "")}; });
}

int cf_cobordism_to_json(const cf_cobordism* o, char** out) {
  return guarded([&] { *out = dup_string(xf::serialize_cobordism_json(o->v)); });
}

int cf_cobordism_verify_json(const cf_cobordism* o, char** out) {
  return guarded([&] {
    std::string summary = "{\n  \"pseudo_cobordism\": true,\n";
    xf::verify_pseudo_cobordism(o->v);
    std::optional<std::vector<xf::ElemId>> w;
    try {
      w = xf::find_bidirectional_shelling(o->v);
    } catch (const xf::Error&) {
      // budget exhaustion: report unknown
    }
    if (w) {
      summary += "  \"shellable\": true,\n  \"witness\": [";
      for (size_t i = 0; i < w->size(); ++i) {
        if (i) summary += ",";
        summary += std::to_string((*w)[i]);
      }
      summary += "]\n}\n";
    } else {
      summary += "  \"shellable\": false\n}\n";
    }
    *out = dup_string(summary);
  });
}

int cf_cobordism_elementary(const cf_complex* c, const char* move_json, cf_cobordism** out) {
  return guarded([&] {
    auto mv = xf::parse_move_json(move_json ? move_json : "");
    xf::require(mv.kind == xf::MoveRecord::Kind::bistellar,
                "elementary cobordism needs a bistellar move");
    *out = new cf_cobordism{xf::elementary_cobordism(c->v, mv.flip)};
  });
}

int cf_cobordism_compose(const cf_cobordism* a, const cf_cobordism* b, cf_cobordism** out) {
  return guarded([&] {
    std::optional<xf::Isomorphism> iso;
    if (!(a->v.right == b->v.left)) {
      iso = xf::find_isomorphism(a->v.right, b->v.left);
      xf::require(iso.has_value(), "compose: ends are not isomorphic");
    }
    *out = new cf_cobordism{xf::compose(a->v, b->v, iso)};
  });
}

int cf_cobordism_decompose_json(const cf_cobordism* o, char** out) {
  return guarded([&] {
    auto w = o->v.witness ? o->v.witness : xf::find_bidirectional_shelling(o->v);
    xf::require(w.has_value(), "decompose: cobordism is not shellable");
    auto dec = xf::decompose(o->v, *w);
    *out = dup_string(xf::serialize_flips_json(dec.moves()));
  });
}

int cf_eliminate_face(const cf_complex* c, const char* tau_labels, cf_complex** delta_prime,
                      cf_cobordism** out) {
  return guarded([&] {
    auto res = xf::eliminate_face(c->v, face_from_labels(tau_labels));
    *delta_prime = new cf_complex{std::move(res.delta_prime)};
    *out = new cf_cobordism{std::move(res.omega)};
  });
}

int cf_disjoint_ends(const cf_complex* c, const char* flips_json, cf_cobordism** out) {
  return guarded([&] {
    std::vector<xf::FlipMove> path;
    if (flips_json && *flips_json) path = xf::parse_flips_json(flips_json);
    *out = new cf_cobordism{xf::disjoint_ends_cobordism(c->v, path)};
  });
}

int cf_cobordism_subdivide(const cf_cobordism* o, const char* sigma_labels, cf_cobordism** out) {
  return guarded([&] {
    *out = new cf_cobordism{xf::subdivide_cobordism(o->v, face_from_labels(sigma_labels))};
  });
}

}  // extern "C"
