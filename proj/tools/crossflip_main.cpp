// crossflip command-line tool. Talks to the core exclusively through the
// shared-library C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossflip/crossflip.h"

namespace {

constexpr uint64_t kDefaultSeed = 1729;  // fixed documented default

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

void check(int rc) {
  if (rc != CF_OK) die(rc, cf_last_error());
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) die(CF_ERR_IO, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) die(CF_ERR_IO, "cannot write file: " + path);
  out << content;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cf_string_free(s);
  return out;
}

using ComplexPtr = std::unique_ptr<cf_complex, decltype(&cf_complex_free)>;
using ColoringPtr = std::unique_ptr<cf_coloring, decltype(&cf_coloring_free)>;
using CatalogPtr = std::unique_ptr<cf_catalog, decltype(&cf_catalog_free)>;
using ReportPtr = std::unique_ptr<cf_report, decltype(&cf_report_free)>;
using CobordismPtr = std::unique_ptr<cf_cobordism, decltype(&cf_cobordism_free)>;

ComplexPtr wrap(cf_complex* c) { return ComplexPtr(c, &cf_complex_free); }
ColoringPtr wrap(cf_coloring* c) { return ColoringPtr(c, &cf_coloring_free); }
CatalogPtr wrap(cf_catalog* c) { return CatalogPtr(c, &cf_catalog_free); }
ReportPtr wrap(cf_report* c) { return ReportPtr(c, &cf_report_free); }
CobordismPtr wrap(cf_cobordism* c) { return CobordismPtr(c, &cf_cobordism_free); }

// Reads a complex from either the text or the structured format, by sniffing
// the first non-space character.
ComplexPtr load_complex(const std::string& path, ColoringPtr* colors_out = nullptr) {
  std::string text = slurp(path);
  size_t i = text.find_first_not_of(" \t\r\n");
  cf_complex* c = nullptr;
  if (i != std::string::npos && text[i] == '{') {
    cf_coloring* k = nullptr;
    check(cf_complex_parse_json(text.c_str(), &c, colors_out ? &k : nullptr));
    if (colors_out && k) *colors_out = wrap(k);
  } else {
    check(cf_complex_parse_text(text.c_str(), &c));
  }
  return wrap(c);
}

ColoringPtr load_coloring(const std::string& path) {
  cf_coloring* k = nullptr;
  check(cf_coloring_parse_text(slurp(path).c_str(), &k));
  return wrap(k);
}

void write_complex(const cf_complex* c, const cf_coloring* colors, const std::string& path,
                   const std::string& format) {
  char* s = nullptr;
  if (format == "structured") {
    check(cf_complex_to_json(c, colors, &s));
  } else {
    check(cf_complex_to_text(c, &s));
  }
  spit(path, take_string(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced triangulations: flips, cross-flips, shellings, pseudo-cobordisms"};
  app.require_subcommand(1);
  uint64_t seed = kDefaultSeed;
  long long budget = 2000;
  std::string format = "text";
  bool quiet = false;
  app.add_option("--seed", seed, "RNG seed for randomized commands (default 1729)");
  app.add_option("--budget", budget, "search / move budget");
  app.add_option("--format", format, "output format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--quiet", quiet, "suppress informational output");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a named complex");
  std::string gen_kind, gen_out, gen_colors_out, gen_input;
  long long gen_d = 2, gen_gon = 6;
  gen->add_option("kind", gen_kind,
                  "simplex | simplex-boundary | cross-polytope | bipyramid | barycentric")
      ->required();
  gen->add_option("-d,--dim", gen_d, "dimension parameter");
  gen->add_option("--gon", gen_gon, "base size for bipyramid (even)");
  gen->add_option("--input", gen_input, "input complex (barycentric)");
  gen->add_option("-o,--output", gen_out, "facet file ('-' = stdout)");
  gen->add_option("--colors-out", gen_colors_out, "coloring file");

  // ---- check ----
  auto* chk = app.add_subcommand("check", "classify a complex");
  std::string chk_in;
  chk->add_option("input", chk_in)->required();

  // ---- color ----
  auto* color = app.add_subcommand("color", "proper colorings");
  color->require_subcommand(1);
  auto* cfind = color->add_subcommand("find", "find a proper m-coloring");
  std::string cf_in, cf_out;
  int cf_m = 3;
  cfind->add_option("input", cf_in)->required();
  cfind->add_option("-m", cf_m, "palette size")->required();
  cfind->add_option("-o,--output", cf_out);
  auto* ccheck = color->add_subcommand("check", "check properness");
  std::string cc_in, cc_colors;
  ccheck->add_option("input", cc_in)->required();
  ccheck->add_option("--colors", cc_colors)->required();
  auto* cext = color->add_subcommand("extend", "extend a coloring of K over L");
  std::string ce_L, ce_K, ce_colors, ce_out, ce_colors_out, ce_log_out;
  int ce_m = 3;
  cext->add_option("input", ce_L, "the complex L")->required();
  cext->add_option("-K", ce_K, "subcomplex K")->required();
  cext->add_option("--colors", ce_colors, "coloring of K")->required();
  cext->add_option("-m", ce_m, "palette size of the input coloring");
  cext->add_option("-o,--output", ce_out, "subdivided L");
  cext->add_option("--colors-out", ce_colors_out);
  cext->add_option("--log-out", ce_log_out, "subdivision log (json)");

  // ---- flips ----
  auto* flips = app.add_subcommand("flips", "list available bistellar flips");
  std::string fl_in, fl_out;
  flips->add_option("input", fl_in)->required();
  flips->add_option("-o,--output", fl_out);

  // ---- apply ----
  auto* apply = app.add_subcommand("apply", "apply a move record");
  std::string ap_in, ap_move, ap_colors, ap_out, ap_colors_out;
  apply->add_option("input", ap_in)->required();
  apply->add_option("--move", ap_move, "move record (json file)")->required();
  apply->add_option("--colors", ap_colors);
  apply->add_option("-o,--output", ap_out);
  apply->add_option("--colors-out", ap_colors_out);

  // ---- catalog ----
  auto* cat = app.add_subcommand("catalog", "enumerate cross-flip templates");
  std::string cat_mode = "general", cat_out;
  int cat_d = 2;
  cat->add_option("-d,--dim", cat_d)->required();
  cat->add_option("--mode", cat_mode)->check(CLI::IsMember({"basic", "general"}));
  cat->add_option("-o,--output", cat_out);

  // ---- reduce ----
  auto* red = app.add_subcommand("reduce", "reduce toward the minimal complex");
  std::string red_in, red_colors, red_catalog, red_out, red_mode = "balanced";
  red->add_option("input", red_in)->required();
  red->add_option("--mode", red_mode, "balanced | heuristic | bistellar")
      ->check(CLI::IsMember({"balanced", "heuristic", "bistellar"}));
  red->add_option("--colors", red_colors, "3-coloring (balanced mode; found if omitted)");
  red->add_option("--catalog", red_catalog, "template catalog (heuristic mode)");
  red->add_option("-o,--output", red_out, "report file");

  // ---- connect ----
  auto* con = app.add_subcommand("connect", "connect two complexes by moves");
  std::string con_a, con_b, con_out, con_mode = "balanced", con_ka, con_kb;
  con->add_option("first", con_a)->required();
  con->add_option("second", con_b)->required();
  con->add_option("--mode", con_mode, "balanced | colored")
      ->check(CLI::IsMember({"balanced", "colored"}));
  con->add_option("--colors-a", con_ka, "coloring of the first complex (colored mode)");
  con->add_option("--colors-b", con_kb, "coloring of the second complex (colored mode)");
  con->add_option("-o,--output", con_out, "report file");

  // ---- cobordism ----
  auto* cob = app.add_subcommand("cobordism", "pseudo-cobordism calculus");
  cob->require_subcommand(1);
  auto* cverify = cob->add_subcommand("verify", "verify axioms and shellability");
  std::string cv_in;
  cverify->add_option("input", cv_in)->required();
  auto* ccompose = cob->add_subcommand("compose", "glue two cobordisms");
  std::string cp_a, cp_b, cp_out;
  ccompose->add_option("first", cp_a)->required();
  ccompose->add_option("second", cp_b)->required();
  ccompose->add_option("-o,--output", cp_out);
  auto* cdecomp = cob->add_subcommand("decompose", "extract the flip sequence");
  std::string cd_in, cd_out;
  cdecomp->add_option("input", cd_in)->required();
  cdecomp->add_option("-o,--output", cd_out);
  auto* celim = cob->add_subcommand("eliminate", "eliminate a face (Ω = Δ ∪ τ̄*K)");
  std::string el_in, el_face, el_out, el_complex_out;
  celim->add_option("input", el_in)->required();
  celim->add_option("--face", el_face, "vertex labels of τ, whitespace-separated")->required();
  celim->add_option("-o,--output", el_out, "cobordism file");
  celim->add_option("--out-complex", el_complex_out, "the eliminated complex Δ'");
  auto* csub = cob->add_subcommand("subdivide", "stellar subdivision of a cobordism");
  std::string cs_in, cs_face, cs_out;
  csub->add_option("input", cs_in)->required();
  csub->add_option("--face", cs_face, "vertex labels of σ")->required();
  csub->add_option("-o,--output", cs_out);
  auto* cmake = cob->add_subcommand("elementary", "elementary cobordism of a flip");
  std::string cm_in, cm_move, cm_out;
  cmake->add_option("input", cm_in)->required();
  cmake->add_option("--move", cm_move, "bistellar move (json file)")->required();
  cmake->add_option("-o,--output", cm_out);
  auto* cdis = cob->add_subcommand("disjoint", "vertex-elimination cobordism with disjoint ends");
  std::string dj_in, dj_flips, dj_out;
  cdis->add_option("input", dj_in)->required();
  cdis->add_option("--flips", dj_flips, "optional flip path (json file)");
  cdis->add_option("-o,--output", dj_out);

  // ---- fmt ----
  auto* fmt = app.add_subcommand("fmt", "canonicalize a complex file");
  std::string fm_in, fm_out;
  fmt->add_option("input", fm_in)->required();
  fmt->add_option("-o,--output", fm_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    std::cerr << R"({"error":{"code":2,"kind":"usage","message":")" << e.what() << "\"}}\n";
    return 2;
  }

  try {
    if (*gen) {
      cf_complex* c = nullptr;
      cf_coloring* k = nullptr;
      if (gen_kind == "barycentric") {
        if (gen_input.empty()) die(CF_ERR_DOMAIN, "barycentric needs --input");
        auto in = load_complex(gen_input);
        check(cf_barycentric(in.get(), &c, &k));
      } else {
        long long p = gen_kind == "bipyramid" ? gen_gon : gen_d;
        check(cf_generate(gen_kind.c_str(), p, &c, &k));
      }
      auto cp = wrap(c);
      auto kp = wrap(k);
      write_complex(cp.get(), kp.get(), gen_out, format);
      if (!gen_colors_out.empty()) {
        if (!kp) die(CF_ERR_DOMAIN, "no canonical coloring for this generator");
        char* s = nullptr;
        check(cf_coloring_to_text(kp.get(), &s));
        spit(gen_colors_out, take_string(s));
      }
    } else if (*chk) {
      auto c = load_complex(chk_in);
      char* s = nullptr;
      check(cf_classify_json(c.get(), &s));
      std::cout << take_string(s);
    } else if (*color) {
      if (*cfind) {
        auto c = load_complex(cf_in);
        int found = 0;
        cf_coloring* k = nullptr;
        check(cf_find_coloring(c.get(), cf_m, &found, &k));
        auto kp = wrap(k);
        if (!found) {
          if (!quiet) std::cerr << "no proper coloring with " << cf_m << " colors\n";
          return 1;
        }
        char* s = nullptr;
        check(cf_coloring_to_text(kp.get(), &s));
        spit(cf_out, take_string(s));
      } else if (*ccheck) {
        auto c = load_complex(cc_in);
        auto k = load_coloring(cc_colors);
        int proper = 0;
        check(cf_is_proper(c.get(), k.get(), &proper));
        std::cout << (proper ? "proper\n" : "improper\n");
        return proper ? 0 : 1;
      } else if (*cext) {
        auto l = load_complex(ce_L);
        auto kc = load_complex(ce_K);
        auto kap = load_coloring(ce_colors);
        cf_complex* lo = nullptr;
        cf_coloring* ko = nullptr;
        char* log = nullptr;
        check(cf_extend_coloring(l.get(), kc.get(), kap.get(), ce_m, &lo, &ko, &log));
        auto lop = wrap(lo);
        auto kop = wrap(ko);
        write_complex(lop.get(), kop.get(), ce_out, format);
        if (!ce_colors_out.empty()) {
          char* s = nullptr;
          check(cf_coloring_to_text(kop.get(), &s));
          spit(ce_colors_out, take_string(s));
        }
        if (!ce_log_out.empty()) spit(ce_log_out, take_string(log));
        else cf_string_free(log);
      }
    } else if (*flips) {
      auto c = load_complex(fl_in);
      char* s = nullptr;
      check(cf_available_flips_json(c.get(), &s));
      spit(fl_out, take_string(s));
    } else if (*apply) {
      auto c = load_complex(ap_in);
      ColoringPtr k(nullptr, &cf_coloring_free);
      if (!ap_colors.empty()) k = load_coloring(ap_colors);
      cf_complex* out = nullptr;
      cf_coloring* kout = nullptr;
      check(cf_apply_move_json(c.get(), k.get(), slurp(ap_move).c_str(), &out, &kout));
      auto op = wrap(out);
      auto kop = wrap(kout);
      write_complex(op.get(), kop.get(), ap_out, format);
      if (!ap_colors_out.empty() && kop) {
        char* s = nullptr;
        check(cf_coloring_to_text(kop.get(), &s));
        spit(ap_colors_out, take_string(s));
      }
    } else if (*cat) {
      cf_catalog* c = nullptr;
      check(cf_catalog_enumerate(cat_d, cat_mode.c_str(), &c));
      auto cp = wrap(c);
      char* s = nullptr;
      check(cf_catalog_to_json(cp.get(), &s));
      spit(cat_out, take_string(s));
    } else if (*red) {
      auto c = load_complex(red_in);
      cf_report* r = nullptr;
      if (red_mode == "balanced") {
        ColoringPtr k(nullptr, &cf_coloring_free);
        if (!red_colors.empty()) {
          k = load_coloring(red_colors);
        } else {
          int found = 0;
          cf_coloring* kk = nullptr;
          check(cf_find_coloring(c.get(), 3, &found, &kk));
          if (!found) die(CF_ERR_DOMAIN, "input is not balanced (no proper 3-coloring)");
          k = wrap(kk);
        }
        check(cf_reduce_balanced(c.get(), k.get(), &r));
      } else if (red_mode == "heuristic") {
        CatalogPtr catp(nullptr, &cf_catalog_free);
        if (!red_catalog.empty()) {
          cf_catalog* cc = nullptr;
          check(cf_catalog_parse_json(slurp(red_catalog).c_str(), &cc));
          catp = wrap(cc);
        } else {
          cf_catalog* cc = nullptr;
          check(cf_catalog_enumerate(2, "general", &cc));
          catp = wrap(cc);
        }
        check(cf_heuristic_reduce(c.get(), catp.get(), budget, seed, &r));
      } else {
        check(cf_bistellar_reduce(c.get(), budget, seed, &r));
      }
      auto rp = wrap(r);
      char* s = nullptr;
      check(cf_report_to_json(rp.get(), &s));
      spit(red_out, take_string(s));
      int success = 0;
      check(cf_report_success(rp.get(), &success));
      if (!quiet) std::cerr << (success ? "success\n" : "stopped without success\n");
      return success ? 0 : 1;
    } else if (*con) {
      auto a = load_complex(con_a);
      auto b = load_complex(con_b);
      cf_report* r = nullptr;
      if (con_mode == "colored") {
        if (con_ka.empty() || con_kb.empty())
          die(CF_ERR_DOMAIN, "colored mode needs --colors-a and --colors-b");
        auto ka = load_coloring(con_ka);
        auto kb = load_coloring(con_kb);
        check(cf_colored_connect(a.get(), ka.get(), b.get(), kb.get(), &r));
      } else {
        check(cf_connect_balanced(a.get(), b.get(), budget, seed, &r));
      }
      auto rp = wrap(r);
      char* s = nullptr;
      check(cf_report_to_json(rp.get(), &s));
      spit(con_out, take_string(s));
    } else if (*cob) {
      if (*cverify) {
        cf_cobordism* o = nullptr;
        check(cf_cobordism_parse_json(slurp(cv_in).c_str(), &o));
        auto op = wrap(o);
        char* s = nullptr;
        check(cf_cobordism_verify_json(op.get(), &s));
        std::cout << take_string(s);
      } else if (*ccompose) {
        cf_cobordism *oa = nullptr, *ob = nullptr, *oc = nullptr;
        check(cf_cobordism_parse_json(slurp(cp_a).c_str(), &oa));
        auto pa = wrap(oa);
        check(cf_cobordism_parse_json(slurp(cp_b).c_str(), &ob));
        auto pb = wrap(ob);
        check(cf_cobordism_compose(pa.get(), pb.get(), &oc));
        auto pc = wrap(oc);
        char* s = nullptr;
        check(cf_cobordism_to_json(pc.get(), &s));
        spit(cp_out, take_string(s));
      } else if (*cdecomp) {
        cf_cobordism* o = nullptr;
        check(cf_cobordism_parse_json(slurp(cd_in).c_str(), &o));
        auto op = wrap(o);
        char* s = nullptr;
        check(cf_cobordism_decompose_json(op.get(), &s));
        spit(cd_out, take_string(s));
      } else if (*celim) {
        auto c = load_complex(el_in);
        cf_complex* dp = nullptr;
        cf_cobordism* o = nullptr;
        check(cf_eliminate_face(c.get(), el_face.c_str(), &dp, &o));
        auto dpp = wrap(dp);
        auto op = wrap(o);
        char* s = nullptr;
        check(cf_cobordism_to_json(op.get(), &s));
        spit(el_out, take_string(s));
        if (!el_complex_out.empty()) write_complex(dpp.get(), nullptr, el_complex_out, format);
      } else if (*csub) {
        cf_cobordism* o = nullptr;
        check(cf_cobordism_parse_json(slurp(cs_in).c_str(), &o));
        auto op = wrap(o);
        cf_cobordism* o2 = nullptr;
        check(cf_cobordism_subdivide(op.get(), cs_face.c_str(), &o2));
        auto op2 = wrap(o2);
        char* s = nullptr;
        check(cf_cobordism_to_json(op2.get(), &s));
        spit(cs_out, take_string(s));
      } else if (*cmake) {
        auto c = load_complex(cm_in);
        cf_cobordism* o = nullptr;
        check(cf_cobordism_elementary(c.get(), slurp(cm_move).c_str(), &o));
        auto op = wrap(o);
        char* s = nullptr;
        check(cf_cobordism_to_json(op.get(), &s));
        spit(cm_out, take_string(s));
      } else if (*cdis) {
        auto c = load_complex(dj_in);
        cf_cobordism* o = nullptr;
        std::string flips_text = dj_flips.empty() ? "" : slurp(dj_flips);
        check(cf_disjoint_ends(c.get(), flips_text.empty() ? nullptr : flips_text.c_str(), &o));
        auto op = wrap(o);
        char* s = nullptr;
        check(cf_cobordism_to_json(op.get(), &s));
        spit(dj_out, take_string(s));
      }
    } else if (*fmt) {
      ColoringPtr k(nullptr, &cf_coloring_free);
      auto c = load_complex(fm_in, &k);
      write_complex(c.get(), k.get(), fm_out, format);
    }
  } catch (const CliError& e) {
    std::cerr << e.message << "\n";
    const char* kind = e.code == CF_ERR_PARSE      ? "parse"
                       : e.code == CF_ERR_BUDGET   ? "budget"
                       : e.code == CF_ERR_INTERNAL ? "internal"
                       : e.code == CF_ERR_IO       ? "io"
                                                   : "domain";
    std::string msg = e.message;
    for (auto& ch : msg)
      if (ch == '"') ch = '\'';
    std::cerr << R"({"error":{"code":)" << e.code << R"(,"kind":")" << kind
              << R"(","message":")" << msg << "\"}}\n";
    return 1;
  }
  return 0;
}
