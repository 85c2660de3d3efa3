#include "io/structured.hpp"

#include <json.hpp>

#include "coloring/extend.hpp"
#include "core/classify.hpp"
#include "util/error.hpp"

namespace xf {

using json = nlohmann::ordered_json;

namespace {

json face_json(const Face& f) {
  json out = json::array();
  for (const auto& v : f) out.push_back(v.label());
  return out;
}

Face face_from(const nlohmann::json& j) {
  std::vector<std::string> labels;
  for (const auto& v : j) labels.push_back(v.get<std::string>());
  return Face::of_labels(labels);
}

json facets_json(const SimplicialComplex& c) {
  json out = json::array();
  for (const auto& f : c.facets()) out.push_back(face_json(f));
  return out;
}

SimplicialComplex complex_from(const nlohmann::json& j) {
  std::vector<Face> fs;
  for (const auto& f : j) fs.push_back(face_from(f));
  return SimplicialComplex::from_facets(std::move(fs));
}

json coloring_json(const Coloring& k) {
  json out;
  out["palette"] = k.palette_size();
  json a = json::object();
  for (const auto& [v, c] : k.assignment()) a[v.label()] = c;
  out["colors"] = a;
  return out;
}

Coloring coloring_from(const nlohmann::json& j) {
  Coloring k(j.at("palette").get<int>());
  for (auto it = j.at("colors").begin(); it != j.at("colors").end(); ++it)
    k.set(VertexId::of(it.key()), it.value().get<int>());
  return k;
}

json pairs_json(const std::vector<std::pair<VertexId, VertexId>>& m) {
  json out = json::object();
  for (const auto& [a, b] : m) out[a.label()] = b.label();
  return out;
}

std::vector<std::pair<VertexId, VertexId>> pairs_from(const nlohmann::json& j) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.push_back({VertexId::of(it.key()), VertexId::of(it.value().get<std::string>())});
  std::sort(out.begin(), out.end());
  return out;
}

json template_json(const CrossFlipTemplate& t) {
  json out;
  out["d"] = t.d;
  out["provenance"] = t.provenance == CrossFlipTemplate::Provenance::basic ? "basic" : "general";
  out["key"] = t.key;
  out["D"] = facets_json(t.D);
  out["complement"] = facets_json(t.complement);
  return out;
}

CrossFlipTemplate template_from(const nlohmann::json& j) {
  CrossFlipTemplate t;
  t.d = j.at("d").get<int>();
  t.provenance = j.at("provenance").get<std::string>() == "basic"
                     ? CrossFlipTemplate::Provenance::basic
                     : CrossFlipTemplate::Provenance::general;
  t.key = j.at("key").get<std::string>();
  t.D = complex_from(j.at("D"));
  t.complement = complex_from(j.at("complement"));
  return t;
}

json move_json(const MoveRecord& m) {
  json out;
  if (m.kind == MoveRecord::Kind::bistellar) {
    out["kind"] = "bistellar";
    out["A"] = face_json(m.flip.A);
    out["B"] = face_json(m.flip.B);
  } else {
    out["kind"] = "cross";
    out["template"] = template_json(m.cross->tmpl);
    out["embedding"] = pairs_json(m.cross->embedding.map);
    out["fresh"] = pairs_json(m.cross->fresh);
  }
  if (!m.new_colors.empty()) {
    json nc = json::object();
    for (const auto& [v, c] : m.new_colors) nc[v.label()] = c;
    out["new_colors"] = nc;
  }
  return out;
}

MoveRecord move_from(const nlohmann::json& j) {
  MoveRecord m;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "bistellar") {
    m.kind = MoveRecord::Kind::bistellar;
    m.flip = FlipMove{face_from(j.at("A")), face_from(j.at("B"))};
  } else if (kind == "cross") {
    m.kind = MoveRecord::Kind::cross;
    CrossFlipMove cm;
    cm.tmpl = template_from(j.at("template"));
    cm.embedding.map = pairs_from(j.at("embedding"));
    cm.fresh = pairs_from(j.at("fresh"));
    m.cross = std::move(cm);
  } else {
    fail(errc::parse, "unknown move kind '" + kind + "'");
  }
  if (j.contains("new_colors")) {
    for (auto it = j["new_colors"].begin(); it != j["new_colors"].end(); ++it)
      m.new_colors[VertexId::of(it.key())] = it.value().get<int>();
  }
  return m;
}

nlohmann::json parse_or_fail(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("invalid json: ") + e.what());
  }
}

}  // namespace

std::string serialize_move_json(const MoveRecord& m) { return move_json(m).dump(2) + "\n"; }

MoveRecord parse_move_json(const std::string& text) { return move_from(parse_or_fail(text)); }

std::string serialize_flips_json(const std::vector<FlipMove>& moves) {
  json out = json::array();
  for (const auto& m : moves) {
    json jm;
    jm["A"] = face_json(m.A);
    jm["B"] = face_json(m.B);
    out.push_back(jm);
  }
  return out.dump(2) + "\n";
}

std::vector<FlipMove> parse_flips_json(const std::string& text) {
  auto j = parse_or_fail(text);
  std::vector<FlipMove> out;
  for (const auto& jm : j) out.push_back({face_from(jm.at("A")), face_from(jm.at("B"))});
  return out;
}

std::string serialize_catalog_json(const CrossFlipCatalog& c) {
  json out;
  out["d"] = c.d;
  out["mode"] = c.mode;
  out["templates"] = json::array();
  for (const auto& t : c.templates) out["templates"].push_back(template_json(t));
  return out.dump(2) + "\n";
}

CrossFlipCatalog parse_catalog_json(const std::string& text) {
  auto j = parse_or_fail(text);
  CrossFlipCatalog c;
  c.d = j.at("d").get<int>();
  c.mode = j.at("mode").get<std::string>();
  for (const auto& jt : j.at("templates")) c.templates.push_back(template_from(jt));
  return c;
}

std::string serialize_report_json(const ReductionReport& r) {
  json out;
  out["kind"] = r.kind;
  out["seed"] = r.seed;
  out["budget"] = r.budget;
  out["success"] = r.success;
  out["message"] = r.message;
  out["start"] = facets_json(r.start);
  if (r.start_coloring) out["start_coloring"] = coloring_json(*r.start_coloring);
  out["end"] = facets_json(r.end);
  if (r.end_coloring) out["end_coloring"] = coloring_json(*r.end_coloring);
  out["moves"] = json::array();
  for (const auto& m : r.moves) out["moves"].push_back(move_json(m));
  out["keys"] = r.keys;
  out["certificates"] = json::array();
  for (const auto& c : r.certificates) {
    json jc;
    jc["coloring_proper"] = c.coloring_proper;
    jc["manifold_ok"] = c.manifold_ok;
    jc["euler"] = c.euler;
    jc["induced_ok"] = c.induced_ok;
    jc["template_shellable"] = c.template_shellable;
    jc["template_co_shellable"] = c.template_co_shellable;
    out["certificates"].push_back(jc);
  }
  out["stats"] = {{"steps", r.stats.steps},
                  {"proposals", r.stats.proposals},
                  {"runtime_ms", r.stats.runtime_ms}};
  return out.dump(2) + "\n";
}

ReductionReport parse_report_json(const std::string& text) {
  auto j = parse_or_fail(text);
  ReductionReport r;
  r.kind = j.at("kind").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  r.budget = j.at("budget").get<long long>();
  r.success = j.at("success").get<bool>();
  r.message = j.value("message", "");
  r.start = complex_from(j.at("start"));
  if (j.contains("start_coloring")) r.start_coloring = coloring_from(j["start_coloring"]);
  r.end = complex_from(j.at("end"));
  if (j.contains("end_coloring")) r.end_coloring = coloring_from(j["end_coloring"]);
  for (const auto& jm : j.at("moves")) r.moves.push_back(move_from(jm));
  for (const auto& k : j.at("keys")) r.keys.push_back(k.get<std::string>());
  if (j.contains("certificates")) {
    for (const auto& jc : j["certificates"]) {
      StepCertificate c;
      c.coloring_proper = jc.value("coloring_proper", true);
      c.manifold_ok = jc.value("manifold_ok", true);
      c.euler = jc.value("euler", 0);
      c.induced_ok = jc.value("induced_ok", true);
      c.template_shellable = jc.value("template_shellable", true);
      c.template_co_shellable = jc.value("template_co_shellable", true);
      r.certificates.push_back(c);
    }
  }
  return r;
}

std::string serialize_poset_json(const SimplicialPoset& p) {
  json out;
  out["elements"] = json::array();
  for (size_t e = 0; e < p.size(); ++e) {
    json je;
    je["id"] = e;
    je["rank"] = p.elem(e).rank;
    json vs = json::array();
    for (const auto& v : p.elem(e).verts) vs.push_back(v.label());
    je["verts"] = vs;
    je["covers"] = p.elem(e).covers;
    out["elements"].push_back(je);
  }
  return out.dump(2) + "\n";
}

SimplicialPoset parse_poset_json(const std::string& text) {
  auto j = parse_or_fail(text);
  std::vector<PosetElem> elems;
  for (const auto& je : j.at("elements")) {
    PosetElem e;
    e.rank = je.at("rank").get<int>();
    std::vector<std::string> labels;
    for (const auto& v : je.at("verts")) labels.push_back(v.get<std::string>());
    e.verts = intern_labels(labels);
    std::sort(e.verts.begin(), e.verts.end());
    for (const auto& c : je.at("covers")) e.covers.push_back(c.get<int>());
    elems.push_back(std::move(e));
  }
  return SimplicialPoset::from_elements(std::move(elems));
}

std::string serialize_cobordism_json(const PseudoCobordism& o) {
  json out;
  out["d"] = o.d;
  out["left"] = facets_json(o.left);
  out["right"] = facets_json(o.right);
  auto phi = [](const std::map<Face, ElemId>& m) {
    json arr = json::array();
    for (const auto& [f, e] : m) arr.push_back({face_json(f), e});
    return arr;
  };
  out["phi_left"] = phi(o.phi_left);
  out["phi_right"] = phi(o.phi_right);
  if (o.witness) out["witness"] = *o.witness;
  out["poset"] = parse_or_fail(serialize_poset_json(o.P));
  return out.dump(2) + "\n";
}

PseudoCobordism parse_cobordism_json(const std::string& text) {
  auto j = parse_or_fail(text);
  PseudoCobordism o;
  o.d = j.at("d").get<int>();
  o.left = complex_from(j.at("left"));
  o.right = complex_from(j.at("right"));
  o.P = parse_poset_json(j.at("poset").dump());
  auto phi = [](const nlohmann::json& arr) {
    std::map<Face, ElemId> out;
    for (const auto& pr : arr) out[face_from(pr.at(0))] = pr.at(1).get<int>();
    return out;
  };
  o.phi_left = phi(j.at("phi_left"));
  o.phi_right = phi(j.at("phi_right"));
  if (j.contains("witness")) {
    std::vector<ElemId> w;
    for (const auto& e : j["witness"]) w.push_back(e.get<int>());
    o.witness = std::move(w);
  }
  verify_pseudo_cobordism(o);
  return o;
}

std::string serialize_shelling_json(const ShellingOrder& s) {
  json out;
  out["facets"] = json::array();
  out["restrictions"] = json::array();
  for (const auto& f : s.facets) out["facets"].push_back(face_json(f));
  for (const auto& r : s.restrictions) out["restrictions"].push_back(face_json(r));
  return out.dump(2) + "\n";
}

std::string serialize_extend_log_json(const std::vector<ExtendStep>& log) {
  json out = json::array();
  for (const auto& s : log) {
    json js;
    js["target"] = face_json(s.target);
    js["apex"] = s.apex.label();
    js["color"] = s.color;
    js["dull_before"] = s.dull_before;
    js["prepass"] = s.prepass;
    out.push_back(js);
  }
  return out.dump(2) + "\n";
}

std::string classify_json(const SimplicialComplex& c) {
  auto r = classify(c);
  json out;
  out["empty"] = r.empty;
  if (r.empty) return out.dump(2) + "\n";
  out["dim"] = r.dim;
  out["pure"] = r.pure;
  out["connected"] = r.connected;
  out["closed_pseudomanifold"] = r.closed_pseudomanifold;
  out["euler"] = r.euler;
  out["closed_manifold"] = verdict_name(r.closed_manifold);
  out["sphere"] = verdict_name(r.sphere);
  out["orientable"] = verdict_name(r.orientable);
  if (r.dim == 3) out["links_are_2spheres"] = r.links_are_2spheres;
  if (!r.notes.empty()) out["notes"] = r.notes;
  auto fv = f_vector(c);
  out["f_vector"] = fv.counts;
  return out.dump(2) + "\n";
}

}  // namespace xf
