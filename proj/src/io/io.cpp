#include "io/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "util/error.hpp"

namespace xf {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex_text(const std::string& text) {
  std::vector<Face> facets;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    try {
      facets.push_back(Face::of_labels(toks));
    } catch (const Error& e) {
      fail(errc::parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

std::string serialize_complex_text(const SimplicialComplex& c) { return c.to_text(); }

SimplicialComplex parse_complex_json(const std::string& text, Coloring* colors_out,
                                     std::string* name_out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("invalid json: ") + e.what());
  }
  require(j.contains("facets") && j["facets"].is_array(), "json complex: missing 'facets' array",
          errc::parse);
  std::vector<Face> facets;
  for (const auto& jf : j["facets"]) {
    std::vector<std::string> labels;
    for (const auto& v : jf) {
      if (v.is_string())
        labels.push_back(v.get<std::string>());
      else
        labels.push_back(v.dump());
    }
    facets.push_back(Face::of_labels(labels));
  }
  auto c = SimplicialComplex::from_facets(std::move(facets));
  if (colors_out && j.contains("colors")) {
    const auto& jc = j["colors"];
    int m = 0;
    for (auto it = jc.begin(); it != jc.end(); ++it) m = std::max(m, it.value().get<int>() + 1);
    if (j.contains("palette")) m = std::max(m, j["palette"].get<int>());
    Coloring k(m);
    for (auto it = jc.begin(); it != jc.end(); ++it)
      k.set(VertexId::of(it.key()), it.value().get<int>());
    *colors_out = k;
  }
  if (name_out && j.contains("name")) *name_out = j["name"].get<std::string>();
  return c;
}

std::string serialize_complex_json(const SimplicialComplex& c, const Coloring* colors,
                                   const std::string& name) {
  nlohmann::ordered_json j;
  if (!name.empty()) j["name"] = name;
  j["facets"] = nlohmann::ordered_json::array();
  for (const auto& f : c.facets()) {
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    for (const auto& v : f) jf.push_back(v.label());
    j["facets"].push_back(jf);
  }
  if (colors) {
    j["palette"] = colors->palette_size();
    nlohmann::ordered_json jc = nlohmann::ordered_json::object();
    for (const auto& [v, col] : colors->assignment()) jc[v.label()] = col;
    j["colors"] = jc;
  }
  return j.dump(2) + "\n";
}

Coloring parse_coloring_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int m = -1;
  std::vector<std::pair<VertexId, int>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "m") {
      require(toks.size() == 2, "line " + std::to_string(lineno) + ": expected 'm <palette>'",
              errc::parse);
      try {
        m = std::stoi(toks[1]);
      } catch (...) {
        fail(errc::parse, "line " + std::to_string(lineno) + ": bad palette size");
      }
      continue;
    }
    require(toks.size() == 2,
            "line " + std::to_string(lineno) + ": expected '<vertex> <color>'", errc::parse);
    int col;
    try {
      col = std::stoi(toks[1]);
    } catch (...) {
      fail(errc::parse, "line " + std::to_string(lineno) + ": bad color value");
      col = 0;
    }
    try {
      entries.push_back({VertexId::of(toks[0]), col});
    } catch (const Error& e) {
      fail(errc::parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (m < 0) {
    for (const auto& [v, col] : entries) m = std::max(m, col + 1);
    if (m < 0) m = 0;
  }
  Coloring k(m);
  for (const auto& [v, col] : entries) {
    require(col >= 0 && col < m,
            "color " + std::to_string(col) + " for vertex '" + v.label() +
                "' outside palette of size " + std::to_string(m),
            errc::parse);
    k.set(v, col);
  }
  return k;
}

std::string serialize_coloring_text(const Coloring& k) {
  std::string out = "m " + std::to_string(k.palette_size()) + "\n";
  for (const auto& [v, col] : k.assignment()) {
    out += v.label() + " " + std::to_string(col) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open file: " + path, errc::io);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write file: " + path, errc::io);
  out << content;
  require(out.good(), "write failed: " + path, errc::io);
}

}  // namespace xf
