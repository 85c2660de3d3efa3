#pragma once

#include <string>

#include "core/coloring.hpp"
#include "core/complex.hpp"

namespace xf {

// Facet-list text format: one facet per line, labels whitespace-separated,
// '#' starts a comment. Serialization is canonical (stable bytes for equal
// complexes).
SimplicialComplex parse_complex_text(const std::string& text);
std::string serialize_complex_text(const SimplicialComplex& c);

// Structured format: {"facets": [[...]], "colors"?: {...}, "name"?: "..."}
SimplicialComplex parse_complex_json(const std::string& text, Coloring* colors_out = nullptr,
                                     std::string* name_out = nullptr);
std::string serialize_complex_json(const SimplicialComplex& c, const Coloring* colors = nullptr,
                                   const std::string& name = "");

// Coloring text format: header "m <palette>", then "<vertex> <color>" lines.
Coloring parse_coloring_text(const std::string& text);
std::string serialize_coloring_text(const Coloring& k);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace xf
