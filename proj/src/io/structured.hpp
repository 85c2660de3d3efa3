#pragma once

#include <string>

#include "coloring/extend.hpp"
#include "flips/cross.hpp"
#include "pipeline/report.hpp"
#include "poset/cobordism.hpp"
#include "shelling/shelling.hpp"

namespace xf {

std::string serialize_move_json(const MoveRecord& m);
MoveRecord parse_move_json(const std::string& text);

std::string serialize_flips_json(const std::vector<FlipMove>& moves);
std::vector<FlipMove> parse_flips_json(const std::string& text);

std::string serialize_catalog_json(const CrossFlipCatalog& c);
CrossFlipCatalog parse_catalog_json(const std::string& text);

std::string serialize_report_json(const ReductionReport& r);
ReductionReport parse_report_json(const std::string& text);

std::string serialize_poset_json(const SimplicialPoset& p);
SimplicialPoset parse_poset_json(const std::string& text);

std::string serialize_cobordism_json(const PseudoCobordism& o);
PseudoCobordism parse_cobordism_json(const std::string& text);

std::string serialize_shelling_json(const ShellingOrder& s);
std::string serialize_extend_log_json(const std::vector<ExtendStep>& log);

std::string classify_json(const SimplicialComplex& c);

}  // namespace xf
