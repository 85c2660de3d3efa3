#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/complex.hpp"
#include "flips/bistellar.hpp"
#include "flips/cross.hpp"

namespace xf {

// One move of a reduction path; replayable bit-exactly (fresh labels and
// colors of created vertices travel with the move).
struct MoveRecord {
  enum class Kind { bistellar, cross };
  Kind kind = Kind::bistellar;
  FlipMove flip;
  std::optional<CrossFlipMove> cross;
  std::map<VertexId, int> new_colors;  // colors for vertices created by the move
};

struct StepCertificate {
  bool coloring_proper = true;
  bool manifold_ok = true;
  long long euler = 0;
  bool induced_ok = true;
  bool template_shellable = true;
  bool template_co_shellable = true;
  bool all() const {
    return coloring_proper && manifold_ok && induced_ok && template_shellable &&
           template_co_shellable;
  }
};

struct ReductionReport {
  std::string kind;
  uint64_t seed = 0;
  long long budget = 0;
  bool success = false;
  std::string message;
  SimplicialComplex start, end;
  std::optional<Coloring> start_coloring, end_coloring;
  std::vector<MoveRecord> moves;
  // exact content keys of start, every intermediate, and end (moves.size()+1)
  std::vector<std::string> keys;
  std::vector<StepCertificate> certificates;
  struct Stats {
    long long steps = 0;
    long long proposals = 0;
    double runtime_ms = 0;
  } stats;
};

// FNV hash of the canonical serialization: stable across runs, equal iff the
// facet lists are bit-identical.
std::string content_key(const SimplicialComplex& c);

std::pair<SimplicialComplex, std::optional<Coloring>> apply_move(
    const SimplicialComplex& c, const std::optional<Coloring>& kappa, const MoveRecord& m);

struct ReplayResult {
  bool ok = false;
  std::string error;
  SimplicialComplex end;
  std::optional<Coloring> end_coloring;
};
// Re-applies every move from the start complex, checking the recorded keys;
// ok iff the final complex matches the report's end bit-exactly.
ReplayResult replay_report(const ReductionReport& r);

MoveRecord bistellar_record(const FlipMove& m);
MoveRecord cross_record(const CrossFlipMove& m);

}  // namespace xf
