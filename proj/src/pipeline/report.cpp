#include "pipeline/report.hpp"

#include "util/error.hpp"
#include "util/fnv.hpp"

namespace xf {

std::string content_key(const SimplicialComplex& c) { return fnv1a_hex(c.to_text()); }

MoveRecord bistellar_record(const FlipMove& m) {
  MoveRecord r;
  r.kind = MoveRecord::Kind::bistellar;
  r.flip = m;
  return r;
}

MoveRecord cross_record(const CrossFlipMove& m) {
  MoveRecord r;
  r.kind = MoveRecord::Kind::cross;
  r.cross = m;
  return r;
}

std::pair<SimplicialComplex, std::optional<Coloring>> apply_move(
    const SimplicialComplex& c, const std::optional<Coloring>& kappa, const MoveRecord& m) {
  if (m.kind == MoveRecord::Kind::bistellar) {
    auto next = apply_bistellar_flip(c, m.flip);
    std::optional<Coloring> col;
    if (kappa) {
      Coloring k(kappa->palette_size());
      for (const auto& v : next.vertices()) {
        auto old = kappa->get(v);
        if (old) {
          k.set(v, *old);
        } else {
          auto it = m.new_colors.find(v);
          require(it != m.new_colors.end(),
                  "move record: no color for created vertex '" + v.label() + "'");
          k.set(v, it->second);
        }
      }
      col = std::move(k);
    }
    return {next, col};
  }
  require(m.cross.has_value(), "move record: missing cross-flip payload");
  return apply_cross_flip(c, *m.cross, kappa);
}

ReplayResult replay_report(const ReductionReport& r) {
  ReplayResult out;
  SimplicialComplex cur = r.start;
  std::optional<Coloring> col = r.start_coloring;
  if (!r.keys.empty() && r.keys[0] != content_key(cur)) {
    out.error = "start key mismatch";
    return out;
  }
  for (size_t i = 0; i < r.moves.size(); ++i) {
    try {
      auto [next, ncol] = apply_move(cur, col, r.moves[i]);
      cur = std::move(next);
      col = std::move(ncol);
    } catch (const Error& e) {
      out.error = "move " + std::to_string(i) + ": " + e.what();
      return out;
    }
    if (i + 1 < r.keys.size() && r.keys[i + 1] != content_key(cur)) {
      out.error = "key mismatch after move " + std::to_string(i);
      return out;
    }
  }
  out.end = cur;
  out.end_coloring = col;
  out.ok = cur == r.end;
  if (!out.ok && out.error.empty()) out.error = "final complex differs from the recorded end";
  return out;
}

}  // namespace xf
