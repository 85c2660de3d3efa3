#include "shelling/shelling.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "subdivision/stellar.hpp"
#include "util/error.hpp"

namespace xf {

namespace {

// Restriction by the vertex criterion, then check the interval is disjoint
// from the earlier union: r must not be a subset of any earlier facet.
std::optional<Face> step_restriction(const std::vector<Face>& earlier, const Face& fj) {
  std::vector<VertexId> rv;
  for (const auto& v : fj) {
    Face ridge = fj.set_minus(v);
    for (const auto& fi : earlier) {
      if (ridge.subset_of(fi)) {
        rv.push_back(v);
        break;
      }
    }
  }
  Face r(std::move(rv));
  for (const auto& fi : earlier) {
    if (r.subset_of(fi)) return std::nullopt;
  }
  return r;
}

}  // namespace

ShellingCheck verify_shelling(const SimplicialComplex& c, const std::vector<Face>& order) {
  ShellingCheck out;
  require(order.size() == c.facet_count(), "verify_shelling: order is not a facet permutation");
  {
    std::vector<Face> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    require(sorted == c.facets(), "verify_shelling: order is not a facet permutation");
  }
  require(c.is_pure(), "verify_shelling: complex is not pure");
  ShellingOrder so;
  std::vector<Face> earlier;
  for (size_t j = 0; j < order.size(); ++j) {
    auto r = step_restriction(earlier, order[j]);
    if (!r) {
      out.violation = static_cast<int>(j);
      return out;
    }
    // For j > 0 the intersection with the earlier union must be nonempty
    // (pure codimension one is implied by the interval criterion; r = F_j is
    // legitimate and closes a sphere).
    if (j > 0 && r->card() == 0) {
      out.violation = static_cast<int>(j);
      return out;
    }
    so.facets.push_back(order[j]);
    so.restrictions.push_back(*r);
    earlier.push_back(order[j]);
  }
  out.order = std::move(so);
  return out;
}

namespace {

struct ShellSearch {
  const std::vector<Face>& facets;
  int d;
  std::vector<std::vector<Face>> inter;  // pairwise intersections
  long long budget;
  long long nodes = 0;
  std::unordered_set<std::string> dead;  // visited subsets with no completion

  explicit ShellSearch(const std::vector<Face>& fs, long long b) : facets(fs), budget(b) {
    d = fs.empty() ? 0 : fs[0].dim();
    inter.assign(fs.size(), {});
    for (size_t i = 0; i < fs.size(); ++i) {
      inter[i].resize(fs.size());
      for (size_t j = 0; j < fs.size(); ++j)
        if (i != j) inter[i][j] = fs[i].set_intersect(fs[j]);
    }
  }

  std::string key(const std::vector<char>& used) const {
    return std::string(used.begin(), used.end());
  }

  // F̄_f ∩ (∪ used) pure of dimension d-1 and nonempty.
  bool valid_step(const std::vector<char>& used, size_t f) const {
    std::vector<const Face*> ridges;
    for (size_t i = 0; i < facets.size(); ++i) {
      if (!used[i]) continue;
      if (inter[f][i].dim() == d - 1) ridges.push_back(&inter[f][i]);
    }
    if (ridges.empty()) return false;
    for (size_t i = 0; i < facets.size(); ++i) {
      if (!used[i]) continue;
      const Face& m = inter[f][i];
      if (m.dim() == d - 1) continue;
      bool covered = false;
      for (const Face* r : ridges) {
        if (m.subset_of(*r)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }

  bool dfs(std::vector<char>& used, size_t placed, std::vector<int>& order) {
    if (placed == facets.size()) return true;
    if (++nodes > budget) fail(errc::budget, "shelling search: budget exhausted");
    auto k = key(used);
    if (dead.count(k)) return false;
    // candidate ordering: most shared ridges first keeps the greedy path hot
    std::vector<std::pair<int, int>> cands;
    for (size_t f = 0; f < facets.size(); ++f) {
      if (used[f]) continue;
      if (placed == 0) {
        cands.push_back({0, static_cast<int>(f)});
      } else if (valid_step(used, f)) {
        int ridges = 0;
        for (size_t i = 0; i < facets.size(); ++i)
          if (used[i] && inter[f][i].dim() == d - 1) ++ridges;
        cands.push_back({-ridges, static_cast<int>(f)});
      }
    }
    std::sort(cands.begin(), cands.end());
    for (auto [score, f] : cands) {
      used[f] = 1;
      order.push_back(f);
      if (dfs(used, placed + 1, order)) return true;
      order.pop_back();
      used[f] = 0;
    }
    dead.insert(std::move(k));
    return false;
  }
};

}  // namespace

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           const std::vector<Face>& prefix, long long budget) {
  require(c.is_pure(), "find_shelling: complex is not pure");
  if (c.is_void()) return ShellingOrder{};
  const auto& facets = c.facets();
  if (facets.size() == 1) {
    ShellingOrder so;
    so.facets = {facets[0]};
    so.restrictions = {Face()};
    return so;
  }
  ShellSearch s(facets, budget);
  std::vector<char> used(facets.size(), 0);
  std::vector<int> order;
  // replay prefix
  std::map<Face, size_t> index;
  for (size_t i = 0; i < facets.size(); ++i) index[facets[i]] = i;
  for (size_t j = 0; j < prefix.size(); ++j) {
    auto it = index.find(prefix[j]);
    require(it != index.end(), "find_shelling: prefix facet " + prefix[j].to_string() +
                                   " is not a facet");
    require(!used[it->second], "find_shelling: duplicate prefix facet");
    if (j > 0) {
      require(s.valid_step(used, it->second),
              "find_shelling: prefix is not a partial shelling (position " + std::to_string(j) +
                  ")");
    }
    used[it->second] = 1;
    order.push_back(static_cast<int>(it->second));
  }
  if (!s.dfs(used, order.size(), order)) return std::nullopt;
  std::vector<Face> of;
  for (int i : order) of.push_back(facets[i]);
  auto check = verify_shelling(c, of);
  require(check.order.has_value(), "shelling search produced invalid order", errc::internal);
  return *check.order;
}

bool is_co_shellable(const SimplicialComplex& cross, const SimplicialComplex& d,
                     long long budget) {
  require(!d.is_void(), "co-shellability: empty subcomplex");
  require(d.is_pure(), "co-shellability: subcomplex is not pure");
  require(cross.is_pure() && !cross.is_void(), "co-shellability: bad ambient complex");
  require(d.dim() == cross.dim(), "co-shellability: subcomplex must be top-dimensional");
  std::vector<Face> comp;
  for (const auto& g : cross.facets()) {
    bool in_d = std::binary_search(d.facets().begin(), d.facets().end(), g);
    if (!in_d) comp.push_back(g);
  }
  require(comp.size() < cross.facet_count(), "co-shellability: subcomplex has no facets");
  require(!comp.empty(), "co-shellability: subcomplex is not proper");
  for (const auto& g : d.facets())
    require(cross.has_face(g), "co-shellability: not a subcomplex of the ambient complex");
  auto cc = SimplicialComplex::from_facets(std::move(comp));
  return find_shelling(cc, {}, budget).has_value();
}

std::pair<SimplicialComplex, FlipMove> shelling_step_boundary(const SimplicialComplex& ball,
                                                              const Face& new_facet) {
  require(ball.is_pure() && !ball.is_void(), "elementary shelling: need a pure complex");
  require(new_facet.dim() == *ball.dim(), "elementary shelling: facet dimension mismatch");
  require(!ball.has_face(new_facet), "elementary shelling: facet already present");
  auto r = step_restriction(ball.facets(), new_facet);
  require(r.has_value(), "not an elementary shelling: intersection is not an interval complement");
  require(r->card() > 0, "not an elementary shelling: facet is disconnected from the complex");
  require(r->card() < new_facet.card(),
          "not an elementary shelling: attaching along the whole boundary");
  // purity of F̄ ∩ Δ: every intersection with an old facet lies in a ridge
  for (const auto& g : ball.facets()) {
    Face m = new_facet.set_intersect(g);
    if (static_cast<int>(m.card()) == new_facet.dim()) continue;
    bool covered = false;
    for (const auto& v : *r) {
      if (m.subset_of(new_facet.set_minus(v))) {
        covered = true;
        break;
      }
    }
    require(covered, "not an elementary shelling: intersection is not pure of codimension one");
  }
  std::vector<Face> facets(ball.facets());
  facets.push_back(new_facet);
  auto grown = SimplicialComplex::from_facets(std::move(facets));
  // boundary move: ∂Ω_{j-1} ⊇ Ā * ∂r̄ becomes ∂Ā * r̄ (A = F_j \ r)
  FlipMove move{new_facet.set_minus(*r), *r};
  std::string why;
  require(flip_applicable(boundary_complex(ball), move, &why),
          "elementary shelling boundary move failed: " + why, errc::internal);
  return {grown, move};
}

ShellingOrder cone_shelling(VertexId apex, const ShellingOrder& base) {
  ShellingOrder out;
  for (size_t i = 0; i < base.facets.size(); ++i) {
    out.facets.push_back(base.facets[i].with(apex));
    out.restrictions.push_back(base.restrictions[i]);
  }
  return out;
}

SubsetShellability::SubsetShellability(std::vector<Face> ambient_facets)
    : facets_(std::move(ambient_facets)) {
  require(!facets_.empty(), "subset shellability: no facets");
  require(facets_.size() <= 22, "subset shellability: too many ambient facets");
  dim_ = facets_[0].dim();
  for (const auto& g : facets_) require(g.dim() == dim_, "subset shellability: not pure");
  inter_.assign(facets_.size(), {});
  for (size_t i = 0; i < facets_.size(); ++i) {
    inter_[i].resize(facets_.size());
    for (size_t j = 0; j < facets_.size(); ++j)
      if (i != j) inter_[i][j] = facets_[i].set_intersect(facets_[j]);
  }
}

bool SubsetShellability::valid_step(uint32_t used, int f) const {
  bool any_ridge = false;
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (!(used >> i & 1)) continue;
    if (inter_[f][i].dim() == dim_ - 1) {
      any_ridge = true;
      break;
    }
  }
  if (!any_ridge) return false;
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (!(used >> i & 1)) continue;
    const Face& m = inter_[f][i];
    if (m.dim() == dim_ - 1) continue;
    bool covered = false;
    for (size_t j = 0; j < facets_.size(); ++j) {
      if (!(used >> j & 1)) continue;
      const Face& r = inter_[f][j];
      if (r.dim() == dim_ - 1 && m.subset_of(r)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

void SubsetShellability::build_all() {
  if (!reach_.empty()) return;
  size_t n = facets_.size();
  reach_.assign(size_t(1) << n, 0);
  parent_.assign(size_t(1) << n, -1);
  for (size_t i = 0; i < n; ++i) {
    reach_[size_t(1) << i] = 1;
    parent_[size_t(1) << i] = static_cast<int8_t>(i);
  }
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    if (!reach_[mask]) continue;
    for (size_t f = 0; f < n; ++f) {
      if (mask >> f & 1) continue;
      uint32_t next = mask | (uint32_t(1) << f);
      if (reach_[next]) continue;
      if (valid_step(mask, static_cast<int>(f))) {
        reach_[next] = 1;
        parent_[next] = static_cast<int8_t>(f);
      }
    }
  }
}

bool SubsetShellability::shellable(uint32_t mask) const {
  require(!reach_.empty(), "subset shellability: build_all() not called", errc::internal);
  require(mask != 0, "subset shellability: empty subset");
  return reach_[mask] != 0;
}

std::vector<int> SubsetShellability::witness_order(uint32_t mask) const {
  require(shellable(mask), "subset shellability: no witness for a non-shellable subset");
  std::vector<int> rev;
  uint32_t cur = mask;
  while (cur) {
    int f = parent_[cur];
    rev.push_back(f);
    cur &= ~(uint32_t(1) << f);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

ShellingOrder subdivide_shelling(const SimplicialComplex& before, const ShellingOrder& order,
                                 const Face& f, VertexId apex) {
  ShellingOrder out;
  for (size_t j = 0; j < order.facets.size(); ++j) {
    const Face& g = order.facets[j];
    const Face& r = order.restrictions[j];
    if (!f.subset_of(g)) {
      out.facets.push_back(g);
      continue;
    }
    // starred block: restriction vertices of r ∩ F first
    Face rf = r.set_intersect(f);
    std::vector<VertexId> block(rf.begin(), rf.end());
    for (const auto& v : f)
      if (!rf.contains(v)) block.push_back(v);
    for (const auto& v : block) out.facets.push_back(g.set_minus(v).with(apex));
  }
  auto after = stellar_subdivide(before, f, apex);
  auto check = verify_shelling(after, out.facets);
  require(check.order.has_value(),
          "subdivide_shelling produced an invalid order at position " +
              std::to_string(check.violation),
          errc::internal);
  return *check.order;
}

}  // namespace xf
