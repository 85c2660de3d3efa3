#include "core/coloring.hpp"

#include <algorithm>

#include "util/error.hpp"
#include "util/rng.hpp"

namespace xf {

void Coloring::set_palette_size(int m) {
  require(m >= 0, "palette size must be nonnegative");
  m_ = m;
}

void Coloring::set(VertexId v, int color) {
  require(color >= 0 && color < m_,
          "color " + std::to_string(color) + " outside palette of size " + std::to_string(m_));
  a_[v] = color;
}

std::optional<int> Coloring::get(VertexId v) const {
  auto it = a_.find(v);
  if (it == a_.end()) return std::nullopt;
  return it->second;
}

int Coloring::at(VertexId v) const {
  auto it = a_.find(v);
  require(it != a_.end(), "vertex '" + v.label() + "' is uncolored");
  return it->second;
}

Coloring Coloring::restricted_to(const std::vector<VertexId>& vs) const {
  Coloring out(m_);
  for (const auto& v : vs) {
    auto it = a_.find(v);
    if (it != a_.end()) out.a_[v] = it->second;
  }
  return out;
}

bool is_proper(const SimplicialComplex& c, const Coloring& k) {
  for (const auto& v : c.vertices()) {
    require(k.colors(v), "vertex '" + v.label() + "' is uncolored");
  }
  for (const auto& e : c.faces_of_dim(1)) {
    if (k.at(e.verts()[0]) == k.at(e.verts()[1])) return false;
  }
  return true;
}

namespace {

struct ColorSearch {
  const std::vector<VertexId>& vs;
  std::vector<std::vector<int>> adj;  // indices into vs
  int m;
  std::vector<int> color;

  bool solve(size_t i, const std::vector<std::vector<int>>& color_order) {
    if (i == vs.size()) return true;
    for (int c : color_order[i]) {
      bool ok = true;
      for (int j : adj[i]) {
        if (color[j] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[i] = c;
        if (solve(i + 1, color_order)) return true;
        color[i] = -1;
      }
    }
    return false;
  }
};

std::optional<Coloring> find_coloring_impl(const SimplicialComplex& c, int m, Rng* rng) {
  require(m >= 1, "palette size must be at least 1");
  if (c.is_void()) return Coloring(m);

  std::vector<VertexId> vs(c.vertices());
  std::map<VertexId, int> idx;
  for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(vs.size());
  for (const auto& e : c.faces_of_dim(1)) {
    int a = idx[e.verts()[0]], b = idx[e.verts()[1]];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // Order vertices by decreasing degree (random order when sampling).
  std::vector<int> order(vs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (rng) {
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng->below(i)]);
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });
  }

  std::vector<int> pos(vs.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<VertexId> ordered;
  for (int i : order) ordered.push_back(vs[i]);
  // re-index adjacency into search order, keeping only already-placed ones
  std::vector<std::vector<int>> placed_adj(vs.size());
  for (size_t i = 0; i < order.size(); ++i) {
    for (int nb : adj[order[i]]) {
      if (pos[nb] < static_cast<int>(i)) placed_adj[i].push_back(pos[nb]);
    }
  }
  std::vector<std::vector<int>> color_order(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) {
    for (int cc = 0; cc < m; ++cc) color_order[i].push_back(cc);
    if (rng) {
      for (size_t k = color_order[i].size(); k > 1; --k)
        std::swap(color_order[i][k - 1], color_order[i][rng->below(k)]);
    }
  }
  ColorSearch search{ordered, std::move(placed_adj), m, std::vector<int>(vs.size(), -1)};
  if (!search.solve(0, color_order)) return std::nullopt;
  Coloring out(m);
  for (size_t i = 0; i < ordered.size(); ++i) out.set(ordered[i], search.color[i]);
  return out;
}

}  // namespace

std::optional<Coloring> find_proper_coloring(const SimplicialComplex& c, int m) {
  return find_coloring_impl(c, m, nullptr);
}

std::optional<Coloring> find_proper_coloring_random(const SimplicialComplex& c, int m, Rng& rng) {
  return find_coloring_impl(c, m, &rng);
}

}  // namespace xf
