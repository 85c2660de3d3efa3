#include "core/face.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace xf {

Face::Face(std::vector<VertexId> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  for (size_t i = 1; i < v_.size(); ++i) {
    if (v_[i] == v_[i - 1]) {
      std::string listing;
      for (const auto& v : v_) listing += (listing.empty() ? "" : " ") + v.label();
      fail(errc::domain,
           "malformed face (duplicate vertex '" + v_[i].label() + "' in: " + listing + ")");
    }
  }
}

Face Face::of(std::initializer_list<std::string_view> labels) {
  std::vector<VertexId> vs;
  vs.reserve(labels.size());
  for (auto l : labels) vs.push_back(VertexId::of(l));
  return Face(std::move(vs));
}

Face Face::of_labels(const std::vector<std::string>& labels) {
  return Face(intern_labels(labels));
}

bool Face::contains(VertexId v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Face::subset_of(const Face& o) const {
  if (v_.size() > o.v_.size()) return false;
  size_t j = 0;
  for (const auto& x : v_) {
    while (j < o.v_.size() && o.v_[j] < x) ++j;
    if (j == o.v_.size() || !(o.v_[j] == x)) return false;
    ++j;
  }
  return true;
}

Face Face::set_union(const Face& o) const {
  std::vector<VertexId> out;
  out.reserve(v_.size() + o.v_.size());
  std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
  Face f;
  f.v_ = std::move(out);
  return f;
}

Face Face::set_intersect(const Face& o) const {
  std::vector<VertexId> out;
  std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
  Face f;
  f.v_ = std::move(out);
  return f;
}

Face Face::set_minus(const Face& o) const {
  std::vector<VertexId> out;
  std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
  Face f;
  f.v_ = std::move(out);
  return f;
}

Face Face::set_minus(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(v_.size());
  for (const auto& x : v_)
    if (!(x == v)) out.push_back(x);
  Face f;
  f.v_ = std::move(out);
  return f;
}

Face Face::with(VertexId v) const {
  if (contains(v)) return *this;
  std::vector<VertexId> out(v_);
  out.push_back(v);
  return Face(std::move(out));
}

std::strong_ordering Face::operator<=>(const Face& o) const {
  return std::lexicographical_compare_three_way(v_.begin(), v_.end(), o.v_.begin(), o.v_.end());
}

std::string Face::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += v_[i].label();
  }
  s += "}";
  return s;
}

size_t Face::hash() const {
  size_t h = 1469598103934665603ull;
  for (const auto& v : v_) {
    h ^= std::hash<VertexId>{}(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Face> subsets_of(const Face& f, size_t card) {
  std::vector<Face> out;
  const auto& vs = f.verts();
  size_t n = vs.size();
  if (card > n) return out;
  std::vector<size_t> idx(card);
  for (size_t i = 0; i < card; ++i) idx[i] = i;
  while (true) {
    std::vector<VertexId> pick;
    pick.reserve(card);
    for (size_t i : idx) pick.push_back(vs[i]);
    out.push_back(Face(std::move(pick)));
    // next combination
    size_t i = card;
    while (i > 0 && idx[i - 1] == n - card + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < card; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Face> all_subsets_of(const Face& f) {
  std::vector<Face> out;
  for (size_t k = 0; k <= f.card(); ++k) {
    auto s = subsets_of(f, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace xf
