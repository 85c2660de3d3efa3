#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "core/label.hpp"

namespace xf {

// A face: sorted, duplicate-free set of vertices. The empty face has
// dimension -1 and belongs to every nonempty complex.
class Face {
public:
  Face() = default;
  explicit Face(std::vector<VertexId> vs);  // sorts; rejects duplicates
  static Face of(std::initializer_list<std::string_view> labels);
  static Face of_labels(const std::vector<std::string>& labels);

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  size_t card() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  bool contains(VertexId v) const;
  bool subset_of(const Face& o) const;
  Face set_union(const Face& o) const;
  Face set_intersect(const Face& o) const;
  Face set_minus(const Face& o) const;
  Face set_minus(VertexId v) const;
  Face with(VertexId v) const;

  const std::vector<VertexId>& verts() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool operator==(const Face&) const = default;
  std::strong_ordering operator<=>(const Face& o) const;

  std::string to_string() const;  // "{a,b,c}" for diagnostics
  size_t hash() const;

private:
  std::vector<VertexId> v_;
};

// All subsets of f with the given cardinality, in lexicographic order.
std::vector<Face> subsets_of(const Face& f, size_t card);
// All subsets (including empty and f itself), by increasing cardinality.
std::vector<Face> all_subsets_of(const Face& f);

}  // namespace xf

template <>
struct std::hash<xf::Face> {
  size_t operator()(const xf::Face& f) const noexcept { return f.hash(); }
};
