#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace xf {

// Interned vertex label. Identity is pointer identity in a global pool, so
// equality and hashing are O(1); ordering is lexicographic on the label text,
// which is also the order used by the canonical serialization.
class VertexId {
public:
  VertexId() : s_(nullptr) {}
  static VertexId of(std::string_view label);

  const std::string& label() const { return *s_; }
  bool valid() const { return s_ != nullptr; }

  friend bool operator==(VertexId a, VertexId b) { return a.s_ == b.s_; }
  std::strong_ordering operator<=>(const VertexId& o) const {
    if (s_ == o.s_) return std::strong_ordering::equal;
    int c = label().compare(o.label());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const void* key() const { return s_; }

private:
  const std::string* s_;
};

// A label is a single whitespace-free token; '#' is reserved for comments in
// the text formats.
bool valid_label(std::string_view s);

std::vector<VertexId> intern_labels(const std::vector<std::string>& labels);

}  // namespace xf

template <>
struct std::hash<xf::VertexId> {
  size_t operator()(const xf::VertexId& v) const noexcept {
    return std::hash<const void*>{}(v.key());
  }
};
