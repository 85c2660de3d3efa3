#include "core/label.hpp"

#include <cctype>
#include <mutex>
#include <unordered_set>

#include "util/error.hpp"

namespace xf {

namespace {

// unordered_set gives stable references under insertion, which is what makes
// pointer-identity interning safe.
struct Pool {
  std::mutex mx;
  std::unordered_set<std::string> strings;
};

Pool& pool() {
  static Pool* p = new Pool();  // leaked on purpose: labels outlive everything
  return *p;
}

}  // namespace

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (std::isspace(c) || c == '#' || !std::isprint(c)) return false;
  }
  return true;
}

VertexId VertexId::of(std::string_view label) {
  require(valid_label(label), "invalid vertex label: '" + std::string(label) + "'");
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mx);
  auto [it, inserted] = p.strings.emplace(label);
  (void)inserted;
  VertexId v;
  v.s_ = &*it;
  return v;
}

std::vector<VertexId> intern_labels(const std::vector<std::string>& labels) {
  std::vector<VertexId> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(VertexId::of(l));
  return out;
}

}  // namespace xf
