#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace xf {

// FNV-1a. Used for content hashes that must be stable across processes
// (std::hash makes no such promise).
inline uint64_t fnv1a(std::string_view s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  uint64_t h = fnv1a(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace xf
