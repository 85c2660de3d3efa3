#pragma once

#include <stdexcept>
#include <string>

namespace xf {

enum class errc {
  domain,    // precondition or domain violation in the input
  parse,     // malformed file or string
  budget,    // search budget exhausted (distinct from a definitive negative)
  internal,  // invariant the library itself guarantees has failed
  io,        // filesystem problem
};

class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, const std::string& msg, errc c = errc::domain) {
  if (!cond) fail(c, msg);
}

}  // namespace xf
