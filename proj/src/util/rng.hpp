#pragma once

#include <cstdint>
#include <random>

namespace xf {

// Seeded RNG with hand-rolled bounded draws so that sequences do not depend
// on the standard library's distribution internals.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0); }

  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 eng_;
};

}  // namespace xf
