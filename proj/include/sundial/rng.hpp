#pragma once

#include <cstdint>
#include <initializer_list>

/*
  Seeded deterministic random source.  splitmix64 is used instead of the
  standard-library engines because its output is fixed by the algorithm, not
  by the standard library implementation, so identical seeds give identical
  report streams on every platform and compiler.

  An Rng is owned by exactly one task at a time; parallel drivers derive one
  independent stream per work item with derive_seed() instead of sharing.
*/

namespace sundial {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0.  The modulo bias (< 2^-32 for the n used here)
  // is irrelevant for genericity and keeps the draw sequence platform-fixed.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(next() % n);
  }

 private:
  std::uint64_t state_;
};

// Stable seed derivation: mixes a base seed with a list of tags (grid
// coordinates, trial index, ...) so each work item gets an independent,
// schedule-independent stream.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = base ^ 0x2545f4914f6cdd1dULL;
  for (std::uint64_t t : tags) {
    h ^= t + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    Rng mix(h);
    h = mix.next();
  }
  return h;
}

}  // namespace sundial
