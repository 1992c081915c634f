#pragma once

#include <cstdint>

namespace vsn {

// SplitMix64 stream. Small state, full 64-bit period, and cheap to seed,
// which makes it practical to derive one independent stream per
// (cell, replication) so results do not depend on thread scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix_u64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic sub-stream for cell (i, j), replication t of a run seeded
// with `seed`. Independent of evaluation order and worker count.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t i, std::uint64_t j,
                                std::uint64_t t) {
  std::uint64_t h = detail::mix_u64(seed + 0x9e3779b97f4a7c15ULL);
  h = detail::mix_u64(h ^ (i + 0xd1b54a32d192ed03ULL));
  h = detail::mix_u64(h ^ (j + 0x8cb92ba72f3d8dd7ULL));
  h = detail::mix_u64(h ^ (t + 0x2545f4914f6cdd1dULL));
  return SplitMix64(h);
}

}  // namespace vsn
