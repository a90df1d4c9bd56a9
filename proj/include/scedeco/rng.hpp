#pragma once

#include <cstdint>
#include <string_view>

namespace scedeco {

// FNV-1a, used for trace digests, config digests, and seed derivation.
inline std::uint64_t fnv1a(std::string_view bytes,
                           std::uint64_t h = 1469598103934665603ULL) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// splitmix64 finalizer; the single mixing primitive behind every derived
// seed in the engine. Replays depend on these constants staying fixed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

inline std::uint64_t mix64(std::uint64_t a, std::string_view label) {
  return mix64(a, fnv1a(label));
}

// Deterministic RNG with a platform-independent output stream. The std
// distributions are implementation-defined, so bounded draws are done by
// plain modulo; the bias is irrelevant for search proposals and replay
// only requires that the stream is stable.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_ ^ 0x5851f42d4c957f2dULL);
  }

  // Uniform draw from [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  rng split(std::string_view label) { return rng(mix64(next_u64(), label)); }

 private:
  std::uint64_t state_;
};

}  // namespace scedeco
