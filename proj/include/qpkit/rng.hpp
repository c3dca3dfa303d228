#pragma once

#include <cstdint>

namespace qpkit {

// SplitMix64. Hand-rolled so that sampled points are byte-identical across
// platforms and standard libraries (std distributions are not portable).
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi]. Modulo bias is irrelevant for genericity sampling;
  // determinism is what matters.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Uniform in [-bound, bound] \ {0}.
  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

  // Stable derivation of per-trial substreams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x632be59bd9b4e019ull * (stream + 1)));
    return r.next();
  }
};

}  // namespace qpkit
