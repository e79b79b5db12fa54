#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "randsat/cnf.hpp"

namespace randsat {

/// Per-trial seed as a pure function of (master seed, trial index), so
/// trials can run in any order or on any thread.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial);

/// Seeded pseudorandom stream. Bounded draws use rejection sampling on the
/// raw 64-bit engine output, so streams are identical across standard
/// library implementations.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold)
        return r % bound;
    }
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform index among three items.
  unsigned choose3() { return static_cast<unsigned>(below(3)); }

  /// Fills `out` with a uniform permutation of 1..out.size() (Fisher-Yates).
  void permutation(std::span<Var> out) {
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = static_cast<Var>(i + 1);
    for (std::size_t i = out.size(); i > 1; --i)
      std::swap(out[i - 1], out[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace randsat
