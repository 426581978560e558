#pragma once

#include <cstdint>
#include <random>

#include "residua/bigint.hpp"

namespace residua {

// Deterministic, seedable randomness source. Every key-generating and
// pad-sampling operation takes one of these by reference; a fixed seed makes
// the whole pipeline reproducible byte for byte (mt19937_64 output is pinned
// by the standard). Single owner: not copyable, not shared between threads.
//
// Not a CSPRNG. Fine for the reference arithmetic and reproducible tests this
// library exists for; do not use the keys it produces to protect anything.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng from_entropy();

  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
  Rng(Rng&&) noexcept = default;
  Rng& operator=(Rng&&) noexcept = default;

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, 2^nbits).
  Bigint bits(unsigned nbits);

  // Uniform integer in [0, bound) by rejection sampling; bound >= 1.
  Bigint below(const Bigint& bound);

 private:
  std::mt19937_64 gen_;
};

}  // namespace residua
