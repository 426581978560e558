#pragma once

#include <cstdint>

#include "residua/bigint.hpp"

namespace residua::cost {

struct Counts {
  std::uint64_t exp_mod_nsq = 0;
  std::uint64_t exp_mod_n = 0;
  std::uint64_t inv_mod_nsq = 0;
  std::uint64_t inv_mod_n = 0;
};

// Scoped instrumentation of the modular-arithmetic kernels. While a Meter is
// alive on the current thread, every mod_pow/mod_inv whose modulus equals n
// or n^2 is tallied into it. Exponentiation counts are what the decryption
// cost report is built from; wall times are measured separately.
class Meter {
 public:
  Meter(Bigint n, Bigint n_sq);
  ~Meter();

  Meter(const Meter&) = delete;
  Meter& operator=(const Meter&) = delete;

  const Counts& counts() const { return counts_; }

  static void note_pow(const Bigint& modulus);
  static void note_inv(const Bigint& modulus);

 private:
  Bigint n_, n_sq_;
  Counts counts_;
  Meter* prev_;
};

}  // namespace residua::cost
