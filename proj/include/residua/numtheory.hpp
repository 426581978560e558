#pragma once

#include <cstdint>

#include "residua/bigint.hpp"
#include "residua/rng.hpp"

namespace residua {

// RSA modulus n = pq together with the cached square. All schemes work in
// Z*_{n^2}; values handed around are always reduced into [0, modulus).
struct Modulus {
  Bigint n;
  Bigint n_sq;
  unsigned bit_length = 0;

  static Modulus from_n(const Bigint& n);
};

// Modulus plus its factorization and the derived exponents.
// lambda = lcm(p-1, q-1) is the trapdoor; gcd(n, lambda) = 1 is required for
// the residuosity-class arithmetic and is enforced here, at the root.
struct FactoredModulus {
  Modulus mod;
  Bigint p;
  Bigint q;
  Bigint lambda;  // lcm(p-1, q-1)
  Bigint phi;     // (p-1)(q-1)

  static FactoredModulus from_primes(const Bigint& p, const Bigint& q);
};

// L(u) = (u - 1)/n for u = 1 mod n (u first reduced mod n^2).
// The discrete-log extractor on the subgroup 1 + nZ.
Bigint l_function(const Bigint& u, const Modulus& mod);

Bigint lcm(const Bigint& a, const Bigint& b);

// a^{-1} mod m; throws not_invertible when gcd(a, m) != 1.
Bigint mod_inv(const Bigint& a, const Bigint& m);

// base^exp mod m by square-and-multiply; negative exponents go through
// mod_inv first (so they require gcd(base, m) = 1).
Bigint mod_pow(const Bigint& base, const Bigint& exp, const Bigint& m);

// Miller-Rabin (>= 40 rounds) behind deterministic trial division by every
// prime below 1000; below 10^6 the trial division alone is already exact.
bool is_probable_prime(const Bigint& x, Rng& rng, int rounds = 40);
bool is_probable_prime(const Bigint& x, int rounds = 40);

// Probable prime of exactly `bits` bits (top bit set), bits >= 8.
Bigint gen_prime(unsigned bits, Rng& rng);

// Uniform unit of Z*_m by rejection, m >= 2.
Bigint sample_unit(const Bigint& m, Rng& rng);

// Least k >= 1 with g^k = 1 mod m, given a multiple of the order
// (use n*lambda for m = n^2). Needs to factor group_exponent, so it is an
// oracle-scale tool: factors found by trial division up to
// trial_division_bound, with a probable-prime cofactor accepted; anything
// else throws too_large.
Bigint element_order(const Bigint& g, const Bigint& m, const Bigint& group_exponent,
                     std::uint64_t trial_division_bound = 1u << 20);

}  // namespace residua
