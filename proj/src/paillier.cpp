#include "residua/paillier.hpp"

namespace residua::paillier {

namespace {

// Accept g iff gcd(L(g^lambda mod n^2), n) = 1. This is Theorem 1's
// invertibility condition and it certifies n | ord(g) at the same time.
bool validate_g(const Bigint& g, const FactoredModulus& fmod, Bigint* l_out) {
  if (gcd(g, fmod.mod.n_sq) != 1) return false;
  Bigint gl = mod_pow(g, fmod.lambda, fmod.mod.n_sq);
  Bigint l = l_function(gl, fmod.mod);  // cannot throw: g^lambda = 1 mod n by Carmichael
  if (gcd(l, fmod.mod.n) != 1) return false;
  if (l_out) *l_out = l;
  return true;
}

SecretKey finish_secret(PublicKey pk, FactoredModulus fmod, const Bigint& l_g) {
  SecretKey sk;
  sk.rho = mod_inv(l_g, fmod.mod.n);
  // representative of n^{-1} mod lambda in (-lambda/2, lambda/2]
  Bigint s0 = mod_inv(fmod.mod.n % fmod.lambda, fmod.lambda);
  sk.s = (2 * s0 > fmod.lambda) ? Bigint(s0 - fmod.lambda) : s0;
  sk.pk = std::move(pk);
  sk.fmod = std::move(fmod);
  return sk;
}

void require_own_ciphertext(const PublicKey& pk, const Ciphertext& c) {
  if (c.scheme != Scheme::paillier)
    raise(Errc::scheme_mismatch, "ciphertext was produced by a different scheme");
  require_unit_ciphertext(c, pk.mod);
}

}  // namespace

Keypair keygen(unsigned bits, GStrategy strategy, Rng& rng) {
  if (bits < 16 || bits % 2 != 0) raise(Errc::bad_argument, "keygen needs even bits >= 16");
  for (;;) {
    Bigint p = gen_prime(bits / 2, rng);
    Bigint q = gen_prime(bits / 2, rng);
    if (p == q) continue;
    FactoredModulus fmod;
    try {
      fmod = FactoredModulus::from_primes(p, q);
    } catch (const Error&) {
      continue;  // unlucky pair, e.g. gcd(n, lambda) != 1; redraw
    }
    PublicKey pk;
    pk.mod = fmod.mod;
    Bigint l_g;
    if (strategy == GStrategy::one_plus_n) {
      pk.g = fmod.mod.n + 1;
      validate_g(pk.g, fmod, &l_g);  // always passes: L((1+n)^lambda) = lambda mod n
    } else {
      do {
        pk.g = sample_unit(fmod.mod.n_sq, rng);
      } while (!validate_g(pk.g, fmod, &l_g));
    }
    Keypair kp;
    kp.pub = pk;
    kp.sec = finish_secret(std::move(pk), std::move(fmod), l_g);
    return kp;
  }
}

Keypair keypair_from_factors(const Bigint& p, const Bigint& q, const Bigint& g) {
  FactoredModulus fmod = FactoredModulus::from_primes(p, q);
  PublicKey pk;
  pk.mod = fmod.mod;
  pk.g = g % fmod.mod.n_sq;
  Bigint l_g;
  if (!validate_g(pk.g, fmod, &l_g))
    raise(Errc::not_invertible, "g fails the keygen condition gcd(L(g^lambda), n) = 1");
  Keypair kp;
  kp.pub = pk;
  kp.sec = finish_secret(std::move(pk), std::move(fmod), l_g);
  return kp;
}

Ciphertext encrypt(const PublicKey& pk, const Bigint& m, Rng& rng) {
  return encrypt_with_pad(pk, m, sample_unit(pk.mod.n, rng));
}

Ciphertext encrypt_with_pad(const PublicKey& pk, const Bigint& m, const Bigint& r) {
  if (m < 0 || m >= pk.mod.n) raise(Errc::plaintext_out_of_range, "m must lie in Z_n");
  if (!is_unit(r, pk.mod.n)) raise(Errc::pad_not_unit, "pad must be a unit of Z*_n");
  Bigint c = mod_pow(pk.g, m, pk.mod.n_sq) * mod_pow(r, pk.mod.n, pk.mod.n_sq) % pk.mod.n_sq;
  return Ciphertext{c, Scheme::paillier};
}

Bigint decrypt(const SecretKey& sk, const Ciphertext& c) {
  require_own_ciphertext(sk.pk, c);
  Bigint cl = mod_pow(c.value, sk.fmod.lambda, sk.fmod.mod.n_sq);
  return sk.rho * l_function(cl, sk.fmod.mod) % sk.fmod.mod.n;
}

Opened decrypt_full(const SecretKey& sk, const Ciphertext& c) {
  Opened out;
  out.m = decrypt(sk, c);
  // y = (c g^{-x})^s mod n, s any representative of n^{-1} mod lambda
  Bigint base = c.value * mod_pow(sk.pk.g, Bigint(-out.m), sk.fmod.mod.n_sq) %
                sk.fmod.mod.n_sq % sk.fmod.mod.n;
  out.r = mod_pow(base, sk.s, sk.fmod.mod.n);
  return out;
}

Ciphertext add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2) {
  if (c1.scheme != c2.scheme)
    raise(Errc::scheme_mismatch, "cannot add ciphertexts from different schemes");
  require_own_ciphertext(pk, c1);
  require_own_ciphertext(pk, c2);
  return Ciphertext{c1.value * c2.value % pk.mod.n_sq, Scheme::paillier};
}

Ciphertext scalar_mul(const PublicKey& pk, const Ciphertext& c, const Bigint& k) {
  if (k < 0) raise(Errc::bad_argument, "scalar must be >= 0");
  require_own_ciphertext(pk, c);
  return Ciphertext{mod_pow(c.value, k, pk.mod.n_sq), Scheme::paillier};
}

Ciphertext rerandomize(const PublicKey& pk, const Ciphertext& c, Rng& rng) {
  require_own_ciphertext(pk, c);
  Bigint r = sample_unit(pk.mod.n, rng);
  return Ciphertext{c.value * mod_pow(r, pk.mod.n, pk.mod.n_sq) % pk.mod.n_sq, Scheme::paillier};
}

}  // namespace residua::paillier
