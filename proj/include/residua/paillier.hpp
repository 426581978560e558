#pragma once

#include <optional>

#include "residua/ciphertext.hpp"
#include "residua/numtheory.hpp"
#include "residua/rng.hpp"

namespace residua::paillier {

// How keygen picks the base g: a random unit of Z*_{n^2} (validated and
// resampled until gcd(L(g^lambda), n) = 1), or the deterministic g = 1 + n,
// which always validates since L((1+n)^lambda) = lambda mod n.
enum class GStrategy { random_unit, one_plus_n };

struct PublicKey {
  Modulus mod;
  Bigint g;  // unit of Z*_{n^2} with n | ord(g), certified at keygen
};

// rho = L(g^lambda mod n^2)^{-1} mod n and s = n^{-1} mod lambda have no
// relation to any ciphertext, so they are computed once here. s is stored as
// the representative in (-lambda/2, lambda/2]; any representative decrypts
// identically (negative s goes through modular inversion of the base).
struct SecretKey {
  PublicKey pk;
  FactoredModulus fmod;
  Bigint rho;
  Bigint s;
};

struct Keypair {
  PublicKey pub;
  SecretKey sec;
};

// Message m together with its recovered pad r (c = g^m r^n mod n^2).
struct Opened {
  Bigint m;
  Bigint r;
};

Keypair keygen(unsigned bits, GStrategy strategy, Rng& rng);

// Assemble a keypair from known factors and base; the small-parameter entry
// point used throughout the exhaustive tests. Validates g the same way
// keygen does and throws not_invertible if gcd(L(g^lambda), n) != 1.
Keypair keypair_from_factors(const Bigint& p, const Bigint& q, const Bigint& g);

// c = g^m r^n mod n^2 with a fresh pad r drawn from Z*_n.
Ciphertext encrypt(const PublicKey& pk, const Bigint& m, Rng& rng);

// Same with a caller-chosen pad; r must be a unit of Z*_n.
Ciphertext encrypt_with_pad(const PublicKey& pk, const Bigint& m, const Bigint& r);

// m = rho * L(c^lambda mod n^2) mod n.
Bigint decrypt(const SecretKey& sk, const Ciphertext& c);

// Full residuosity-class recovery: the unique (m, r) with c = g^m r^n,
// r = (c g^{-m})^s mod n.
Opened decrypt_full(const SecretKey& sk, const Ciphertext& c);

// c1 * c2 mod n^2; decrypts to m1 + m2 mod n with pad r1 r2 mod n.
Ciphertext add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2);

// c^k mod n^2, k >= 0; decrypts to k*m mod n.
Ciphertext scalar_mul(const PublicKey& pk, const Ciphertext& c, const Bigint& k);

// c * r'^n mod n^2 for a fresh unit r'; same plaintext, rerolled pad.
Ciphertext rerandomize(const PublicKey& pk, const Ciphertext& c, Rng& rng);

}  // namespace residua::paillier
