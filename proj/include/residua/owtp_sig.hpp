#pragma once

#include <string_view>

#include "residua/paillier.hpp"

namespace residua::owtp {

// Signature (s1, s2) on a message digest: valid iff H(m) = g^{s1} s2^n mod n^2.
// The message itself is not embedded; callers keep (msg, sig) together.
struct Signature {
  Bigint s1;  // in Z_n
  Bigint s2;  // in Z*_n
};

// Message in Z_{n^2} split as value = m1 + n*m2. The permutation acts on the
// subset with m2 a unit of Z*_n.
struct WideMessage {
  Bigint m1;
  Bigint m2;

  static WideMessage from_value(const Bigint& value, const Modulus& mod);
  Bigint value(const Modulus& mod) const { return m1 + mod.n * m2; }
};

// Deterministic hash onto Z*_{n^2}: SHAKE256(label || be32(counter) || msg)
// squeezed to ceil((2*bitlen(n) + 64)/8) bytes, read big-endian, reduced
// mod n^2; the counter starts at 0 and increments until the result is a unit
// >= 2. Pinned byte for byte so signatures interoperate.
Bigint hash_to_group(std::string_view msg, const Modulus& mod);

Signature sign(const paillier::SecretKey& sk, std::string_view msg);
bool verify(const paillier::PublicKey& pk, std::string_view msg, const Signature& sig);

// Digest-level entry points (the hash already mapped into Z*_{n^2}).
Signature sign_digest(const paillier::SecretKey& sk, const Bigint& digest);
bool verify_digest(const paillier::PublicKey& pk, const Bigint& digest, const Signature& sig);

// c = g^{m1} m2^n mod n^2; bijective on the permutable domain.
// Throws message_not_permutable when gcd(m2, n) != 1 (including m2 = 0).
Ciphertext forward(const paillier::PublicKey& pk, const WideMessage& m);

// Unique preimage of c under forward.
WideMessage inverse(const paillier::SecretKey& sk, const Ciphertext& c);

}  // namespace residua::owtp
