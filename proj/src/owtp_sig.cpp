#include "residua/owtp_sig.hpp"

#include <openssl/evp.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace residua::owtp {

namespace {

constexpr std::string_view kHashLabel = "residua.hash-to-group.v1";

std::vector<unsigned char> shake256(std::string_view label, std::uint32_t counter,
                                    std::string_view msg, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1)
    raise(Errc::internal_error, "SHAKE256 init failed");
  unsigned char ctr_be[4] = {static_cast<unsigned char>(counter >> 24),
                             static_cast<unsigned char>(counter >> 16),
                             static_cast<unsigned char>(counter >> 8),
                             static_cast<unsigned char>(counter)};
  if (EVP_DigestUpdate(ctx.get(), label.data(), label.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), ctr_be, sizeof ctr_be) != 1 ||
      EVP_DigestUpdate(ctx.get(), msg.data(), msg.size()) != 1)
    raise(Errc::internal_error, "SHAKE256 update failed");
  std::vector<unsigned char> out(out_len);
  if (EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1)
    raise(Errc::internal_error, "SHAKE256 squeeze failed");
  return out;
}

}  // namespace

Bigint hash_to_group(std::string_view msg, const Modulus& mod) {
  std::size_t out_len = (2 * static_cast<std::size_t>(mod.bit_length) + 64 + 7) / 8;
  for (std::uint64_t counter = 0; counter <= 0xffffffffULL; ++counter) {
    std::vector<unsigned char> bytes =
        shake256(kHashLabel, static_cast<std::uint32_t>(counter), msg, out_len);
    Bigint h = from_bytes_be(bytes.data(), bytes.size()) % mod.n_sq;
    if (h >= 2 && gcd(h, mod.n_sq) == 1) return h;
  }
  raise(Errc::internal_error, "hash counter exhausted");
}

WideMessage WideMessage::from_value(const Bigint& value, const Modulus& mod) {
  if (value < 0 || value >= mod.n_sq)
    raise(Errc::bad_argument, "wide message must lie in Z_{n^2}");
  WideMessage m;
  m.m1 = value % mod.n;
  m.m2 = value / mod.n;
  return m;
}

Signature sign_digest(const paillier::SecretKey& sk, const Bigint& digest) {
  const Modulus& mod = sk.fmod.mod;
  if (!is_unit(digest, mod.n_sq)) raise(Errc::bad_argument, "digest must be a unit of Z*_{n^2}");
  Signature sig;
  // s1 = rho * L(H^lambda mod n^2) mod n
  sig.s1 = sk.rho * l_function(mod_pow(digest, sk.fmod.lambda, mod.n_sq), mod) % mod.n;
  // s2 = (H g^{-s1})^s mod n
  Bigint base = digest * mod_pow(sk.pk.g, Bigint(-sig.s1), mod.n_sq) % mod.n_sq % mod.n;
  sig.s2 = mod_pow(base, sk.s, mod.n);
  return sig;
}

Signature sign(const paillier::SecretKey& sk, std::string_view msg) {
  return sign_digest(sk, hash_to_group(msg, sk.fmod.mod));
}

bool verify_digest(const paillier::PublicKey& pk, const Bigint& digest, const Signature& sig) {
  // malformed component ranges mean "invalid signature", not an error
  if (sig.s1 < 0 || sig.s1 >= pk.mod.n) return false;
  if (!is_unit(sig.s2, pk.mod.n)) return false;
  Bigint lhs = mod_pow(pk.g, sig.s1, pk.mod.n_sq) * mod_pow(sig.s2, pk.mod.n, pk.mod.n_sq) %
               pk.mod.n_sq;
  Bigint h = digest % pk.mod.n_sq;
  if (h < 0) h += pk.mod.n_sq;
  return lhs == h;
}

bool verify(const paillier::PublicKey& pk, std::string_view msg, const Signature& sig) {
  return verify_digest(pk, hash_to_group(msg, pk.mod), sig);
}

Ciphertext forward(const paillier::PublicKey& pk, const WideMessage& m) {
  if (m.m1 < 0 || m.m1 >= pk.mod.n || m.m2 < 0 || m.m2 >= pk.mod.n)
    raise(Errc::bad_argument, "wide message components must lie in Z_n");
  if (!is_unit(m.m2, pk.mod.n))
    raise(Errc::message_not_permutable, "gcd(m2, n) != 1; outside the permuted domain");
  Bigint c = mod_pow(pk.g, m.m1, pk.mod.n_sq) * mod_pow(m.m2, pk.mod.n, pk.mod.n_sq) % pk.mod.n_sq;
  return Ciphertext{c, Scheme::paillier};
}

WideMessage inverse(const paillier::SecretKey& sk, const Ciphertext& c) {
  require_unit_ciphertext(c, sk.fmod.mod);
  const Modulus& mod = sk.fmod.mod;
  WideMessage m;
  m.m1 = sk.rho * l_function(mod_pow(c.value, sk.fmod.lambda, mod.n_sq), mod) % mod.n;
  Bigint base = c.value * mod_pow(sk.pk.g, Bigint(-m.m1), mod.n_sq) % mod.n_sq % mod.n;
  m.m2 = mod_pow(base, sk.s, mod.n);
  return m;
}

}  // namespace residua::owtp
