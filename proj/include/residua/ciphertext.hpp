#pragma once

#include <string>

#include "residua/bigint.hpp"
#include "residua/numtheory.hpp"

namespace residua {

enum class Scheme { paillier, v1, v2, v3, v4, bcp };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Element of Z*_{n^2} tagged with the scheme that produced it. The tag is
// what lets the homomorphic operations refuse to mix ciphertexts from
// different schemes.
struct Ciphertext {
  Bigint value;
  Scheme scheme = Scheme::paillier;
};

// Throws ciphertext_not_unit unless 1 <= value < n^2 with gcd(value, n^2) = 1.
inline void require_unit_ciphertext(const Ciphertext& c, const Modulus& mod) {
  if (!is_unit(c.value, mod.n_sq))
    raise(Errc::ciphertext_not_unit, "ciphertext is not a unit of Z*_{n^2}");
}

inline const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::paillier: return "paillier";
    case Scheme::v1: return "v1";
    case Scheme::v2: return "v2";
    case Scheme::v3: return "v3";
    case Scheme::v4: return "v4";
    case Scheme::bcp: return "bcp";
  }
  return "?";
}

inline Scheme scheme_from_name(const std::string& name) {
  if (name == "paillier") return Scheme::paillier;
  if (name == "v1") return Scheme::v1;
  if (name == "v2") return Scheme::v2;
  if (name == "v3") return Scheme::v3;
  if (name == "v4") return Scheme::v4;
  if (name == "bcp") return Scheme::bcp;
  raise(Errc::parse_error, "unknown scheme '" + name + "'");
}

}  // namespace residua
