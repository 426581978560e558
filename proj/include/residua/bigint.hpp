#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "residua/errors.hpp"

namespace residua {

using Bigint = mpz_class;

inline unsigned bit_length(const Bigint& x) {
  return static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

inline Bigint gcd(const Bigint& a, const Bigint& b) {
  Bigint g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// A unit is a canonical representative: already reduced into [1, m).
inline bool is_unit(const Bigint& x, const Bigint& m) {
  return x >= 1 && x < m && gcd(x, m) == 1;
}

// Lowercase hex, big-endian, no leading zeros; zero encodes as "0",
// negatives with a leading '-'. This is the wire encoding for all files.
inline std::string to_hex(const Bigint& x) {
  return x.get_str(16);
}

Bigint from_hex(const std::string& text);  // strict inverse of to_hex; throws parse_error

inline Bigint from_bytes_be(const unsigned char* data, std::size_t len) {
  Bigint x;
  mpz_import(x.get_mpz_t(), len, 1 /* most significant word first */, 1, 1, 0, data);
  return x;
}

}  // namespace residua
