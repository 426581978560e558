#include "residua/rng.hpp"

#include <vector>

namespace residua {

Rng Rng::from_entropy() {
  std::random_device rd;
  std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  return Rng(seed);
}

Bigint Rng::bits(unsigned nbits) {
  if (nbits == 0) return 0;
  unsigned words = (nbits + 63) / 64;
  std::vector<unsigned char> buf(words * 8);
  for (unsigned i = 0; i < words; ++i) {
    std::uint64_t w = next_u64();
    for (unsigned b = 0; b < 8; ++b)
      buf[i * 8 + b] = static_cast<unsigned char>(w >> (56 - 8 * b));
  }
  Bigint x = from_bytes_be(buf.data(), buf.size());
  // keep only the low nbits
  mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), nbits);
  return x;
}

Bigint Rng::below(const Bigint& bound) {
  if (bound < 1) raise(Errc::bad_argument, "below() needs bound >= 1");
  if (bound == 1) return 0;
  unsigned nbits = bit_length(Bigint(bound - 1));
  for (;;) {
    Bigint x = bits(nbits);
    if (x < bound) return x;
  }
}

}  // namespace residua
