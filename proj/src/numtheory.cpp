#include "residua/numtheory.hpp"

#include <vector>

#include "residua/cost.hpp"

namespace residua {

namespace {

const std::vector<unsigned long>& primes_below_1000() {
  static const std::vector<unsigned long> table = [] {
    std::vector<unsigned long> primes;
    std::vector<bool> composite(1000, false);
    for (unsigned long i = 2; i < 1000; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j < 1000; j += i) composite[j] = true;
    }
    return primes;
  }();
  return table;
}

bool miller_rabin_witness(const Bigint& x, const Bigint& a, const Bigint& d, unsigned long s) {
  Bigint y;
  mpz_powm(y.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
  Bigint x_minus_1 = x - 1;
  if (y == 1 || y == x_minus_1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    y = y * y % x;
    if (y == x_minus_1) return false;
    if (y == 1) return true;  // nontrivial square root of 1
  }
  return true;
}

}  // namespace

Modulus Modulus::from_n(const Bigint& n) {
  if (n < 15) raise(Errc::invalid_modulus, "n must be >= 15");
  if (mpz_even_p(n.get_mpz_t())) raise(Errc::invalid_modulus, "n must be odd");
  Modulus m;
  m.n = n;
  m.n_sq = n * n;
  m.bit_length = residua::bit_length(n);
  return m;
}

FactoredModulus FactoredModulus::from_primes(const Bigint& p, const Bigint& q) {
  if (p == q) raise(Errc::invalid_modulus, "p and q must be distinct");
  if (p < 3 || q < 3 || mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t()))
    raise(Errc::invalid_modulus, "p and q must be odd primes");
  if (!is_probable_prime(p) || !is_probable_prime(q))
    raise(Errc::invalid_modulus, "p and q must be prime");
  FactoredModulus fm;
  fm.mod = Modulus::from_n(p * q);
  fm.p = p;
  fm.q = q;
  fm.lambda = lcm(p - 1, q - 1);
  fm.phi = (p - 1) * (q - 1);
  if (gcd(fm.mod.n, fm.lambda) != 1)
    raise(Errc::invalid_modulus,
          "gcd(n, lambda) != 1 for n=" + fm.mod.n.get_str() +
              " (one prime divides the other minus one); not a usable RSA modulus");
  return fm;
}

Bigint l_function(const Bigint& u, const Modulus& mod) {
  Bigint v = u % mod.n_sq;
  if (v < 0) v += mod.n_sq;
  if (v == 0) raise(Errc::not_congruent_one, "L-function input is 0 mod n^2");
  v -= 1;
  if (v % mod.n != 0) raise(Errc::not_congruent_one, "input is not of the form 1 + kn");
  return v / mod.n;
}

Bigint lcm(const Bigint& a, const Bigint& b) {
  if (a < 1 || b < 1) raise(Errc::bad_argument, "lcm needs positive operands");
  Bigint r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Bigint mod_inv(const Bigint& a, const Bigint& m) {
  if (m < 2) raise(Errc::bad_argument, "mod_inv needs m >= 2");
  cost::Meter::note_inv(m);
  Bigint r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    raise(Errc::not_invertible, "gcd(a, m) != 1");
  return r;
}

Bigint mod_pow(const Bigint& base, const Bigint& exp, const Bigint& m) {
  if (m < 1) raise(Errc::bad_argument, "mod_pow needs m >= 1");
  if (m == 1) return 0;
  Bigint b = base % m;
  if (b < 0) b += m;
  if (exp < 0) {
    b = mod_inv(b, m);
    Bigint e = -exp;
    cost::Meter::note_pow(m);
    Bigint r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  cost::Meter::note_pow(m);
  Bigint r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_probable_prime(const Bigint& x, Rng& rng, int rounds) {
  if (x < 2) return false;
  for (unsigned long p : primes_below_1000()) {
    if (x == p) return true;
    if (mpz_divisible_ui_p(x.get_mpz_t(), p)) return false;
  }
  // every composite below 1000^2 has a factor below 1000
  if (x < 1000000) return true;

  Bigint d = x - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (int i = 0; i < rounds; ++i) {
    Bigint a = 2 + rng.below(x - 3);  // a in [2, x-2]
    if (miller_rabin_witness(x, a, d, s)) return false;
  }
  return true;
}

bool is_probable_prime(const Bigint& x, int rounds) {
  // self-check variant: base choice seeded from the candidate itself
  Rng rng(0x9e3779b97f4a7c15ULL ^ mpz_get_ui(x.get_mpz_t()));
  return is_probable_prime(x, rng, rounds);
}

Bigint gen_prime(unsigned bits, Rng& rng) {
  if (bits < 8) raise(Errc::bad_argument, "gen_prime needs bits >= 8");
  for (;;) {
    Bigint c = rng.bits(bits);
    mpz_setbit(c.get_mpz_t(), bits - 1);  // exact bit length
    mpz_setbit(c.get_mpz_t(), 0);         // odd
    if (is_probable_prime(c, rng)) return c;
  }
}

Bigint sample_unit(const Bigint& m, Rng& rng) {
  if (m < 2) raise(Errc::bad_argument, "sample_unit needs m >= 2");
  for (;;) {
    Bigint r = rng.below(m);
    if (r >= 1 && gcd(r, m) == 1) return r;
  }
}

Bigint element_order(const Bigint& g, const Bigint& m, const Bigint& group_exponent,
                     std::uint64_t trial_division_bound) {
  if (gcd(g, m) != 1) raise(Errc::bad_argument, "element_order needs gcd(g, m) = 1");
  if (group_exponent < 1) raise(Errc::bad_argument, "group_exponent must be positive");
  if (mod_pow(g, group_exponent, m) != 1)
    raise(Errc::bad_argument, "group_exponent is not a multiple of the order");

  // factor the exponent: trial division, then at most one probable-prime cofactor
  std::vector<Bigint> factors;
  Bigint rest = group_exponent;
  for (std::uint64_t d = 2; d <= trial_division_bound && Bigint(d) * d <= rest; d == 2 ? d = 3 : d += 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      factors.emplace_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) rest /= static_cast<unsigned long>(d);
    }
  }
  if (rest > 1) {
    if (!is_probable_prime(rest))
      raise(Errc::too_large, "cannot factor group exponent within the trial-division bound");
    factors.push_back(rest);
  }

  Bigint order = group_exponent;
  for (const Bigint& f : factors) {
    while (order % f == 0 && mod_pow(g, order / f, m) == 1) order /= f;
  }
  return order;
}

}  // namespace residua
