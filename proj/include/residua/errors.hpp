#pragma once

#include <stdexcept>
#include <string>

namespace residua {

// Domain error kinds. The CLI maps these onto its exit-code table.
enum class Errc {
  not_congruent_one,      // L-function input is not of the form 1 + kn
  not_invertible,         // gcd(a, m) != 1
  too_large,              // oracle-scale operation invoked beyond its bounds
  plaintext_out_of_range, // m outside Z_n
  pad_not_unit,           // r outside Z*_n
  scheme_mismatch,        // ciphertext/key produced by a different scheme
  ciphertext_not_unit,    // ciphertext value outside Z*_{n^2}
  message_not_permutable, // OWTP input with gcd(m2, n) != 1
  wrong_mode,             // BCP operation requires the other setup mode
  bad_public_exponent,    // gcd(e, phi(n)) != 1 or e >= n
  invalid_modulus,        // modulus violates its invariants (e.g. gcd(n, lambda) != 1)
  ballot_overflow,        // tally could exceed the plaintext space
  bad_argument,           // precondition violated
  parse_error,            // malformed key/ciphertext/signature file
  io_error,               // filesystem failure
  internal_error,         // bounded-retry exhaustion and similar
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_congruent_one: return "NotCongruentOne";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::too_large: return "TooLarge";
    case Errc::plaintext_out_of_range: return "PlaintextOutOfRange";
    case Errc::pad_not_unit: return "PadNotUnit";
    case Errc::scheme_mismatch: return "SchemeMismatch";
    case Errc::ciphertext_not_unit: return "CiphertextNotUnit";
    case Errc::message_not_permutable: return "MessageNotPermutable";
    case Errc::wrong_mode: return "WrongMode";
    case Errc::bad_public_exponent: return "BadPublicExponent";
    case Errc::invalid_modulus: return "InvalidModulus";
    case Errc::ballot_overflow: return "BallotOverflow";
    case Errc::bad_argument: return "BadArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace residua
