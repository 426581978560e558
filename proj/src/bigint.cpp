#include "residua/bigint.hpp"

namespace residua {

Bigint from_hex(const std::string& text) {
  std::string digits = text;
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  if (digits.empty()) raise(Errc::parse_error, "empty integer field");
  if (digits == "0") {
    if (negative) raise(Errc::parse_error, "negative zero");
    return 0;
  }
  if (digits[0] == '0') raise(Errc::parse_error, "leading zero in '" + text + "'");
  for (char c : digits) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) raise(Errc::parse_error, "bad hex digit in '" + text + "'");
  }
  Bigint x;
  if (mpz_set_str(x.get_mpz_t(), digits.c_str(), 16) != 0)
    raise(Errc::parse_error, "unparseable integer '" + text + "'");
  return negative ? Bigint(-x) : x;
}

}  // namespace residua
