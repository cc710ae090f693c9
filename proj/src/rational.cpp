#include "chipgame/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>

#include "chipgame/error.hpp"

namespace chipgame {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (slash == std::string_view::npos || !all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Domain,
                "expected an exact fraction \"p/q\", got \"" + std::string(text) + "\"");
  }
  const mpz_class p(std::string(num), 10);
  const mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::Domain, "fraction \"" + std::string(text) + "\" has zero denominator");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  // mpf with ample precision, then printf-style %.*g via gmp_snprintf.
  const mpf_class f(value, 256);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
  return buf;
}

}  // namespace chipgame
