#pragma once

// Arbitrary-precision integers and rationals.
//
// Everything in tropint is exact. Integer and Rational are the GMP C++
// wrappers; mpq_class is always kept in lowest terms with a positive
// denominator, so structural equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropint {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error type for all contract violations raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational literal");
  for (char ch : s) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw Error("not an exact rational literal: \"" + s + "\"");
    }
  }
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    if (digits.empty() || digits == "-") throw Error("malformed rational literal: \"" + s + "\"");
    for (std::size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw Error("malformed rational literal: \"" + s + "\"");
    }
    return Integer(digits, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in \"" + s + "\"");
  return make_rational(num, den);
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tropint
