#include "framecomplex/rational.hpp"

#include <cctype>

#include "framecomplex/errors.hpp"

namespace fcx {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational value(static_cast<long>(num), static_cast<long>(den));
  value.canonicalize();
  return value;
}

Rational rational_from_string(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, pos); };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw fail("expected digits in rational literal");
    return std::string(text.substr(start, pos - start));
  };
  std::string num = read_digits();
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits();
  }
  if (pos != text.size()) throw fail("trailing characters in rational literal");

  Integer denominator(den);
  if (denominator == 0) throw DomainError("rational with zero denominator");
  Rational value{Integer(num), denominator};
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace fcx
