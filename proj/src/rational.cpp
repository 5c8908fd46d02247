#include "ncv/rational.hpp"

#include <cctype>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  if (exponent < 0) {
    if (num == 0) throw InvalidInput("zero raised to a negative power");
    std::swap(num, den);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational ratio(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ncv
