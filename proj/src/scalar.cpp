#include "ptrg/scalar.hpp"

#include <cctype>

namespace ptrg {

std::optional<Rational> sqrt_rational(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

std::optional<ExactScalar> sqrt_exact(const ExactScalar& x) {
  if (!x.is_real()) return std::nullopt;
  if (x.re >= 0) {
    auto s = sqrt_rational(x.re);
    if (!s) return std::nullopt;
    return ExactScalar(*s);
  }
  auto s = sqrt_rational(Rational(-x.re));
  if (!s) return std::nullopt;
  return ExactScalar(Rational(0), *s);  // principal branch, +i sqrt|x|
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      Rational r(text, 10);
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  // decimal form: sign, digits, optional fraction part
  std::string digits;
  mpz_class den = 1;
  bool seen_dot = false, seen_digit = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') digits.push_back('-');
    ++pos;
  }
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) den *= 10;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  try {
    Rational r(mpz_class(digits, 10), den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string to_string(const ExactScalar& x) {
  if (x.is_real()) return to_string(x.re);
  std::string s = to_string(x.re);
  s += (x.im >= 0) ? "+" : "-";
  s += to_string(Rational(abs(x.im)));
  s += "i";
  return s;
}

}  // namespace ptrg
