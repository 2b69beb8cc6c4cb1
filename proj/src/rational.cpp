#include "hadamono/rational.hpp"

#include <cctype>

#include "hadamono/errors.hpp"

namespace hadamono {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw ValidationError("bad rational: '" + text + "'");
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ValidationError("bad rational: '" + text + "'");
  BigInt d(den);
  if (d == 0) throw ValidationError("bad rational (zero denominator): '" + text + "'");
  return make_rational(BigInt(num), d);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace hadamono
