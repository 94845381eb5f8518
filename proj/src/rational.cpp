#include "dessinkit/rational.hpp"

#include <cctype>

#include "dessinkit/error.hpp"

namespace dessinkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    fail(ErrorCode::SyntaxError, "not an integer: '" + std::string(text) + "'");
  }
  Integer out(std::string(body), 10);
  return negative ? Integer(-out) : out;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    fail(ErrorCode::SyntaxError, "bad denominator in '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

unsigned long v2(const Integer& value) {
  if (value == 0) fail(ErrorCode::OutOfRange, "v2 of zero");
  return mpz_scan1(value.get_mpz_t(), 0);
}

long v2(const Rational& value) {
  return static_cast<long>(v2(value.get_num())) - static_cast<long>(v2(value.get_den()));
}

std::optional<Integer> exact_root(const Integer& value, unsigned long k) {
  if (value < 0 || k == 0) return std::nullopt;
  Integer root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0) return root;
  return std::nullopt;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational out(pow(base.get_num(), exp), pow(base.get_den(), exp));
  return out;
}

Integer mod_pow2(const Integer& value, unsigned long bits) {
  Integer out;
  mpz_fdiv_r_2exp(out.get_mpz_t(), value.get_mpz_t(), bits);
  return out;
}

}  // namespace dessinkit
