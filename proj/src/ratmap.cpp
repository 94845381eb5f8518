#include <cctype>
#include <string>

#include "dessinkit/belyi.hpp"
#include "dessinkit/error.hpp"

namespace dessinkit {

std::string ProjPoint::to_string() const { return infinite ? "inf" : dessinkit::to_string(value); }

RatMap::RatMap(RatPoly num, RatPoly den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational map with zero denominator");
  if (num.is_zero()) {
    num_ = RatPoly{};
    den_ = RatPoly::constant(1);
    return;
  }
  const RatPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
  }
  const Rational scale = Rational(1) / den.leading();
  num *= scale;
  den *= scale;
  num_ = std::move(num);
  den_ = std::move(den);
}

long RatMap::degree() const noexcept {
  return std::max(std::max(num_.degree(), den_.degree()), 0L);
}

RatPoly RatMap::wronskian() const { return num_.derivative() * den_ - num_ * den_.derivative(); }

RatMap RatMap::compose(const RatMap& inner) const {
  // Homogenize: f(g) = sum N_i G^i H^(d-i) / sum D_i G^i H^(d-i) with g = G/H, d = deg f.
  const long d = degree();
  const RatPoly& g = inner.numerator();
  const RatPoly& h = inner.denominator();
  std::vector<RatPoly> gpow{RatPoly::constant(1)};
  std::vector<RatPoly> hpow{RatPoly::constant(1)};
  for (long i = 1; i <= d; ++i) {
    gpow.push_back(gpow.back() * g);
    hpow.push_back(hpow.back() * h);
  }
  RatPoly num;
  RatPoly den;
  for (long i = 0; i <= d; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const RatPoly term = gpow[idx] * hpow[static_cast<std::size_t>(d - i)];
    num += term * num_.coeff(idx);
    den += term * den_.coeff(idx);
  }
  return RatMap(std::move(num), std::move(den));
}

std::string RatMap::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

struct Fraction {
  RatPoly num;
  RatPoly den;
};

Fraction mul(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }

Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
  RatPoly left = a.num * b.den;
  RatPoly right = b.num * a.den;
  return {subtract ? left - right : left + right, a.den * b.den};
}

class MapParser {
 public:
  explicit MapParser(std::string_view text) : text_(text) {}

  RatMap parse() {
    Fraction f = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (f.den.is_zero()) fail(ErrorCode::DivisionByZero, "map denominator is zero");
    return RatMap(std::move(f.num), std::move(f.den));
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SyntaxError, "at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Fraction expr() {
    Fraction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Fraction term() {
    Fraction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, unary());
      } else if (accept('/')) {
        Fraction rhs = unary();
        if (rhs.num.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in map text");
        acc = mul(acc, {rhs.den, rhs.num});
      } else {
        return acc;
      }
    }
  }

  Fraction unary() {
    if (accept('-')) {
      Fraction f = unary();
      return {-f.num, f.den};
    }
    if (accept('+')) return unary();
    return power();
  }

  Fraction power() {
    Fraction base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) error("expected an integer exponent");
    Integer e = parse_integer(text_.substr(start, pos_ - start));
    if (!e.fits_slong_p() || abs(e) > 100000) error("exponent too large");
    long k = e.get_si();
    if (k < 0) {
      if (base.num.is_zero()) fail(ErrorCode::DivisionByZero, "zero raised to a negative power");
      std::swap(base.num, base.den);
      k = -k;
    }
    const auto uk = static_cast<unsigned long>(k);
    return {pow(base.num, uk), pow(base.den, uk)};
  }

  Fraction atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Fraction inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == 'X' || c == 'x') {
      ++pos_;
      return {RatPoly::x(), RatPoly::constant(1)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') error("decimal numbers are not accepted");
      return {RatPoly::constant(Rational(parse_integer(text_.substr(start, pos_ - start)))),
              RatPoly::constant(1)};
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatMap parse_ratmap(std::string_view text) { return MapParser(text).parse(); }

ProjPoint eval_extended(const RatMap& f, const ProjPoint& v) {
  const RatPoly& n = f.numerator();
  const RatPoly& d = f.denominator();
  if (v.infinite) {
    if (n.is_zero()) return ProjPoint::finite(0);
    if (n.degree() > d.degree()) return ProjPoint::inf();
    if (n.degree() < d.degree()) return ProjPoint::finite(0);
    return ProjPoint::finite(n.leading() / d.leading());
  }
  const Rational dv = d(v.value);
  const Rational nv = n(v.value);
  if (dv == 0) {
    if (nv == 0) fail(ErrorCode::Indeterminate, "0/0 at " + to_string(v.value));
    return ProjPoint::inf();
  }
  return ProjPoint::finite(nv / dv);
}

void CritProfile::insert(const ProjPoint& v) {
  if (v.infinite) {
    includes_infinity = true;
  } else {
    finite_values.insert(v.value);
  }
}

bool CritProfile::contains(const ProjPoint& v) const {
  return v.infinite ? includes_infinity : finite_values.count(v.value) > 0;
}

bool CritProfile::finite_subset_of(const std::set<Rational>& allowed) const {
  for (const auto& v : finite_values) {
    if (!allowed.count(v)) return false;
  }
  return true;
}

std::string CritProfile::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& v : finite_values) {
    if (!first) out += ", ";
    out += dessinkit::to_string(v);
    first = false;
  }
  if (includes_infinity) out += first ? "inf" : ", inf";
  return out + "}";
}

namespace {

// Ramification index at infinity of a nonconstant reduced map.
long ramification_at_infinity(const RatMap& f) {
  const RatPoly& n = f.numerator();
  const RatPoly& d = f.denominator();
  if (n.degree() != d.degree()) return std::abs(n.degree() - d.degree());
  const RatPoly diff = n - d * (n.leading() / d.leading());
  return n.degree() - diff.degree();
}

}  // namespace

CritProfile finite_critical_values(const RatMap& f) {
  if (f.degree() == 0) fail(ErrorCode::OutOfRange, "a constant map has no critical profile");
  CritProfile out;
  const RatPoly w = f.wronskian();
  if (w.degree() > 0) {
    const auto roots = rational_roots(w);
    RatPoly cofactor = squarefree_part(w);
    for (const auto& r : roots) cofactor = divmod(cofactor, RatPoly::linear_factor(r)).quotient;
    if (cofactor.degree() > 0) {
      fail(ErrorCode::IrrationalCriticalPoints,
           "critical points include the roots of " + cofactor.monic().to_string());
    }
    for (const auto& r : roots) out.insert(eval_extended(f, ProjPoint::finite(r)));
  }
  if (ramification_at_infinity(f) >= 2) out.insert(eval_extended(f, ProjPoint::inf()));
  return out;
}

CritProfile propagate_crit(const CritProfile& profile, const RatMap& f) {
  CritProfile out = finite_critical_values(f);
  for (const auto& v : profile.finite_values) out.insert(eval_extended(f, ProjPoint::finite(v)));
  if (profile.includes_infinity) out.insert(eval_extended(f, ProjPoint::inf()));
  return out;
}

}  // namespace dessinkit
