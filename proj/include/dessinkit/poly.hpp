#pragma once

#include <string>
#include <vector>

#include "dessinkit/rational.hpp"

namespace dessinkit {

// Univariate polynomial over Q, coefficients stored low to high with no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly x();
  static RatPoly monomial(const Rational& c, std::size_t k);
  // (X - root)
  static RatPoly linear_factor(const Rational& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& v) const;
  int sign_at(const Rational& v) const;
  RatPoly derivative() const;
  // this(inner(X))
  RatPoly compose(const RatPoly& inner) const;
  RatPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  std::vector<Integer> primitive_integer() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);
  RatPoly operator-() const;

  // Highest degree first, e.g. "27/4*X^2 - 27/4*X^3" prints as "-27/4*X^3 + 27/4*X^2".
  std::string to_string() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(RatPoly a, const Rational& c);
RatPoly pow(const RatPoly& p, unsigned long k);

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};
// Throws DivisionByZero for a zero divisor.
PolyDivision divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly squarefree_part(const RatPoly& p);

// Sturm chain p, p', -rem(p_{i-1}, p_i), ... of a squarefree polynomial.
std::vector<RatPoly> sturm_sequence(const RatPoly& squarefree);

// Number of distinct real roots of p in (lo, hi]. Requires lo < hi and p nonzero.
std::size_t sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi);

// Cauchy bound: every real root lies in [-bound, bound].
Rational root_bound(const RatPoly& p);

// All distinct rational roots of p, ascending.
std::vector<Rational> rational_roots(const RatPoly& p);

// True iff f' has no root in (lo, hi] and f'(lo) > 0, f'(hi) > 0.
bool certify_increasing(const RatPoly& f, const Rational& lo, const Rational& hi);

}  // namespace dessinkit
