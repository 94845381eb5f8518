#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dessinkit/caps.hpp"
#include "dessinkit/poly.hpp"
#include "dessinkit/rational.hpp"

namespace dessinkit {

// A point of the projective line over Q.
struct ProjPoint {
  bool infinite = false;
  Rational value;  // meaningful only when finite

  static ProjPoint inf() { return {true, Rational(0)}; }
  static ProjPoint finite(const Rational& v) { return {false, v}; }
  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// N/D with gcd(N, D) = 1 and D monic.
class RatMap {
 public:
  RatMap() : RatMap(RatPoly::x(), RatPoly::constant(1)) {}
  // Throws DivisionByZero when den is zero.
  RatMap(RatPoly num, RatPoly den);
  static RatMap polynomial(RatPoly p) { return RatMap(std::move(p), RatPoly::constant(1)); }
  static RatMap identity() { return {}; }

  const RatPoly& numerator() const noexcept { return num_; }
  const RatPoly& denominator() const noexcept { return den_; }
  // max(deg N, deg D); 0 for constants.
  long degree() const noexcept;
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  // N'D - ND', whose roots are the finite critical points.
  RatPoly wronskian() const;
  // this(inner(X))
  RatMap compose(const RatMap& inner) const;
  std::string to_string() const;

  friend bool operator==(const RatMap&, const RatMap&) = default;

 private:
  RatPoly num_;
  RatPoly den_;
};

// Parses e.g. "(X+27)^3 / (243*(X-9)^2)": + - * / ^ with integer exponents, parentheses,
// integer literals and the variable X (or x). No floating point.
RatMap parse_ratmap(std::string_view text);

// Poles go to infinity; f(inf) follows from the degrees and leading coefficients.
ProjPoint eval_extended(const RatMap& f, const ProjPoint& v);

// Critical values, with infinity tracked as a flag rather than a member.
struct CritProfile {
  std::set<Rational> finite_values;
  bool includes_infinity = false;

  void insert(const ProjPoint& v);
  bool contains(const ProjPoint& v) const;
  // Finite values all lie in `allowed` (infinity ignored).
  bool finite_subset_of(const std::set<Rational>& allowed) const;
  // "{0, 1, inf}"
  std::string to_string() const;
  friend bool operator==(const CritProfile&, const CritProfile&) = default;
};

// Throws IrrationalCriticalPoints when the Wronskian has a factor without rational roots,
// OutOfRange for constant maps.
CritProfile finite_critical_values(const RatMap& f);

// Crit(f) united with f(profile).
CritProfile propagate_crit(const CritProfile& profile, const RatMap& f);

struct BmnParams {
  Integer m;
  Integer n;
  friend bool operator==(const BmnParams&, const BmnParams&) = default;
};

// The coprime (m, n) with m/(m+n) = v. OutOfRange unless 0 < v < 1.
BmnParams pair_from_ratio(const Rational& v);

// (m+n)^(m+n)/(m^m n^n) X^m (1-X)^n as an explicit polynomial map. NotCoprime, OutOfRange,
// or SizeGuard when m+n exceeds caps.max_expand_degree.
RatMap bmn(const BmnParams& p, const Caps& caps = {});

// One step of a composition chain: an explicit map, or B_{m,n} kept symbolic so huge
// parameters never get expanded.
class ChainStage {
 public:
  explicit ChainStage(RatMap map) : rep_(std::move(map)) {}
  // Validates coprimality and positivity.
  static ChainStage belyi(BmnParams p);

  bool is_bmn() const noexcept { return std::holds_alternative<BmnParams>(rep_); }
  const RatMap& map() const { return std::get<RatMap>(rep_); }
  const BmnParams& params() const { return std::get<BmnParams>(rep_); }
  Integer degree() const;

  // Exact value. For B_{m,n} the points 0, 1 and m/(m+n) are free; elsewhere SizeGuard
  // applies to m+n and to the size of the result.
  ProjPoint eval(const ProjPoint& v, const Caps& caps = {}) const;
  // Sign of the derivative at a finite non-pole point.
  int derivative_sign(const Rational& v) const;
  CritProfile critical_profile() const;
  RatMap expand(const Caps& caps = {}) const;
  std::string to_string() const;

 private:
  std::variant<RatMap, BmnParams> rep_;
};

// Stages apply left to right: stages[0] first.
struct BelyiChain {
  std::vector<ChainStage> stages;
  CritProfile input_profile;
  CritProfile current_profile;

  ProjPoint eval(const ProjPoint& v, const Caps& caps = {}) const;
  // Chain rule: product of the stage derivative signs along the orbit of v.
  int derivative_sign(const Rational& v, const Caps& caps = {}) const;
  // Single explicit map; SizeGuard when the product of degrees exceeds max_expand_degree.
  RatMap expand(const Caps& caps = {}) const;
};

// An empty chain whose current profile is `input`.
BelyiChain chain_start(CritProfile input = {});
BelyiChain chain_compose(BelyiChain chain, ChainStage stage, const Caps& caps = {});
BelyiChain chain_compose(BelyiChain chain, const RatMap& f, const Caps& caps = {});

struct BelyiReduction {
  BelyiChain chain;
  Rational alpha;
  Rational a0;
  // Distinct images F(E) before the auxiliary point is added, ascending.
  std::vector<Rational> rescaled;
  // Points that collided under the quadratic rescale.
  bool merged_duplicates = false;
};

// A polynomial chain P with P(E) = {0}, finite critical values in {0, 1}, 0 < P(0) < 1
// and P'(0) > 0. Points must be nonzero; the empty set yields (2X+1)/4.
BelyiReduction belyi_reduce(const std::vector<Rational>& points, const Caps& caps = {});

struct ReductionCheck {
  bool points_to_zero = false;
  bool profile_in_01 = false;
  bool value_at_zero_in_01 = false;
  bool derivative_positive = false;
  CritProfile profile;
  ProjPoint value_at_zero;
  bool ok() const { return points_to_zero && profile_in_01 && value_at_zero_in_01 && derivative_positive; }
};

// Checks the four postconditions on the chain alone, recomputing critical values stage by
// stage from scratch.
ReductionCheck verify_reduction(const BelyiChain& chain, const std::vector<Rational>& points,
                                const Caps& caps = {});

}  // namespace dessinkit
