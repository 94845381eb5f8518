#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dessinkit/parallel.hpp"
#include "dessinkit/rational.hpp"

namespace dessinkit {

// Q(zeta_p, t) with t^p = q, as a p(p-1)-dimensional Q-algebra with basis zeta^i t^j,
// 0 <= i < p-1, 0 <= j < p.
class TowerField {
 public:
  // p an odd prime (at most kMaxPrime), q > 0 not a p-th power in Q.
  // Throws OutOfRange or IsPthPower.
  TowerField(unsigned p, Rational q);

  static constexpr unsigned kMaxPrime = 23;

  unsigned p() const noexcept { return spec_->p; }
  const Rational& q() const noexcept { return spec_->q; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(p()) * (p() - 1); }
  // Coordinate slot of zeta^i t^j.
  std::size_t index(unsigned i, unsigned j) const noexcept { return static_cast<std::size_t>(j) * (p() - 1) + i; }

  friend bool operator==(const TowerField& a, const TowerField& b) {
    return a.spec_ == b.spec_ || (a.p() == b.p() && a.q() == b.q());
  }

 private:
  struct Spec {
    unsigned p;
    Rational q;
  };
  std::shared_ptr<const Spec> spec_;
};

class TowerElement {
 public:
  TowerElement(TowerField field, std::vector<Rational> coords);
  static TowerElement zero(const TowerField& f);
  static TowerElement from_rational(const TowerField& f, const Rational& v);
  static TowerElement zeta(const TowerField& f);
  static TowerElement root(const TowerField& f);  // t, the p-th root of q
  // zeta^a t^b for any integers a, b >= 0 (reduced).
  static TowerElement monomial(const TowerField& f, const Rational& c, unsigned long a, unsigned long b);

  const TowerField& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const;
  // True when all coordinates except the constant one vanish.
  bool is_rational() const;

  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator-() const;
  TowerElement operator*(const TowerElement& o) const;
  TowerElement operator*(const Rational& c) const;
  // DivisionByZero for zero; Internal if a zero divisor shows up.
  TowerElement inverse() const;
  TowerElement operator/(const TowerElement& o) const { return *this * o.inverse(); }
  TowerElement pow(long long k) const;

  // "1/2 + z - 3*z^2*t"; z stands for zeta, t for the p-th root of q.
  std::string to_string() const;

  // FieldMismatch when the fields differ.
  friend bool operator==(const TowerElement& a, const TowerElement& b);

 private:
  void check_same(const TowerElement& o) const;
  TowerField field_;
  std::vector<Rational> coords_;
};

// The automorphism zeta -> zeta^u, t -> zeta^i t.
struct GaloisElement {
  unsigned i = 0;
  unsigned u = 1;
  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
};

// a after b: (i_a + u_a i_b, u_a u_b) mod p.
GaloisElement compose(const GaloisElement& a, const GaloisElement& b, unsigned p);
// NotAUnit when u is 0 mod p.
TowerElement galois_apply(const GaloisElement& g, const TowerElement& e);
// All p(p-1) automorphisms, ordered by (u, i).
std::vector<GaloisElement> galois_group(unsigned p);
// The least primitive root modulo p.
unsigned primitive_root(unsigned p);

struct CurveTriple {
  TowerElement a;
  TowerElement b;
  TowerElement c;
};

// lambda = (c-a)/(b-a), j = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda-1)^2).
// DegenerateTriple when two points coincide.
TowerElement j_invariant_of_triple(const CurveTriple& tr);

struct ConjugateReport {
  std::vector<GaloisElement> automorphisms;
  std::vector<TowerElement> j_values;
  // Index pairs (into automorphisms) with equal j.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  // j of each conjugate triple equals the automorphism applied to j of the base triple.
  bool equivariant = true;
  bool distinct() const { return collisions.empty(); }
};

// j-invariants of the conjugates of (0, 1 - zeta, gamma t) under every automorphism.
// OutOfRange when gamma is zero.
ConjugateReport conjugate_triples_distinct(const TowerField& field, const Rational& gamma,
                                           ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace dessinkit
