#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessinkit/caps.hpp"
#include "dessinkit/free_word.hpp"
#include "dessinkit/perm.hpp"
#include "dessinkit/poly.hpp"

namespace dessinkit {

// The action of omega and y on the edge set E around the central white vertex, as derived
// for the conjugates D_k. Points 1..point_count stand for A^(Y^0) .. A^(Y^(N-1)) with A = 1.
struct LocalModel {
  std::string family;  // "sec31" or "sec32"
  unsigned k = 1;
  bool j_variant = false;
  std::size_t point_count = 0;
  Point a = 1, b = 0, c = 0, d = 0;  // the edges A, B, C, D (C, D unused by j_variant T)
  Permutation y;                     // (1, 2, ..., N)
  Permutation s;                     // (1,2)(3,4)...(N-1,N)
  Permutation t;                     // conjugating involution
  Permutation omega;                 // t * s * t
};

// 24 edges, T_k = (1,13)(2k,2k+12). OutOfRange unless 1 <= k <= 6.
LocalModel model_sec31(unsigned k);

// 8p edges, A = 1, B = 2k, C = 4p+1, D = 4p+2k; T = (A,C)(B,D), or (B,D) for the j variant.
// OutOfRange unless p is an odd prime and 1 <= k <= 2p.
LocalModel model_sec32(unsigned p, unsigned k, bool j_variant);

bool commutes_with_y2(const LocalModel& model);

struct EdgeTrace {
  Point start = 0;
  Point omega = 0;           // start^omega
  Point omega_then_y2 = 0;   // start^(omega y^2)
  Point y2 = 0;              // start^(y^2)
  Point y2_then_omega = 0;   // start^(y^2 omega)
  bool agrees() const { return omega_then_y2 == y2_then_omega; }
};

EdgeTrace trace_edge(const LocalModel& model, Point start);
// The edge whose trace exhibits non-commutation: B for k = 2 or the j variant, A otherwise.
Point witness_edge(const LocalModel& model);

struct Sec31Word {
  FreeWord omega;  // x^n y^-1 x^(m-n) y x^n
  // False when m = 1 or m divides n, a case whose word is not written out.
  bool displayed_case = true;
};

// NotCoprime or OutOfRange for invalid (m, n).
Sec31Word build_omega_sec31(const Integer& m, const Integer& n);

// x^d1 y^d2 ... y^d(t-1) x^(2 dt) y^d(t-1) ... y^d2 x^d1. BadShape unless t = |d| is odd
// and every d_i >= 1.
FreeWord build_mu0(const std::vector<Integer>& d, std::size_t t);

struct MuOmega {
  FreeWord mu;
  FreeWord omega;  // mu y mu^-1 x^(2s) y^-1 mu
  Integer delta;   // number of x letters in mu
};

// Blocks (x^(f_i r d_i) y x^s y) with f_i = m for odd i and n for even i, ascending to the
// centre block with exponent 2 m r d_t, descending again, then the suffix x^(m r d_1).
// BadShape for t = 1 (not defined), even t, or nonpositive entries.
MuOmega build_mu_omega(const std::vector<Integer>& d, std::size_t t, const Integer& m, const Integer& n,
                       const Integer& r, const Integer& s);

struct DeltaTildeReport {
  std::vector<Integer> terms;     // c0 d1, (c-c0) d2, ..., 2 c0 dt, ..., c0 d1
  std::vector<Integer> partials;  // running sums; the last one is the total
  Integer total;
  Integer modulus;                // 2^(alpha - nu)
  bool ok = false;                // no partial sum is 0 mod the modulus
};

DeltaTildeReport delta_tilde_check(const std::vector<Integer>& d, std::size_t t, const Integer& c0,
                                   const Integer& c, unsigned long alpha_minus_nu);

// beta1 = P / c with P integer, evaluated at x0 = gamma^(2p) q^2.
struct TwoAdicInstance {
  RatPoly p;
  Integer c;
  Rational x0;
};

// x0 = gamma^(2p) q^2
Rational lemma_point(unsigned p, const Rational& q, const Rational& gamma);
// 2^u / (2^v + 1)
Rational gamma_candidate(unsigned long u, unsigned long v);

struct TwoAdicReport {
  long alpha = 0;
  Integer a, b;          // x0 = (a/b) 2^alpha, a and b odd
  Integer c0;            // P(0)
  long nu = 0;           // v2(c0) + v2(c - c0)
  Integer m, n;          // m/(m+n) = beta1(x0)
  std::optional<Integer> e;  // e m = c0, e n = c - c0 mod 2^alpha
  bool e_consistent = false;
  Integer v2_num, v2_den;    // valuations of the two sides of r/(r+s)
  bool certified = false;    // v2(s) >= alpha - nu, from mod 2^(alpha-nu) arithmetic
  // Exact r, s when B_{m,n}(beta1(0)) fits under the caps.
  std::optional<Integer> r, s;
  std::optional<unsigned long> v2_s;
};

// HypothesisFailed when alpha <= nu; OutOfRange when P is not integral, c <= 0, or
// beta1(0), beta1(x0) fall outside (0,1).
TwoAdicReport two_adic_verify(const TwoAdicInstance& inst, const Caps& caps = {});

}  // namespace dessinkit
