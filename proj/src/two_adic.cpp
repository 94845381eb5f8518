#include "dessinkit/belyi.hpp"
#include "dessinkit/error.hpp"
#include "dessinkit/models.hpp"

namespace dessinkit {

Rational lemma_point(unsigned p, const Rational& q, const Rational& gamma) {
  Rational x = pow(gamma, 2UL * p) * q * q;
  x.canonicalize();
  return x;
}

Rational gamma_candidate(unsigned long u, unsigned long v) {
  Rational g(pow(Integer(2), u), pow(Integer(2), v) + 1);
  g.canonicalize();
  return g;
}

namespace {

Integer odd_part(const Integer& v) {
  Integer out;
  mpz_tdiv_q_2exp(out.get_mpz_t(), v.get_mpz_t(), dessinkit::v2(v));
  return out;
}

// base^exp mod 2^bits, exp >= 0
Integer powmod2(const Integer& base, const Integer& exp, const Integer& modulus) {
  Integer out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

Integer inverse_mod(const Integer& v, const Integer& modulus) {
  Integer out;
  if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    fail(ErrorCode::Internal, to_string(v) + " has no inverse mod " + to_string(modulus));
  }
  return out;
}

}  // namespace

TwoAdicReport two_adic_verify(const TwoAdicInstance& inst, const Caps& caps) {
  for (const auto& coeff : inst.p.coeffs()) {
    if (coeff.get_den() != 1) fail(ErrorCode::OutOfRange, "P must have integer coefficients");
  }
  if (inst.c <= 0) fail(ErrorCode::OutOfRange, "c must be positive");
  if (inst.x0 <= 0) fail(ErrorCode::OutOfRange, "gamma^(2p) q^2 must be positive");

  TwoAdicReport r;
  r.c0 = inst.p(Rational(0)).get_num();
  if (!(r.c0 > 0 && r.c0 < inst.c)) {
    fail(ErrorCode::OutOfRange, "beta1(0) = " + to_string(make_rational(r.c0, inst.c)) + " is not in (0,1)");
  }
  const Integer rest = inst.c - r.c0;
  r.alpha = v2(inst.x0);
  r.nu = static_cast<long>(v2(r.c0) + v2(rest));
  Rational scaled = inst.x0;
  if (r.alpha >= 0) {
    mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<unsigned long>(r.alpha));
  } else {
    mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<unsigned long>(-r.alpha));
  }
  r.a = scaled.get_num();
  r.b = scaled.get_den();
  if (r.alpha <= r.nu) {
    fail(ErrorCode::HypothesisFailed,
         "alpha = " + std::to_string(r.alpha) + " does not exceed nu = " + std::to_string(r.nu));
  }

  Rational beta_x0 = inst.p(inst.x0) / inst.c;
  beta_x0.canonicalize();
  const BmnParams mn = pair_from_ratio(beta_x0);
  r.m = mn.m;
  r.n = mn.n;

  const unsigned long alpha = static_cast<unsigned long>(r.alpha);
  const Integer mod_alpha = pow(Integer(2), alpha);
  if (mpz_odd_p(r.m.get_mpz_t())) {
    Integer e = mod_pow2(r.c0 * inverse_mod(r.m, mod_alpha), alpha);
    r.e_consistent = mod_pow2(e * r.n - rest, alpha) == 0;
    r.e = e;
  } else {
    Integer e = mod_pow2(rest * inverse_mod(r.n, mod_alpha), alpha);
    r.e_consistent = mod_pow2(e * r.m - r.c0, alpha) == 0;
    r.e = e;
  }

  // r/(r+s) = Num/Den with Num = (m+n)^(m+n) c0^m (c-c0)^n and Den = m^m n^n c^(m+n).
  const Integer total = r.m + r.n;
  r.v2_num = total * v2(total) + r.m * v2(r.c0) + r.n * v2(rest);
  r.v2_den = r.m * v2(r.m) + r.n * v2(r.n) + total * v2(inst.c);
  // s = (Den - Num)/gcd; when the valuations agree, v2(s) = v2(odd(Den) - odd(Num)).
  const unsigned long bound = alpha - static_cast<unsigned long>(r.nu);
  if (r.v2_num == r.v2_den) {
    const Integer mod = pow(Integer(2), bound);
    const Integer num_odd = mod_pow2(powmod2(odd_part(total), total, mod) * powmod2(odd_part(r.c0), r.m, mod) *
                                         powmod2(odd_part(rest), r.n, mod),
                                     bound);
    const Integer den_odd = mod_pow2(powmod2(odd_part(r.m), r.m, mod) * powmod2(odd_part(r.n), r.n, mod) *
                                         powmod2(odd_part(inst.c), total, mod),
                                     bound);
    r.certified = num_odd == den_odd;
  }

  if (total <= caps.max_stage_size) {
    try {
      const ProjPoint v = ChainStage::belyi(mn).eval(ProjPoint::finite(make_rational(r.c0, inst.c)), caps);
      if (!v.infinite && v.value > 0 && v.value < 1) {
        const BmnParams rs = pair_from_ratio(v.value);
        r.r = rs.m;
        r.s = rs.n;
        r.v2_s = v2(rs.n);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeGuard) throw;
    }
  }
  return r;
}

}  // namespace dessinkit
