#include <algorithm>
#include <string>

#include "dessinkit/belyi.hpp"
#include "dessinkit/error.hpp"

namespace dessinkit {

BmnParams pair_from_ratio(const Rational& v) {
  Rational r = v;
  r.canonicalize();
  if (!(r > 0 && r < 1)) fail(ErrorCode::OutOfRange, "ratio " + to_string(r) + " is not in (0,1)");
  return {r.get_num(), r.get_den() - r.get_num()};
}

namespace {

void check_params(const BmnParams& p) {
  if (p.m < 1 || p.n < 1) {
    fail(ErrorCode::OutOfRange, "B_{m,n} needs m, n >= 1, got (" + to_string(p.m) + "," + to_string(p.n) + ")");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.m.get_mpz_t(), p.n.get_mpz_t());
  if (g != 1) fail(ErrorCode::NotCoprime, "gcd(" + to_string(p.m) + "," + to_string(p.n) + ") = " + to_string(g));
}

std::string bmn_name(const BmnParams& p) { return "B_{" + to_string(p.m) + "," + to_string(p.n) + "}"; }

unsigned long small(const Integer& v) { return v.get_ui(); }

// (m+n)^(m+n) / (m^m n^n)
Rational bmn_constant(unsigned long m, unsigned long n) {
  const unsigned long s = m + n;
  Rational k(pow(Integer(s), s), pow(Integer(m), m) * pow(Integer(n), n));
  k.canonicalize();
  return k;
}

}  // namespace

RatMap bmn(const BmnParams& p, const Caps& caps) {
  check_params(p);
  const Integer total = p.m + p.n;
  if (total > caps.max_expand_degree) {
    fail(ErrorCode::SizeGuard, bmn_name(p) + " has degree " + to_string(total) + " above the expansion cap " +
                                   std::to_string(caps.max_expand_degree));
  }
  const unsigned long m = small(p.m);
  const unsigned long n = small(p.n);
  RatPoly poly = RatPoly::monomial(bmn_constant(m, n), m) * pow(RatPoly({Rational(1), Rational(-1)}), n);
  return RatMap::polynomial(std::move(poly));
}

ChainStage ChainStage::belyi(BmnParams p) {
  check_params(p);
  ChainStage s(RatMap{});
  s.rep_ = std::move(p);
  return s;
}

Integer ChainStage::degree() const {
  if (is_bmn()) return params().m + params().n;
  return Integer(map().degree());
}

ProjPoint ChainStage::eval(const ProjPoint& v, const Caps& caps) const {
  if (!is_bmn()) return eval_extended(map(), v);
  const BmnParams& p = params();
  if (v.infinite) return ProjPoint::inf();
  const Rational& x = v.value;
  if (x == 0 || x == 1) return ProjPoint::finite(0);
  const Integer total = p.m + p.n;
  if (x == make_rational(p.m, total)) return ProjPoint::finite(1);
  if (total > caps.max_stage_size) {
    fail(ErrorCode::SizeGuard, "evaluating " + bmn_name(p) + " with m+n above " + std::to_string(caps.max_stage_size));
  }
  const unsigned long m = small(p.m);
  const unsigned long n = small(p.n);
  const Integer a = x.get_num();
  const Integer b = x.get_den();
  const Integer c = b - a;
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2) + mpz_sizeinbase(b.get_mpz_t(), 2) +
                           mpz_sizeinbase(total.get_mpz_t(), 2);
  if (static_cast<double>(m + n) * static_cast<double>(bits) > static_cast<double>(caps.max_value_bits)) {
    fail(ErrorCode::SizeGuard, "value of " + bmn_name(p) + " at " + dessinkit::to_string(x) + " would exceed " +
                                   std::to_string(caps.max_value_bits) + " bits");
  }
  // K x^m (1-x)^n with x = a/b
  Integer num = pow(Integer(m + n), m + n) * pow(a, m) * pow(c, n);
  Integer den = pow(Integer(m), m) * pow(Integer(n), n) * pow(b, m + n);
  Rational out(num, den);
  out.canonicalize();
  return ProjPoint::finite(out);
}

int ChainStage::derivative_sign(const Rational& v) const {
  if (!is_bmn()) {
    const RatMap& f = map();
    if (f.denominator()(v) == 0) fail(ErrorCode::OutOfRange, "derivative sign at a pole");
    return f.wronskian().sign_at(v);
  }
  // K x^(m-1) (1-x)^(n-1) (m - (m+n) x) with K > 0
  const BmnParams& p = params();
  auto power_sign = [](int s, const Integer& e) { return (s < 0 && mpz_odd_p(e.get_mpz_t())) ? -1 : (s == 0 && e > 0 ? 0 : 1); };
  const int s1 = power_sign(sgn(v), p.m - 1);
  const int s2 = power_sign(sgn(Rational(1) - v), p.n - 1);
  const int s3 = sgn(Rational(p.m) - Rational(p.m + p.n) * v);
  return s1 * s2 * s3;
}

CritProfile ChainStage::critical_profile() const {
  if (!is_bmn()) return finite_critical_values(map());
  // Critical points 0 (m > 1), 1 (n > 1), m/(m+n) and infinity.
  CritProfile out;
  if (params().m > 1 || params().n > 1) out.finite_values.insert(Rational(0));
  out.finite_values.insert(Rational(1));
  out.includes_infinity = true;
  return out;
}

RatMap ChainStage::expand(const Caps& caps) const { return is_bmn() ? bmn(params(), caps) : map(); }

std::string ChainStage::to_string() const { return is_bmn() ? bmn_name(params()) : map().to_string(); }

ProjPoint BelyiChain::eval(const ProjPoint& v, const Caps& caps) const {
  ProjPoint cur = v;
  for (const auto& s : stages) cur = s.eval(cur, caps);
  return cur;
}

int BelyiChain::derivative_sign(const Rational& v, const Caps& caps) const {
  ProjPoint cur = ProjPoint::finite(v);
  int sign = 1;
  for (const auto& s : stages) {
    if (cur.infinite) fail(ErrorCode::OutOfRange, "chain passes through infinity");
    sign *= s.derivative_sign(cur.value);
    if (sign == 0) return 0;
    cur = s.eval(cur, caps);
  }
  return sign;
}

RatMap BelyiChain::expand(const Caps& caps) const {
  Integer total = 1;
  for (const auto& s : stages) total *= s.degree();
  if (total > caps.max_expand_degree) {
    fail(ErrorCode::SizeGuard, "expanded chain would have degree " + to_string(total));
  }
  RatMap acc = RatMap::identity();
  for (const auto& s : stages) acc = s.expand(caps).compose(acc);
  return acc;
}

BelyiChain chain_start(CritProfile input) {
  BelyiChain c;
  c.current_profile = input;
  c.input_profile = std::move(input);
  return c;
}

BelyiChain chain_compose(BelyiChain chain, ChainStage stage, const Caps& caps) {
  CritProfile next = stage.critical_profile();
  for (const auto& v : chain.current_profile.finite_values) next.insert(stage.eval(ProjPoint::finite(v), caps));
  if (chain.current_profile.includes_infinity) next.insert(stage.eval(ProjPoint::inf(), caps));
  chain.current_profile = std::move(next);
  chain.stages.push_back(std::move(stage));
  return chain;
}

BelyiChain chain_compose(BelyiChain chain, const RatMap& f, const Caps& caps) {
  return chain_compose(std::move(chain), ChainStage(f), caps);
}

BelyiReduction belyi_reduce(const std::vector<Rational>& input, const Caps& caps) {
  std::set<Rational> points;
  for (Rational a : input) {
    a.canonicalize();
    if (a == 0) fail(ErrorCode::OutOfRange, "belyi_reduce points must be nonzero");
    points.insert(a);
  }
  BelyiReduction out;
  out.chain = chain_start();
  if (points.empty()) {
    out.chain = chain_compose(std::move(out.chain), RatMap::polynomial(RatPoly({Rational(1, 4), Rational(1, 2)})), caps);
    return out;
  }

  // alpha below every negative point's half keeps F_alpha(0) = alpha^2 strictly smallest.
  const Rational& least = *points.begin();
  out.alpha = least < 0 ? Rational(*std::prev(points.lower_bound(Rational(0))) / 4) : Rational(-1);
  out.alpha.canonicalize();
  Rational top = 0;
  for (const auto& a : points) top = std::max(top, Rational((a - out.alpha) * (a - out.alpha)));
  const RatPoly shifted({-out.alpha, Rational(1)});
  const RatPoly f_poly = shifted * shifted * Rational(Rational(1) / top);
  out.chain = chain_compose(std::move(out.chain), RatMap::polynomial(f_poly), caps);

  std::set<Rational> images;
  for (const auto& a : points) images.insert(f_poly(a));
  out.merged_duplicates = images.size() < points.size();
  out.rescaled.assign(images.begin(), images.end());

  const Rational base = f_poly(Rational(0));
  out.a0 = (base + out.rescaled.front()) / 2;
  out.a0.canonicalize();

  std::vector<Rational> pts{out.a0};
  pts.insert(pts.end(), out.rescaled.begin(), out.rescaled.end());
  Rational tracked = base;
  while (pts.size() > 1) {
    const Rational ratio = pts[pts.size() - 2];
    const BmnParams p = pair_from_ratio(ratio);
    if (p.m + p.n > caps.max_stage_size) {
      fail(ErrorCode::SizeGuard, "stage ratio " + to_string(ratio) + " needs m+n = " + to_string(Integer(p.m + p.n)) +
                                     " above " + std::to_string(caps.max_stage_size));
    }
    ChainStage stage = ChainStage::belyi(p);
    std::vector<Rational> next;
    next.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) next.push_back(stage.eval(ProjPoint::finite(pts[i]), caps).value);
    tracked = stage.eval(ProjPoint::finite(tracked), caps).value;
    pts = std::move(next);
    out.chain = chain_compose(std::move(out.chain), std::move(stage), caps);
  }
  return out;
}

namespace {

// Critical profile recomputed without trusting the stage's shortcut for small B_{m,n}.
CritProfile stage_profile_from_scratch(const ChainStage& s) {
  if (s.is_bmn() && s.degree() <= 24) return finite_critical_values(bmn(s.params()));
  return s.critical_profile();
}

}  // namespace

ReductionCheck verify_reduction(const BelyiChain& chain, const std::vector<Rational>& points, const Caps& caps) {
  ReductionCheck r;
  r.points_to_zero = true;
  for (const auto& a : points) {
    if (!(chain.eval(ProjPoint::finite(a), caps) == ProjPoint::finite(0))) r.points_to_zero = false;
  }
  CritProfile profile;
  for (const auto& s : chain.stages) {
    CritProfile next = stage_profile_from_scratch(s);
    for (const auto& v : profile.finite_values) next.insert(s.eval(ProjPoint::finite(v), caps));
    profile = std::move(next);
  }
  r.profile = profile;
  r.profile_in_01 = profile.finite_subset_of({Rational(0), Rational(1)});
  r.value_at_zero = chain.eval(ProjPoint::finite(0), caps);
  r.value_at_zero_in_01 = !r.value_at_zero.infinite && r.value_at_zero.value > 0 && r.value_at_zero.value < 1;
  r.derivative_positive = chain.derivative_sign(Rational(0), caps) > 0;
  return r;
}

}  // namespace dessinkit
