#include "dessinkit/poly.hpp"

#include <algorithm>
#include <utility>

#include "dessinkit/error.hpp"

namespace dessinkit {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_factor(const Rational& root) { return RatPoly({-root, Rational(1)}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::Internal, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

int RatPoly::sign_at(const Rational& v) const { return sgn((*this)(v)); }

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly r = *this;
  r *= Rational(1) / leading();
  return r;
}

std::vector<Integer> RatPoly::primitive_integer() const {
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content == 0) return out;
  if (out.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += dessinkit::to_string(mag);
      continue;
    }
    if (mag != 1) out += dessinkit::to_string(mag) + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  r *= b;
  return r;
}
RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }

RatPoly pow(const RatPoly& p, unsigned long k) {
  RatPoly result = RatPoly::constant(1);
  RatPoly base = p;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

PolyDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  const auto& bc = b.coeffs();
  for (long k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly u = a;
  RatPoly v = b;
  while (!v.is_zero()) {
    RatPoly r = divmod(u, v).remainder;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).quotient;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& squarefree) {
  std::vector<RatPoly> seq{squarefree};
  RatPoly next = squarefree.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    RatPoly r = -divmod(seq[seq.size() - 2], seq.back()).remainder;
    // Positive rescaling keeps the signs and tames coefficient growth.
    if (!r.is_zero()) r *= Rational(1) / abs(r.leading());
    next = std::move(r);
  }
  return seq;
}

namespace {

std::size_t sign_variations(const std::vector<RatPoly>& seq, const Rational& v) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p.sign_at(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorCode::OutOfRange, "sturm_count of the zero polynomial");
  if (!(lo < hi)) fail(ErrorCode::OutOfRange, "sturm_count needs lo < hi");
  if (p.degree() == 0) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

Rational root_bound(const RatPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational mx = 0;
  for (long k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(k)) / p.leading());
    if (r > mx) mx = r;
  }
  return mx + 1;
}

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::OutOfRange, "rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  const RatPoly sf = squarefree_part(p);
  // A rational root a/b in lowest terms has b | lead, so lead * root is an integer and an
  // isolating interval narrower than 1/lead holds at most one candidate.
  const auto prim = sf.primitive_integer();
  const Integer lead = prim.back();
  const auto seq = sturm_sequence(sf);
  const Rational bound = root_bound(sf);
  const Rational width_goal(1, lead);

  struct Interval {
    Rational lo, hi;
    std::size_t vlo, vhi;
  };
  std::vector<Interval> stack{{-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const std::size_t count = iv.vlo - iv.vhi;
    if (count == 0) continue;
    if (count == 1 && iv.hi - iv.lo < width_goal) {
      Rational scaled = iv.hi * lead;
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      Rational cand(k, lead);
      cand.canonicalize();
      if (cand > iv.lo && sf(cand) == 0) roots.push_back(cand);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    const std::size_t vmid = sign_variations(seq, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool certify_increasing(const RatPoly& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) fail(ErrorCode::OutOfRange, "certify_increasing needs lo < hi");
  const RatPoly d = f.derivative();
  if (d.is_zero()) return false;
  if (d.sign_at(lo) <= 0 || d.sign_at(hi) <= 0) return false;
  return sturm_count(d, lo, hi) == 0;
}

}  // namespace dessinkit
