#include <algorithm>
#include <set>

#include "oracles/oracles.hpp"

namespace oracle {

using dessinkit::Rational;

namespace {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Coeffs remainder(Coeffs a, const Coeffs& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Coeffs euclid(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Coeffs quotient(Coeffs a, const Coeffs& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Coeffs q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Rational value(const Coeffs& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign variations of (1+y)^d p((a + b y)/(1+y)), an upper bound for roots in (a, b).
std::size_t descartes_bound(const Coeffs& p, const Rational& a, const Rational& b) {
  const std::size_t d = p.size() - 1;
  Coeffs q;
  for (std::size_t i = 0; i <= d; ++i) {
    Coeffs term{p[i]};
    for (std::size_t k = 0; k < i; ++k) term = mul(term, {a, b});
    for (std::size_t k = 0; k < d - i; ++k) term = mul(term, {Rational(1), Rational(1)});
    q = add(q, term);
  }
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : q) {
    const int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_open(const Coeffs& p, const Rational& a, const Rational& b) {
  const std::size_t v = descartes_bound(p, a, b);
  if (v <= 1) return v;
  Rational mid = (a + b) / 2;
  mid.canonicalize();
  return count_open(p, a, mid) + (value(p, mid) == 0 ? 1 : 0) + count_open(p, mid, b);
}

}  // namespace

PlantedPolynomial plant_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 5), num(-12, 12), den(1, 5), mult(1, 3), quad(1, 9), pick(0, 1);
  PlantedPolynomial out;
  int scale = num(rng);
  if (scale == 0) scale = 3;
  out.coeffs = {Rational(scale, den(rng))};
  out.coeffs[0].canonicalize();
  std::set<Rational> roots;
  const int linear = count(rng);
  for (int i = 0; i < linear; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    roots.insert(r);
    const int m = pick(rng) ? 1 : mult(rng);
    for (int k = 0; k < m; ++k) out.coeffs = mul(out.coeffs, {-r, Rational(1)});
  }
  const int quads = count(rng) % 3;
  for (int i = 0; i < quads; ++i) out.coeffs = mul(out.coeffs, {Rational(quad(rng)), Rational(0), Rational(1)});
  if (out.coeffs.size() < 2) out.coeffs = mul(out.coeffs, {Rational(7), Rational(0), Rational(1)});
  out.real_roots.assign(roots.begin(), roots.end());
  return out;
}

std::size_t planted_count(const PlantedPolynomial& p, const Rational& lo, const Rational& hi) {
  return static_cast<std::size_t>(
      std::count_if(p.real_roots.begin(), p.real_roots.end(), [&](const Rational& r) { return r > lo && r <= hi; }));
}

std::size_t bisection_root_count(const Coeffs& p_in, const Rational& lo, const Rational& hi) {
  Coeffs p = p_in;
  trim(p);
  if (p.size() <= 1) return 0;
  Coeffs dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long>(i));
  const Coeffs g = euclid(p, dp);
  Coeffs sf = g.size() > 1 ? quotient(p, g) : p;
  return count_open(sf, lo, hi) + (value(sf, hi) == 0 ? 1 : 0);
}

}  // namespace oracle
