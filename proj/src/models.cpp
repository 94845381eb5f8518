#include "dessinkit/models.hpp"

#include <numeric>

#include "dessinkit/error.hpp"

namespace dessinkit {

namespace {

Permutation full_cycle(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Permutation::from_images0(std::move(img));
}

Permutation adjacent_pairs(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; i += 2) {
    img[i] = static_cast<Point>(i + 1);
    img[i + 1] = static_cast<Point>(i);
  }
  return Permutation::from_images0(std::move(img));
}

Permutation transpositions(std::size_t n, std::initializer_list<std::pair<Point, Point>> pairs) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (auto [u, v] : pairs) std::swap(img[u - 1], img[v - 1]);
  return Permutation::from_images0(std::move(img));
}

LocalModel finish(LocalModel m) {
  m.y = full_cycle(m.point_count);
  m.s = adjacent_pairs(m.point_count);
  m.omega = m.t * m.s * m.t;
  return m;
}

bool odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

LocalModel model_sec31(unsigned k) {
  if (k < 1 || k > 6) fail(ErrorCode::OutOfRange, "k = " + std::to_string(k) + " outside 1..6");
  LocalModel m;
  m.family = "sec31";
  m.k = k;
  m.point_count = 24;
  m.a = 1;
  m.b = 2 * k;
  m.c = 13;
  m.d = 2 * k + 12;
  m.t = transpositions(24, {{m.a, m.c}, {m.b, m.d}});
  return finish(std::move(m));
}

LocalModel model_sec32(unsigned p, unsigned k, bool j_variant) {
  if (!odd_prime(p)) fail(ErrorCode::OutOfRange, "p = " + std::to_string(p) + " is not an odd prime");
  if (k < 1 || k > 2 * p) {
    fail(ErrorCode::OutOfRange, "k = " + std::to_string(k) + " outside 1.." + std::to_string(2 * p));
  }
  LocalModel m;
  m.family = "sec32";
  m.k = k;
  m.j_variant = j_variant;
  m.point_count = 8 * static_cast<std::size_t>(p);
  m.a = 1;
  m.b = 2 * k;  // A^(Y^(2k-1))
  m.c = 4 * p + 1;
  m.d = 4 * p + 2 * k;
  m.t = j_variant ? transpositions(m.point_count, {{m.b, m.d}})
                  : transpositions(m.point_count, {{m.a, m.c}, {m.b, m.d}});
  return finish(std::move(m));
}

bool commutes_with_y2(const LocalModel& model) {
  const Permutation y2 = model.y * model.y;
  return model.omega * y2 == y2 * model.omega;
}

EdgeTrace trace_edge(const LocalModel& model, Point start) {
  const Permutation y2 = model.y * model.y;
  EdgeTrace t;
  t.start = start;
  t.omega = model.omega.image(start);
  t.omega_then_y2 = y2.image(t.omega);
  t.y2 = y2.image(start);
  t.y2_then_omega = model.omega.image(t.y2);
  return t;
}

Point witness_edge(const LocalModel& model) {
  return (model.k == 2 || model.j_variant) ? model.b : model.a;
}

Sec31Word build_omega_sec31(const Integer& m, const Integer& n) {
  if (m < 1 || n < 1) fail(ErrorCode::OutOfRange, "m and n must be positive");
  Integer g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1) fail(ErrorCode::NotCoprime, "gcd(m, n) = " + to_string(g));
  Sec31Word w;
  w.omega = FreeWord::x(n) * FreeWord::y(-1) * FreeWord::x(m - n) * FreeWord::y(1) * FreeWord::x(n);
  w.displayed_case = m != 1 && !mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t());
  return w;
}

namespace {

void check_shape(const std::vector<Integer>& d, std::size_t t) {
  if (t == 0 || t % 2 == 0) fail(ErrorCode::BadShape, "t = " + std::to_string(t) + " must be odd");
  if (d.size() != t) {
    fail(ErrorCode::BadShape, "expected " + std::to_string(t) + " entries in d, got " + std::to_string(d.size()));
  }
  for (const auto& v : d) {
    if (v < 1) fail(ErrorCode::BadShape, "entries of d must be positive");
  }
}

}  // namespace

FreeWord build_mu0(const std::vector<Integer>& d, std::size_t t) {
  check_shape(d, t);
  std::vector<Syllable> syl;
  auto slot = [&](std::size_t i, const Integer& e) {  // 1-based slot i
    syl.push_back({i % 2 == 1 ? Generator::X : Generator::Y, e});
  };
  for (std::size_t i = 1; i < t; ++i) slot(i, d[i - 1]);
  slot(t, 2 * d[t - 1]);
  for (std::size_t i = t - 1; i >= 1; --i) slot(i, d[i - 1]);
  return FreeWord::from_syllables(std::move(syl));
}

MuOmega build_mu_omega(const std::vector<Integer>& d, std::size_t t, const Integer& m, const Integer& n,
                       const Integer& r, const Integer& s) {
  check_shape(d, t);
  if (t == 1) fail(ErrorCode::BadShape, "mu is only defined for t >= 3");
  if (m < 1 || n < 1 || r < 1 || s < 1) fail(ErrorCode::BadShape, "m, n, r, s must be positive");
  std::vector<Syllable> syl;
  Integer delta = 0;
  auto block = [&](const Integer& xexp) {
    syl.push_back({Generator::X, xexp});
    syl.push_back({Generator::Y, Integer(1)});
    syl.push_back({Generator::X, s});
    syl.push_back({Generator::Y, Integer(1)});
    delta += xexp + s;
  };
  auto factor = [&](std::size_t i) -> const Integer& { return i % 2 == 1 ? m : n; };
  for (std::size_t i = 1; i < t; ++i) block(factor(i) * r * d[i - 1]);
  block(2 * m * r * d[t - 1]);
  for (std::size_t i = t - 1; i >= 2; --i) block(factor(i) * r * d[i - 1]);
  const Integer suffix = m * r * d[0];
  syl.push_back({Generator::X, suffix});
  delta += suffix;

  MuOmega out;
  out.mu = FreeWord::from_syllables(std::move(syl));
  out.omega = out.mu * FreeWord::y(1) * out.mu.inverse() * FreeWord::x(2 * s) * FreeWord::y(-1) * out.mu;
  out.delta = delta;
  return out;
}

DeltaTildeReport delta_tilde_check(const std::vector<Integer>& d, std::size_t t, const Integer& c0,
                                   const Integer& c, unsigned long alpha_minus_nu) {
  check_shape(d, t);
  if (c0 < 1 || c <= c0) fail(ErrorCode::OutOfRange, "need 0 < c0 < c");
  if (alpha_minus_nu < 1) fail(ErrorCode::OutOfRange, "alpha - nu must be positive");
  DeltaTildeReport r;
  auto coef = [&](std::size_t i) { return i % 2 == 1 ? c0 : Integer(c - c0); };
  for (std::size_t i = 1; i < t; ++i) r.terms.push_back(coef(i) * d[i - 1]);
  r.terms.push_back(2 * c0 * d[t - 1]);
  for (std::size_t i = t - 1; i >= 1; --i) r.terms.push_back(coef(i) * d[i - 1]);
  r.modulus = pow(Integer(2), alpha_minus_nu);
  Integer acc = 0;
  r.ok = true;
  for (const auto& term : r.terms) {
    acc += term;
    r.partials.push_back(acc);
    if (mpz_divisible_p(acc.get_mpz_t(), r.modulus.get_mpz_t())) r.ok = false;
  }
  r.total = acc;
  return r;
}

}  // namespace dessinkit
