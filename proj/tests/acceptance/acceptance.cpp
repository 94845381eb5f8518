// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dessinkit/belyi.hpp"
#include "dessinkit/dessin.hpp"
#include "dessinkit/error.hpp"
#include "dessinkit/gallery.hpp"
#include "dessinkit/kummer.hpp"
#include "dessinkit/models.hpp"
#include "dessinkit/perm_group.hpp"
#include "dessinkit/poly.hpp"
#include "oracles/oracles.hpp"

using namespace dessinkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> check;
};

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

oracle::Images raw(const Permutation& p) { return {p.images0().begin(), p.images0().end()}; }

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images0(std::move(v));
}

// The witness images as listed for D1..D6.
const char* const kListedImages[] = {
    "()",
    "(13,25)(15,27)(21,33)(23,35)",
    "(17,29)(21,33)",
    "(13,25)(15,27)(19,31)(21,33)",
    "(13,25)(17,29)",
    "(13,25)(19,31)(21,33)(23,35)",
};

Outcome group_order_criterion() {
  const Dessin d1 = gallery::dessin(1);
  const PermGroup g({d1.sigma0(), d1.sigma1()});
  const Integer expected = pow(Integer(2), 19) * pow(Integer(3), 4);
  return {g.order() == expected && expected == 42467328, "|G| = " + to_string(g.order())};
}

Outcome descriptor_criterion() {
  const RegularDescriptor r = regular_descriptor(gallery::dessin(1));
  const bool ok = r.group_order == 42467328 && r.ord_x == 6 && r.ord_y == 12 && r.ord_xy == 12 &&
                  r.euler_characteristic == -pow(Integer(2), 20) * 27 && r.euler_characteristic == -28311552 &&
                  r.genus == 14155777;
  return {ok, "orders (" + to_string(r.ord_x) + "," + to_string(r.ord_y) + "," + to_string(r.ord_xy) +
                  "), chi = " + to_string(r.euler_characteristic) + ", g = " + to_string(r.genus)};
}

Outcome witness_criterion() {
  const FreeWord w = parse_word("[x^-1 y^2 x, x y]");
  int matched = 0;
  for (int k = 1; k <= 6; ++k) {
    const Dessin d = gallery::dessin(k);
    const Permutation img = evaluate_word(w, d.sigma0(), d.sigma1());
    const Permutation listed = parse_cycles(kListedImages[k - 1], 36);
    if (img == listed) ++matched;
  }
  return {matched == 6, std::to_string(matched) + "/6 images equal the listed cycle sets"};
}

Outcome pairwise_criterion() {
  std::vector<Dessin> ds;
  for (int k = 1; k <= 6; ++k) ds.push_back(gallery::dessin(k));
  int non_iso = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (!dessins_isomorphic(ds[a], ds[b])) ++non_iso;
    }
  }
  int closures = 0, agree = 0;
  std::ostringstream orders;
  for (int k = 1; k < 6; ++k) {
    const ClosureComparison c = compare_regular_closures(ds[0], ds[k]);
    if (!c.isomorphic) ++closures;
    const WitnessVerdict v = distinguish_by_witness(ds[0], ds[k], gallery::witness());
    if ((v.kind != Separation::None) == !c.isomorphic) ++agree;
    orders << (k > 1 ? ", " : "") << to_string(c.diagonal_order);
  }
  return {non_iso == 15 && closures == 5 && agree == 5,
          std::to_string(non_iso) + "/15 dessin pairs distinct, " + std::to_string(closures) +
              "/5 closures distinct, " + std::to_string(agree) + "/5 agree with the witness; diagonal orders " +
              orders.str()};
}

Outcome sec31_criterion() {
  bool ok = true;
  for (unsigned k = 1; k <= 6; ++k) ok = ok && commutes_with_y2(model_sec31(k)) == (k == 1);
  const EdgeTrace t2 = trace_edge(model_sec31(2), 4);
  const EdgeTrace t4 = trace_edge(model_sec31(4), 1);
  ok = ok && t2.omega_then_y2 == 17 && t2.y2_then_omega == 5 && t4.omega_then_y2 == 16 && t4.y2_then_omega == 4;
  return {ok, "k=2: 4 -> " + std::to_string(t2.omega_then_y2) + " vs " + std::to_string(t2.y2_then_omega) +
                  "; k=4: 1 -> " + std::to_string(t4.omega_then_y2) + " vs " + std::to_string(t4.y2_then_omega)};
}

Outcome sec32_criterion() {
  int models = 0, bad = 0;
  for (unsigned p : {3u, 5u, 7u}) {
    for (unsigned k = 1; k <= 2 * p; ++k) {
      models += 2;
      if (commutes_with_y2(model_sec32(p, k, false)) != (k == 1)) ++bad;
      if (commutes_with_y2(model_sec32(p, k, true))) ++bad;
    }
  }
  return {bad == 0, std::to_string(models - bad) + "/" + std::to_string(models) + " models as predicted"};
}

Outcome bmn_criterion() {
  int pairs = 0, bad = 0;
  const std::set<Rational> allowed{Rational(0), Rational(1)};
  for (long m = 1; m < 20; ++m) {
    for (long n = 1; m + n <= 20; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      const RatMap f = bmn({m, n});
      const RatPoly& b = f.numerator();
      // K X^(m-1) (1-X)^(n-1) (m - (m+n) X)
      const Rational k = f.numerator().leading() * ((n % 2 == 0) ? 1 : -1);
      const RatPoly closed = RatPoly::monomial(k, static_cast<std::size_t>(m - 1)) *
                             pow(RatPoly({Rational(1), Rational(-1)}), static_cast<unsigned long>(n - 1)) *
                             RatPoly({Rational(m), Rational(-(m + n))});
      const bool ok = b(Rational(0)) == 0 && b(Rational(1)) == 0 && b(q(m, m + n)) == 1 && b.derivative() == closed &&
                      finite_critical_values(f).finite_subset_of(allowed);
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " coprime pairs"};
}

Outcome beta1_criterion() {
  const RatMap b = parse_ratmap("(X+27)^3 / (243*(X-9)^2)");
  const CritProfile crit = finite_critical_values(b);
  CritProfile in;
  in.finite_values = {Rational(0), Rational(-27), Rational(9)};
  in.includes_infinity = true;
  const CritProfile out = propagate_crit(in, b);
  const std::set<Rational> zero_one{Rational(0), Rational(1)};
  const bool ok = crit.finite_values == zero_one && crit.includes_infinity &&
                  eval_extended(b, ProjPoint::finite(9)) == ProjPoint::inf() && b.denominator() == pow(RatPoly::linear_factor(9), 2) &&
                  out.finite_values == zero_one && out.includes_infinity;
  return {ok, "Crit = " + crit.to_string() + ", propagated = " + out.to_string()};
}

Outcome reduce_criterion() {
  std::mt19937_64 rng(20261015);
  int verified = 0, guarded = 0, failed = 0, merged = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> pts;
    const int size = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < size; ++i) {
      long num = static_cast<long>(rng() % 41) - 20;
      if (num == 0) num = 1 + static_cast<long>(rng() % 20);
      pts.push_back(q(num, 1 + static_cast<long>(rng() % 20)));
    }
    try {
      const BelyiReduction r = belyi_reduce(pts);
      if (r.merged_duplicates) ++merged;
      if (verify_reduction(r.chain, pts).ok()) {
        ++verified;
      } else {
        ++failed;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SizeGuard) {
        ++guarded;
      } else {
        ++failed;
      }
    }
  }
  return {failed == 0 && verified > 0,
          std::to_string(verified) + " verified, " + std::to_string(guarded) + " SizeGuard, " + std::to_string(failed) +
              " failed (" + std::to_string(merged) + " with merged images)"};
}

Outcome tower_criterion() {
  bool ok = true;
  std::ostringstream d;
  for (long qv : {2L, 3L, 5L}) {
    const ConjugateReport r = conjugate_triples_distinct(TowerField(3, qv), 1);
    ok = ok && r.j_values.size() == 6 && r.distinct() && r.equivariant;
    d << "p=3,q=" << qv << ": " << r.j_values.size() - r.collisions.size() << " distinct; ";
  }
  const ConjugateReport r5 = conjugate_triples_distinct(TowerField(5, 2), 1);
  ok = ok && r5.j_values.size() == 20 && r5.distinct() && r5.equivariant;
  d << "p=5,q=2: " << r5.j_values.size() << (r5.distinct() ? " distinct" : " with collisions");
  return {ok, d.str()};
}

Outcome two_adic_criterion() {
  const TwoAdicReport r = two_adic_verify({RatPoly({Rational(1), Rational(1)}), 32, 16});
  Integer lhs, rhs, a(17), b(15), c(31), e17(17), e15(15), mod(16);
  mpz_powm(lhs.get_mpz_t(), a.get_mpz_t(), e17.get_mpz_t(), mod.get_mpz_t());
  Integer t;
  mpz_powm(t.get_mpz_t(), b.get_mpz_t(), e15.get_mpz_t(), mod.get_mpz_t());
  lhs = lhs * t % 16;
  mpz_powm(rhs.get_mpz_t(), c.get_mpz_t(), e15.get_mpz_t(), mod.get_mpz_t());
  bool ok = r.m == 17 && r.n == 15 && r.alpha == 4 && r.nu == 0 && r.certified && r.e_consistent && lhs == rhs;

  std::mt19937_64 rng(7);
  int instances = 0, contradictions = 0;
  while (instances < 20) {
    const long c_val = 3 + static_cast<long>(rng() % 120);
    const long c0 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(c_val - 1));
    const long nu = static_cast<long>(v2(Integer(c0)) + v2(Integer(c_val - c0)));
    const unsigned long alpha = static_cast<unsigned long>(nu) + 1 + rng() % 3;
    Rational x0(pow(Integer(2), alpha), 2 * static_cast<long>(rng() % 10) + 1);
    x0.canonicalize();
    if (x0 + c0 >= c_val) continue;
    ++instances;
    const TwoAdicReport s = two_adic_verify({RatPoly({Rational(c0), Rational(1)}), c_val, x0});
    const unsigned long bound = alpha - static_cast<unsigned long>(nu);
    if (!s.certified || !s.e_consistent || (s.v2_s && *s.v2_s < bound)) ++contradictions;
  }
  ok = ok && contradictions == 0;
  return {ok, "(m,n) = (" + to_string(r.m) + "," + to_string(r.n) + "), v2(s) >= 4 certified; " +
                  std::to_string(contradictions) + "/20 random instances contradict the bound"};
}

Outcome oracle_criterion() {
  std::mt19937_64 rng(12);
  int groups = 0, group_bad = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<Permutation> gens;
    std::vector<oracle::Images> imgs;
    for (std::size_t i = 0, k = 1 + rng() % 2; i < k; ++i) {
      gens.push_back(random_perm(n, rng));
      imgs.push_back(raw(gens.back()));
    }
    const auto size = oracle::closure_size(imgs, 5040);
    if (!size) continue;
    ++groups;
    if (PermGroup(gens).order() != Integer(static_cast<unsigned long>(*size))) ++group_bad;
  }
  int pairs = 0, iso_bad = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    Permutation a0 = random_perm(n, rng), a1 = random_perm(n, rng);
    const auto connected = [&] { return PermGroup({a0, a1}).is_transitive(); };
    while (!connected()) a1 = random_perm(n, rng);
    const Dessin a(a0, a1);
    Dessin b = a;
    if (trial % 2 == 0) {
      const Permutation pi = random_perm(n, rng);
      b = Dessin(pi.inverse() * a0 * pi, pi.inverse() * a1 * pi);
    } else {
      const Permutation pi = random_perm(n, rng);
      const Permutation s1 = pi.inverse() * a1 * pi;
      if (PermGroup({a0, s1}).is_transitive()) b = Dessin(a0, s1);
    }
    ++pairs;
    const bool ours = dessins_isomorphic(a, b).has_value();
    const bool brute = oracle::base_edge_isomorphism(raw(a.sigma0()), raw(a.sigma1()), raw(b.sigma0()), raw(b.sigma1()))
                           .has_value();
    if (ours != brute) ++iso_bad;
  }
  int polys = 0, root_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::PlantedPolynomial pp = oracle::plant_polynomial(rng);
    const Rational lo = q(static_cast<long>(rng() % 31) - 15, 1 + static_cast<long>(rng() % 3));
    const Rational hi = lo + q(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 4));
    ++polys;
    const std::size_t ours = sturm_count(RatPoly(pp.coeffs), lo, hi);
    if (ours != oracle::bisection_root_count(pp.coeffs, lo, hi) || ours != oracle::planted_count(pp, lo, hi)) ++root_bad;
  }
  return {group_bad == 0 && iso_bad == 0 && root_bad == 0 && groups >= 100,
          std::to_string(groups - group_bad) + "/" + std::to_string(groups) + " group orders, " +
              std::to_string(pairs - iso_bad) + "/" + std::to_string(pairs) + " iso verdicts, " +
              std::to_string(polys - root_bad) + "/" + std::to_string(polys) + " root counts"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gallery group order", 60, group_order_criterion},
      {2, "regular descriptor of D1", 60, descriptor_criterion},
      {3, "witness evaluations", 1, witness_criterion},
      {4, "gallery pairwise tests", 600, pairwise_criterion},
      {5, "24-edge local model", 1, sec31_criterion},
      {6, "8p-edge local models", 1, sec32_criterion},
      {7, "B_{m,n} suite", 5, bmn_criterion},
      {8, "beta1 critical values", 1, beta1_criterion},
      {9, "belyi_reduce property suite", 300, reduce_criterion},
      {10, "tower distinctness", 30, tower_criterion},
      {11, "two-adic verifier", 1, two_adic_criterion},
      {12, "oracle suites", 120, oracle_criterion},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget_s);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ")"
              << (in_time ? "" : " over budget") << ": " << out.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
