#include <doctest.h>

#include "dessinkit/perm_group.hpp"
#include "dessinkit/gallery.hpp"
#include "support.hpp"

using namespace dessinkit;
using testing::code_of;

TEST_CASE("cycle notation parses and prints canonically") {
  const Permutation c = parse_cycles("(1,2,3)", 3);
  CHECK(c.images() == std::vector<Point>{2, 3, 1});
  CHECK(c.to_string() == "(1,2,3)");
  CHECK(parse_cycles("(3,1,2)", 3) == c);
  CHECK(parse_cycles("", 4).is_identity());
  CHECK(parse_cycles("()", 4).to_string() == "()");
  CHECK(code_of([] { parse_cycles("(1,2)(1,3)", 3); }) == ErrorCode::RepeatedPoint);
  CHECK(code_of([] { parse_cycles("(1,5)", 4); }) == ErrorCode::PointOutOfRange);
  CHECK(code_of([] { parse_cycles("(1,2", 4); }) == ErrorCode::SyntaxError);
}

TEST_CASE("composition is the right action") {
  const Permutation a = parse_cycles("(1,2)", 3);
  const Permutation b = parse_cycles("(2,3)", 3);
  CHECK((a * b).image(1) == 3);
  CHECK(Permutation::identity(3) * b == b);
  CHECK(code_of([&] { (void)(a * Permutation::identity(4)); }) == ErrorCode::DegreeMismatch);

  std::vector<Point> cyc(24);
  std::iota(cyc.begin(), cyc.end(), 2u);
  cyc.back() = 1;
  const Permutation y = Permutation::from_images(cyc);
  const Permutation y2 = y * y;
  for (Point p = 1; p <= 24; ++p) CHECK(y2.image(p) == (p + 1) % 24 + 1);
  CHECK(y2.cycles().size() == 2);
}

TEST_CASE("commutator is a b a^-1 b^-1") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation a = testing::random_perm(7, rng);
    const Permutation b = testing::random_perm(7, rng);
    CHECK(commutator(a, b) == a * b * a.inverse() * b.inverse());
  }
}

TEST_CASE("group laws on random permutations") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation a = testing::random_perm(n, rng);
    const Permutation b = testing::random_perm(n, rng);
    const Permutation c = testing::random_perm(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    const CycleInfo info = order_and_cycle_type(a);
    CHECK(a.pow(info.order).is_identity());
    CHECK(std::accumulate(info.cycle_type.begin(), info.cycle_type.end(), std::size_t{0}) == n);
    CHECK(a.pow(3LL) == a * a * a);
    CHECK(a.pow(-1LL) == a.inverse());
    // exponent reduction per cycle agrees with the small exponent
    const Integer huge = info.order * Integer("1000000000000000000000") + 5;
    CHECK(a.pow(huge) == a.pow(5LL));
  }
}

TEST_CASE("orders and cycle types of the gallery generators") {
  const Dessin d1 = gallery::dessin(1);
  const CycleInfo x = order_and_cycle_type(d1.sigma0());
  CHECK(x.order == 6);
  CHECK(x.cycle_type == std::vector<std::size_t>{6, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
  const CycleInfo y = order_and_cycle_type(d1.sigma1());
  CHECK(y.order == 12);
  CHECK(y.cycle_type.front() == 12);
  CHECK(y.cycle_type.size() == 13);
  const CycleInfo id = order_and_cycle_type(Permutation::identity(5));
  CHECK(id.order == 1);
  CHECK(id.cycle_type == std::vector<std::size_t>{1, 1, 1, 1, 1});
}

TEST_CASE("small group orders and membership") {
  const PermGroup s3({parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.contains(parse_cycles("(1,3,2)", 3)));
  const PermGroup c3({parse_cycles("(1,2,3)", 3)});
  CHECK_FALSE(c3.contains(parse_cycles("(1,2)", 3)));
  std::vector<Point> cyc(24);
  std::iota(cyc.begin(), cyc.end(), 2u);
  cyc.back() = 1;
  const PermGroup c24({Permutation::from_images(cyc)});
  CHECK(c24.order() == 24);
  CHECK(c24.is_transitive());
  CHECK_FALSE(PermGroup({parse_cycles("(1,2)", 3)}).is_transitive());
}

TEST_CASE("the gallery cartographic group") {
  const Dessin d1 = gallery::dessin(1);
  const PermGroup g({d1.sigma0(), d1.sigma1()});
  CHECK(g.order() == 42467328);
  CHECK(g.is_transitive());
  CHECK(g.contains(evaluate_word(gallery::witness(), d1.sigma0(), d1.sigma1())));
  CHECK(g.contains(d1.sigma0() * d1.sigma1()));
  const PermGroup serial({d1.sigma0(), d1.sigma1()}, {}, ExecPolicy::Serial);
  CHECK(serial.order() == g.order());
  CHECK(serial.base() == g.base());
  CHECK(serial.basic_orbit_lengths() == g.basic_orbit_lengths());
}

TEST_CASE("group order cap is enforced") {
  const Dessin d1 = gallery::dessin(1);
  Caps caps;
  caps.max_group_order = 1000;
  const PermGroup g({d1.sigma0(), d1.sigma1()}, caps);
  CHECK(code_of([&] { (void)g.order(); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("Schreier-Sims agrees with exhaustive closure") {
  std::mt19937_64 rng(13);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    std::vector<oracle::Images> raw;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(trial % 2 ? testing::random_sparse_perm(n, rng) : testing::random_perm(n, rng));
      raw.push_back(testing::images_of(gens.back()));
    }
    const auto expected = oracle::closure_size(raw, 5040);
    if (!expected) continue;
    ++compared;
    const PermGroup par(gens, {}, ExecPolicy::Parallel);
    const PermGroup ser(gens, {}, ExecPolicy::Serial);
    CHECK(par.order() == Integer(static_cast<unsigned long>(*expected)));
    CHECK(ser.order() == par.order());
    for (int probe = 0; probe < 5; ++probe) {
      const Permutation q = testing::random_perm(n, rng);
      CHECK(par.contains(q) == oracle::closure_contains(raw, testing::images_of(q), 5040));
    }
    for (const auto& g : gens) CHECK(par.contains(g));
  }
  CHECK(compared > 200);
}
