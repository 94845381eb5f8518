#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "dessinkit/dessin.hpp"
#include "dessinkit/error.hpp"
#include "dessinkit/perm.hpp"
#include "oracles/oracles.hpp"

namespace testing {

using namespace dessinkit;

inline oracle::Images images_of(const Permutation& p) {
  return oracle::Images(p.images0().begin(), p.images0().end());
}

inline Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images0(std::move(v));
}

// A random product of a few short cycles, so generated groups stay small.
inline Permutation random_sparse_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(n, 4));
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), 0u);
  std::shuffle(pts.begin(), pts.end(), rng);
  const std::size_t l = len(rng);
  for (std::size_t i = 0; i < l; ++i) v[pts[i]] = pts[(i + 1) % l];
  return Permutation::from_images0(std::move(v));
}

inline bool transitive_pair(const Permutation& a, const Permutation& b) {
  std::vector<bool> seen(a.degree(), false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    for (Point q : {a.images0()[p], b.images0()[p]}) {
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == a.degree();
}

inline Dessin random_dessin(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Permutation a = random_perm(n, rng);
    Permutation b = random_perm(n, rng);
    if (transitive_pair(a, b)) return Dessin(a, b);
  }
}

// The error code thrown by f, if any.
template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// pi^-1 d pi
inline Dessin relabel(const Dessin& d, const Permutation& pi) {
  return Dessin(pi.inverse() * d.sigma0() * pi, pi.inverse() * d.sigma1() * pi);
}

}  // namespace testing
