#pragma once

// Brute-force reference computations used only by the tests. They share no algorithmic
// code with the library: plain image vectors, exhaustive closure, explicit enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dessinkit/rational.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;  // 0-based images

// p^(a*b) = (p^a)^b
Images compose(const Images& a, const Images& b);

// Size of the group generated by `gens`, by closing under right multiplication.
// Nothing when the closure exceeds `limit` elements.
std::optional<std::size_t> closure_size(const std::vector<Images>& gens, std::size_t limit);
bool closure_contains(const std::vector<Images>& gens, const Images& target, std::size_t limit);

// A conjugator pi with pi^-1 a_i pi = b_i, found by trying every image of point 0 and
// extending along words in the generators.
std::optional<Images> base_edge_isomorphism(const Images& a0, const Images& a1, const Images& b0,
                                            const Images& b1);
// Tries all n! bijections; n <= 8.
bool exhaustive_isomorphic(const Images& a0, const Images& a1, const Images& b0, const Images& b1);

using Coeffs = std::vector<dessinkit::Rational>;  // low degree first

struct PlantedPolynomial {
  Coeffs coeffs;
  std::vector<dessinkit::Rational> real_roots;  // distinct
};

// Product of linear factors with small rational roots (some repeated), times a few
// factors X^2 + k with k > 0 and a random scale.
PlantedPolynomial plant_polynomial(std::mt19937_64& rng);
std::size_t planted_count(const PlantedPolynomial& p, const dessinkit::Rational& lo,
                          const dessinkit::Rational& hi);

// Distinct real roots in (lo, hi] by Descartes' rule on Moebius images and bisection.
std::size_t bisection_root_count(const Coeffs& p, const dessinkit::Rational& lo,
                                 const dessinkit::Rational& hi);

}  // namespace oracle
