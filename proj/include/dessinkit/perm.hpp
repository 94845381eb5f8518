#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dessinkit/rational.hpp"

namespace dessinkit {

using Point = std::uint32_t;

// A bijection of {1..n}. Products use the right action: p^(ab) = (p^a)^b.
// Storage is 0-based; every public accessor taking or returning points is 1-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  // `images[i]` is the image of point i+1, 1-based. Throws on non-bijections.
  static Permutation from_images(std::span<const Point> images);
  // Internal 0-based constructor; `images` must already be a bijection of {0..n-1}.
  static Permutation from_images0(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point image(Point point) const;
  std::vector<Point> images() const;
  std::span<const Point> images0() const noexcept { return images_; }

  bool is_identity() const noexcept;
  // Smallest moved point (1-based), or 0 for the identity.
  Point first_moved() const noexcept;

  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  // Exponent reduced per cycle, so huge exponents cost O(n) bigint remainders.
  Permutation pow(const Integer& exponent) const;

  // Disjoint cycles of length >= 2 (or all, if include_fixed), each starting at its
  // least element, ordered by least element.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  // Canonical cycle notation; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

// p^(result) = (p^a)^b. Throws DegreeMismatch.
Permutation compose_right(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose_right(a, b);
}

// a b a^-1 b^-1
Permutation commutator(const Permutation& a, const Permutation& b);

// a on {1..n}, b shifted onto {n+1..n+m}.
Permutation direct_sum(const Permutation& a, const Permutation& b);

struct CycleInfo {
  Integer order;
  std::vector<std::size_t> cycle_type;  // descending, fixed points as 1s
};

CycleInfo order_and_cycle_type(const Permutation& a);

// Parses disjoint cycle notation such as "(1,13,14)(2,15,16)". Fixed points may be
// omitted; "()" and the empty string give the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace dessinkit
