#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dessinkit/perm.hpp"
#include "dessinkit/rational.hpp"

namespace dessinkit {

enum class Generator : unsigned char { X, Y };

struct Syllable {
  Generator gen;
  Integer exponent;  // never zero

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word in F2 = <x, y>.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord x(const Integer& exponent = 1);
  static FreeWord y(const Integer& exponent = 1);
  // Reduces the given syllable list.
  static FreeWord from_syllables(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  FreeWord inverse() const;
  FreeWord pow(long long exponent) const;

  // Total number of letters, sum of |exponent|.
  Integer letter_count() const;
  // Number of letters of the given generator, sum of |exponent| over its syllables.
  Integer occurrences(Generator g) const;
  Integer exponent_sum(Generator g) const;

  // "x^3 y^-1 x^2 y x^3"; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);

// Grammar: generators x, y; `^k` with k a possibly negative integer on a generator,
// a parenthesized group or a commutator; juxtaposition (or `*`) multiplies left to
// right; `[u,v]` is u v u^-1 v^-1; `1` is the empty word; whitespace is ignored.
FreeWord parse_word(std::string_view text);

// [a,b] = a b a^-1 b^-1, freely reduced. With the right action this is the convention
// under which the gallery witness images come out as listed.
FreeWord commutator_word(const FreeWord& a, const FreeWord& b);

// Image of w under x -> mx, y -> my (right action). Throws DegreeMismatch.
Permutation evaluate_word(const FreeWord& w, const Permutation& mx, const Permutation& my);

}  // namespace dessinkit
