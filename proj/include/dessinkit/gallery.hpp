#pragma once

#include <string_view>

#include "dessinkit/dessin.hpp"
#include "dessinkit/free_word.hpp"

namespace dessinkit::gallery {

// The six degree-36 Galois conjugates D1..D6 of the dessin over Q(zeta3, cbrt3)
// given by the rational Belyi map (X + 27)^3 / (243 (X - 9)^2) composed with X^6.
inline constexpr int kCount = 6;

// Dessin file text of D_k, byte-identical to data/gallery/d<k>.dessin. OutOfRange for k outside 1..6.
std::string_view text(int k);
Dessin dessin(int k);

// [x^-1 y^2 x, x y], which lies in the kernel of the monodromy of D1 only.
std::string_view witness_text();
FreeWord witness();

// Expected image of the witness on D_k in cycle notation ("()" for k = 1).
std::string_view expected_witness_image(int k);

}  // namespace dessinkit::gallery
