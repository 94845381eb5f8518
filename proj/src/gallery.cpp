#include "dessinkit/gallery.hpp"

#include <array>
#include <string>

#include "dessinkit/error.hpp"
#include "gallery_data.hpp"

namespace dessinkit::gallery {

namespace {

void check_index(int k) {
  if (k < 1 || k > kCount) {
    fail(ErrorCode::OutOfRange, "gallery index " + std::to_string(k) + " outside 1.." + std::to_string(kCount));
  }
}

constexpr std::array<std::string_view, kCount> kWitnessImages = {
    "()",
    "(13,25)(15,27)(21,33)(23,35)",
    "(17,29)(21,33)",
    "(13,25)(15,27)(19,31)(21,33)",
    "(13,25)(17,29)",
    "(13,25)(19,31)(21,33)(23,35)",
};

}  // namespace

std::string_view text(int k) {
  check_index(k);
  return detail::kGalleryText[static_cast<std::size_t>(k - 1)];
}

Dessin dessin(int k) { return load_dessin(text(k)); }

std::string_view witness_text() { return "[x^-1 y^2 x, x y]"; }

FreeWord witness() { return parse_word(witness_text()); }

std::string_view expected_witness_image(int k) {
  check_index(k);
  return kWitnessImages[static_cast<std::size_t>(k - 1)];
}

}  // namespace dessinkit::gallery
