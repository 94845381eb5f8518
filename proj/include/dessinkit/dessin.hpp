#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessinkit/caps.hpp"
#include "dessinkit/free_word.hpp"
#include "dessinkit/parallel.hpp"
#include "dessinkit/perm.hpp"
#include "dessinkit/perm_group.hpp"

namespace dessinkit {

// A dessin on n edges: sigma0 rotates edges around black vertices (the image of x),
// sigma1 around white vertices (the image of y). <sigma0, sigma1> is transitive.
class Dessin {
 public:
  // Throws DegreeMismatch or NotTransitive.
  Dessin(Permutation sigma0, Permutation sigma1);

  std::size_t degree() const noexcept { return sigma0_.degree(); }
  const Permutation& sigma0() const noexcept { return sigma0_; }
  const Permutation& sigma1() const noexcept { return sigma1_; }
  // Face rotation sigma0 * sigma1 (sigma0 applied first).
  Permutation faces() const { return sigma0_ * sigma1_; }

  PermGroup cartographic_group(Caps caps = {}, ExecPolicy policy = ExecPolicy::Parallel,
                               CancelToken cancel = {}) const;

  // Dessin file text: optional `# ` comment lines, then degree / sigma0 / sigma1.
  std::string to_text(const std::vector<std::string>& comments = {}) const;

  friend bool operator==(const Dessin&, const Dessin&) = default;

 private:
  Permutation sigma0_;
  Permutation sigma1_;
};

// Reads the dessin file format; LF or CRLF, `#` comments and blank lines allowed.
Dessin load_dessin(std::string_view text);

struct Passport {
  std::vector<std::size_t> black;
  std::vector<std::size_t> white;
  std::vector<std::size_t> faces;

  friend bool operator==(const Passport&, const Passport&) = default;
};

Passport passport_of(const Dessin& d);

// 1 - (B + W + F - n)/2 with B, W, F the cycle counts of sigma0, sigma1, sigma0*sigma1.
unsigned long genus_of(const Dessin& d);

struct RegularDescriptor {
  Integer group_order;
  Integer ord_x;
  Integer ord_y;
  Integer ord_xy;
  Integer euler_characteristic;
  Integer genus;
};

// Genus of the regular closure: chi = |G| (1/ord x + 1/ord y + 1/ord xy - 1), g = 1 - chi/2.
RegularDescriptor regular_descriptor(const Dessin& d, Caps caps = {},
                                     ExecPolicy policy = ExecPolicy::Parallel,
                                     CancelToken cancel = {});

// Some pi with pi^-1 sigma_i(d1) pi = sigma_i(d2) for i = 0, 1, or nothing. When several
// exist, the one sending edge 1 to the least possible edge is returned.
std::optional<Permutation> dessins_isomorphic(const Dessin& d1, const Dessin& d2,
                                              ExecPolicy policy = ExecPolicy::Parallel);

// Attempts the isomorphism that sends edge 1 of d1 to `target`.
std::optional<Permutation> isomorphism_from(const Dessin& d1, const Dessin& d2, Point target);

struct ClosureComparison {
  bool isomorphic = false;
  Integer order1;
  Integer order2;
  Integer diagonal_order;
  std::string reason;
};

// Compares the regular closures through the diagonal group
// <sigma0(d1) + sigma0(d2), sigma1(d1) + sigma1(d2)> on the disjoint union of edge sets.
ClosureComparison compare_regular_closures(const Dessin& d1, const Dessin& d2, Caps caps = {},
                                           ExecPolicy policy = ExecPolicy::Parallel,
                                           CancelToken cancel = {});

bool regular_closures_isomorphic(const Dessin& d1, const Dessin& d2, Caps caps = {},
                                 ExecPolicy policy = ExecPolicy::Parallel);

enum class Separation { ByKernel, ByCommutation, None };

std::string_view separation_name(Separation s) noexcept;

struct WitnessVerdict {
  Separation kind = Separation::None;
  FreeWord commuting_with;  // the word v tested for commutation
  Permutation image1;       // evaluation of w on the first dessin
  Permutation image2;
};

// Classifies already-evaluated images: w1, w2 of the witness and v1, v2 of the word it
// is tested for commutation against.
Separation classify_separation(const Permutation& w1, const Permutation& w2,
                               const Permutation& v1, const Permutation& v2);

// Any separation certifies that the regular closures are not isomorphic.
WitnessVerdict distinguish_by_witness(const Dessin& d1, const Dessin& d2, const FreeWord& w,
                                      const FreeWord& v = FreeWord::y(2));

}  // namespace dessinkit
