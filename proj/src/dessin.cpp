#include "dessinkit/dessin.hpp"

#include <cctype>

#include "dessinkit/error.hpp"

namespace dessinkit {

Dessin::Dessin(Permutation sigma0, Permutation sigma1)
    : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.degree() != sigma1_.degree()) {
    fail(ErrorCode::DegreeMismatch, "sigma0 has degree " + std::to_string(sigma0_.degree()) +
                                        ", sigma1 has degree " + std::to_string(sigma1_.degree()));
  }
  if (sigma0_.degree() == 0) fail(ErrorCode::OutOfRange, "a dessin needs at least one edge");
  if (!PermGroup({sigma0_, sigma1_}).is_transitive()) {
    fail(ErrorCode::NotTransitive, "<sigma0, sigma1> is not transitive");
  }
}

PermGroup Dessin::cartographic_group(Caps caps, ExecPolicy policy, CancelToken cancel) const {
  return PermGroup({sigma0_, sigma1_}, std::move(caps), policy, std::move(cancel));
}

std::string Dessin::to_text(const std::vector<std::string>& comments) const {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "degree " + std::to_string(degree()) + "\n";
  out += "sigma0 = " + sigma0_.to_string() + "\n";
  out += "sigma1 = " + sigma1_.to_string() + "\n";
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Returns the value after `key =` (or `key` followed by whitespace for degree).
std::optional<std::string_view> keyed_value(std::string_view line, std::string_view key, bool with_equals) {
  if (line.substr(0, key.size()) != key) return std::nullopt;
  auto rest = line.substr(key.size());
  if (with_equals) {
    rest = strip(rest);
    if (rest.empty() || rest.front() != '=') return std::nullopt;
    return strip(rest.substr(1));
  }
  if (rest.empty() || !std::isspace(static_cast<unsigned char>(rest.front()))) return std::nullopt;
  return strip(rest);
}

}  // namespace

Dessin load_dessin(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = strip(line);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.size() != 3) {
    fail(ErrorCode::SyntaxError, "expected degree, sigma0 and sigma1 lines, found " +
                                     std::to_string(lines.size()) + " content lines");
  }
  auto degree_text = keyed_value(lines[0].second, "degree", false);
  if (!degree_text) fail(ErrorCode::SyntaxError, "line " + std::to_string(lines[0].first) + ": expected 'degree N'");
  Integer degree = parse_integer(*degree_text);
  if (degree < 1 || !degree.fits_ulong_p()) fail(ErrorCode::SyntaxError, "degree must be a positive integer");
  auto s0 = keyed_value(lines[1].second, "sigma0", true);
  if (!s0) fail(ErrorCode::SyntaxError, "line " + std::to_string(lines[1].first) + ": expected 'sigma0 = ...'");
  auto s1 = keyed_value(lines[2].second, "sigma1", true);
  if (!s1) fail(ErrorCode::SyntaxError, "line " + std::to_string(lines[2].first) + ": expected 'sigma1 = ...'");
  const std::size_t n = degree.get_ui();
  return Dessin(parse_cycles(*s0, n), parse_cycles(*s1, n));
}

Passport passport_of(const Dessin& d) {
  return Passport{order_and_cycle_type(d.sigma0()).cycle_type,
                  order_and_cycle_type(d.sigma1()).cycle_type,
                  order_and_cycle_type(d.faces()).cycle_type};
}

unsigned long genus_of(const Dessin& d) {
  const Passport pp = passport_of(d);
  const long euler = static_cast<long>(pp.black.size() + pp.white.size() + pp.faces.size()) -
                     static_cast<long>(d.degree());
  if (euler % 2 != 0 || euler > 2) {
    fail(ErrorCode::Internal, "odd or oversized Euler characteristic " + std::to_string(euler));
  }
  return static_cast<unsigned long>(1 - euler / 2);
}

RegularDescriptor regular_descriptor(const Dessin& d, Caps caps, ExecPolicy policy, CancelToken cancel) {
  RegularDescriptor r;
  r.group_order = d.cartographic_group(std::move(caps), policy, std::move(cancel)).order();
  r.ord_x = order_and_cycle_type(d.sigma0()).order;
  r.ord_y = order_and_cycle_type(d.sigma1()).order;
  r.ord_xy = order_and_cycle_type(d.faces()).order;
  Rational chi = Rational(r.group_order) *
                 (Rational(1, r.ord_x) + Rational(1, r.ord_y) + Rational(1, r.ord_xy) - 1);
  chi.canonicalize();
  if (chi.get_den() != 1 || chi.get_num() % 2 != 0 || chi.get_num() > 2) {
    fail(ErrorCode::NonIntegralCharacteristic, "chi = " + to_string(chi));
  }
  r.euler_characteristic = chi.get_num();
  r.genus = 1 - r.euler_characteristic / 2;
  return r;
}

std::optional<Permutation> isomorphism_from(const Dessin& d1, const Dessin& d2, Point target) {
  const std::size_t n = d1.degree();
  if (d2.degree() != n || target < 1 || target > n) return std::nullopt;
  const auto a0 = d1.sigma0().images0();
  const auto a1 = d1.sigma1().images0();
  const auto b0 = d2.sigma0().images0();
  const auto b1 = d2.sigma1().images0();
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> map(n, kUnset);
  std::vector<bool> used(n, false);
  std::vector<Point> queue{0};
  map[0] = target - 1;
  used[target - 1] = true;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Point e = queue[pos];
    const Point f = map[e];
    const std::pair<Point, Point> steps[2] = {{a0[e], b0[f]}, {a1[e], b1[f]}};
    for (auto [next_e, next_f] : steps) {
      if (map[next_e] == kUnset) {
        if (used[next_f]) return std::nullopt;
        map[next_e] = next_f;
        used[next_f] = true;
        queue.push_back(next_e);
      } else if (map[next_e] != next_f) {
        return std::nullopt;
      }
    }
  }
  // Transitivity of d1 guarantees every edge was reached.
  return Permutation::from_images0(std::move(map));
}

std::string_view separation_name(Separation s) noexcept {
  switch (s) {
    case Separation::ByKernel: return "SeparatesByKernel";
    case Separation::ByCommutation: return "SeparatesByCommutation";
    case Separation::None: return "NoSeparation";
  }
  return "NoSeparation";
}

Separation classify_separation(const Permutation& w1, const Permutation& w2,
                               const Permutation& v1, const Permutation& v2) {
  if (w1.is_identity() != w2.is_identity()) return Separation::ByKernel;
  const bool c1 = commutator(w1, v1).is_identity();
  const bool c2 = commutator(w2, v2).is_identity();
  if (c1 != c2) return Separation::ByCommutation;
  return Separation::None;
}

WitnessVerdict distinguish_by_witness(const Dessin& d1, const Dessin& d2, const FreeWord& w,
                                      const FreeWord& v) {
  WitnessVerdict verdict;
  verdict.commuting_with = v;
  verdict.image1 = evaluate_word(w, d1.sigma0(), d1.sigma1());
  verdict.image2 = evaluate_word(w, d2.sigma0(), d2.sigma1());
  verdict.kind = classify_separation(verdict.image1, verdict.image2,
                                     evaluate_word(v, d1.sigma0(), d1.sigma1()),
                                     evaluate_word(v, d2.sigma0(), d2.sigma1()));
  return verdict;
}

ClosureComparison compare_regular_closures(const Dessin& d1, const Dessin& d2, Caps caps,
                                           ExecPolicy policy, CancelToken cancel) {
  ClosureComparison c;
  c.order1 = d1.cartographic_group(caps, policy, cancel).order();
  c.order2 = d2.cartographic_group(caps, policy, cancel).order();
  PermGroup diagonal({direct_sum(d1.sigma0(), d2.sigma0()), direct_sum(d1.sigma1(), d2.sigma1())},
                     std::move(caps), policy, std::move(cancel));
  c.diagonal_order = diagonal.order();
  // The diagonal projects onto both components, so its order is at least max(order1, order2).
  c.isomorphic = c.diagonal_order == c.order1 && c.diagonal_order == c.order2;
  c.reason = c.isomorphic ? "diagonal order equals component order"
                          : "diagonal order exceeds component order";
  return c;
}

bool regular_closures_isomorphic(const Dessin& d1, const Dessin& d2, Caps caps, ExecPolicy policy) {
  return compare_regular_closures(d1, d2, std::move(caps), policy).isomorphic;
}

}  // namespace dessinkit
