#include "dessinkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dessinkit/error.hpp"

namespace dessinkit {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  std::vector<Point> zero_based(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Point v = images[i];
    if (v < 1 || v > n) {
      fail(ErrorCode::PointOutOfRange, "image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v - 1]) fail(ErrorCode::RepeatedPoint, "image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    zero_based[i] = v - 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_images0(std::vector<Point> images) {
  return Permutation(std::move(images));
}

Point Permutation::image(Point point) const {
  if (point < 1 || point > degree()) {
    fail(ErrorCode::PointOutOfRange, "point " + std::to_string(point) + " outside 1.." + std::to_string(degree()));
  }
  return images_[point - 1] + 1;
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(images_);
  for (auto& v : out) ++v;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i + 1);
  }
  return 0;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const { return pow(Integer(static_cast<long>(exponent))); }

Permutation Permutation::pow(const Integer& exponent) const {
  const std::size_t n = images_.size();
  std::vector<Point> out(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    cycle.clear();
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    Integer shift_z;
    mpz_fdiv_r_ui(shift_z.get_mpz_t(), exponent.get_mpz_t(), cycle.size());
    const std::size_t shift = shift_z.get_ui();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out[cycle[i]] = cycle[(i + shift) % cycle.size()];
    }
  }
  return Permutation(std::move(out));
}

std::vector<std::vector<Point>> Permutation::cycles(bool include_fixed) const {
  const std::size_t n = images_.size();
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p + 1);
    }
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose_right(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    fail(ErrorCode::DegreeMismatch,
         "degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  auto ai = a.images0();
  auto bi = b.images0();
  std::vector<Point> out(ai.size());
  for (std::size_t i = 0; i < ai.size(); ++i) out[i] = bi[ai[i]];
  return Permutation::from_images0(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a * b * a.inverse() * b.inverse();
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  const auto n = static_cast<Point>(a.degree());
  std::vector<Point> out(a.images0().begin(), a.images0().end());
  for (Point v : b.images0()) out.push_back(v + n);
  return Permutation::from_images0(std::move(out));
}

CycleInfo order_and_cycle_type(const Permutation& a) {
  CycleInfo info;
  info.order = 1;
  for (const auto& cycle : a.cycles(true)) {
    info.cycle_type.push_back(cycle.size());
    mpz_lcm_ui(info.order.get_mpz_t(), info.order.get_mpz_t(), cycle.size());
  }
  std::sort(info.cycle_type.rbegin(), info.cycle_type.rend());
  return info;
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree_, false);
    skip_ws();
    while (pos_ < text_.size()) {
      expect('(');
      std::vector<Point> cycle;
      skip_ws();
      if (peek() != ')') {
        cycle.push_back(number());
        skip_ws();
        while (peek() == ',') {
          ++pos_;
          cycle.push_back(number());
          skip_ws();
        }
      }
      expect(')');
      for (Point p : cycle) {
        if (used[p]) fail(ErrorCode::RepeatedPoint, "point " + std::to_string(p + 1) + " occurs twice");
        used[p] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return Permutation::from_images0(std::move(images));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(ErrorCode::SyntaxError,
           std::string("expected '") + c + "' at offset " + std::to_string(pos_) + " in cycle text");
    }
    ++pos_;
  }

  Point number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 12) {
      fail(ErrorCode::SyntaxError, "expected a point at offset " + std::to_string(start));
    }
    auto value = std::stoull(std::string(text_.substr(start, pos_ - start)));
    if (value < 1 || value > degree_) {
      fail(ErrorCode::PointOutOfRange,
           "point " + std::to_string(value) + " outside 1.." + std::to_string(degree_));
    }
    return static_cast<Point>(value - 1);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images0()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace dessinkit
