#include "dessinkit/free_word.hpp"

#include <algorithm>
#include <cctype>

#include "dessinkit/error.hpp"

namespace dessinkit {

namespace {

// Appends with free reduction against the tail of `out`.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exponent == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exponent += s.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(std::move(s));
}

constexpr long long kMaxGroupPower = 100000;

}  // namespace

FreeWord FreeWord::x(const Integer& exponent) { return from_syllables({{Generator::X, exponent}}); }

FreeWord FreeWord::y(const Integer& exponent) { return from_syllables({{Generator::Y, exponent}}); }

FreeWord FreeWord::from_syllables(std::vector<Syllable> syllables) {
  FreeWord w;
  for (auto& s : syllables) push_reduced(w.syllables_, std::move(s));
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->gen, -it->exponent});
  }
  return w;
}

FreeWord FreeWord::pow(long long exponent) const {
  if (syllables_.size() == 1) {
    return from_syllables({{syllables_[0].gen, syllables_[0].exponent * Integer(static_cast<long>(exponent))}});
  }
  if (exponent > kMaxGroupPower || exponent < -kMaxGroupPower) {
    fail(ErrorCode::SyntaxError, "power of a compound word exceeds " + std::to_string(kMaxGroupPower));
  }
  const FreeWord base = exponent < 0 ? inverse() : *this;
  FreeWord out;
  for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
  return out;
}

Integer FreeWord::letter_count() const {
  Integer total = 0;
  for (const auto& s : syllables_) total += abs(s.exponent);
  return total;
}

Integer FreeWord::occurrences(Generator g) const {
  Integer total = 0;
  for (const auto& s : syllables_) {
    if (s.gen == g) total += abs(s.exponent);
  }
  return total;
}

Integer FreeWord::exponent_sum(Generator g) const {
  Integer total = 0;
  for (const auto& s : syllables_) {
    if (s.gen == g) total += s.exponent;
  }
  return total;
}

std::string FreeWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.gen == Generator::X ? 'x' : 'y';
    if (s.exponent != 1) out += "^" + s.exponent.get_str();
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Syllable> all = a.syllables();
  all.insert(all.end(), b.syllables().begin(), b.syllables().end());
  return FreeWord::from_syllables(std::move(all));
}

FreeWord commutator_word(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  FreeWord parse() {
    FreeWord w = sequence();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_) + " in word '" +
                                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  FreeWord sequence() {
    FreeWord w;
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        continue;
      }
      if (c == 'x' || c == 'y' || c == '(' || c == '[' || c == '1') {
        w = w * factor();
      } else {
        return w;
      }
    }
  }

  FreeWord factor() {
    char c = peek();
    FreeWord atom;
    bool single_generator = false;
    if (c == 'x' || c == 'y') {
      ++pos_;
      atom = c == 'x' ? FreeWord::x() : FreeWord::y();
      single_generator = true;
    } else if (c == '1') {
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      atom = sequence();
      if (peek() != ')') error("expected ')'");
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      FreeWord a = sequence();
      if (peek() != ',') error("expected ',' in commutator");
      ++pos_;
      FreeWord b = sequence();
      if (peek() != ']') error("expected ']'");
      ++pos_;
      atom = commutator_word(a, b);
    } else {
      error("expected a generator");
    }
    if (peek() != '^') return atom;
    ++pos_;
    Integer k = exponent();
    if (single_generator) {
      return FreeWord::from_syllables({{atom.syllables()[0].gen, k}});
    }
    if (!k.fits_slong_p()) error("exponent too large for a compound word");
    return atom.pow(k.get_si());
  }

  Integer exponent() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an exponent");
    Integer k(std::string(text_.substr(start, pos_ - start)), 10);
    return negative ? Integer(-k) : k;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord parse_word(std::string_view text) { return WordParser(text).parse(); }

Permutation evaluate_word(const FreeWord& w, const Permutation& mx, const Permutation& my) {
  if (mx.degree() != my.degree()) {
    fail(ErrorCode::DegreeMismatch,
         "degrees " + std::to_string(mx.degree()) + " and " + std::to_string(my.degree()));
  }
  Permutation result = Permutation::identity(mx.degree());
  for (const auto& s : w.syllables()) {
    const Permutation& g = s.gen == Generator::X ? mx : my;
    result = result * g.pow(s.exponent);
  }
  return result;
}

}  // namespace dessinkit
