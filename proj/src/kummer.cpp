#include "dessinkit/kummer.hpp"

#include "dessinkit/error.hpp"

namespace dessinkit {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned mod_pow(unsigned base, unsigned exp, unsigned p) {
  unsigned long long r = 1, b = base % p;
  while (exp) {
    if (exp & 1U) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<unsigned>(r);
}

// Adds c * zeta^a t^b into coords, reducing zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
void add_term(std::vector<Rational>& coords, const TowerField& f, const Rational& c, unsigned a, unsigned b) {
  const unsigned p = f.p();
  a %= p;
  if (a < p - 1) {
    coords[f.index(a, b)] += c;
    return;
  }
  for (unsigned i = 0; i + 1 < p; ++i) coords[f.index(i, b)] -= c;
}

}  // namespace

TowerField::TowerField(unsigned p, Rational q) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::OutOfRange, "p = " + std::to_string(p) + " is not an odd prime");
  if (p > kMaxPrime) {
    fail(ErrorCode::OutOfRange, "p = " + std::to_string(p) + " exceeds the supported bound " + std::to_string(kMaxPrime));
  }
  q.canonicalize();
  if (q <= 0) fail(ErrorCode::OutOfRange, "q must be positive, got " + dessinkit::to_string(q));
  if (exact_root(q.get_num(), p) && exact_root(q.get_den(), p)) {
    fail(ErrorCode::IsPthPower, dessinkit::to_string(q) + " is a " + std::to_string(p) + "-th power in Q");
  }
  spec_ = std::make_shared<const Spec>(Spec{p, std::move(q)});
}

TowerElement::TowerElement(TowerField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.dimension()) {
    fail(ErrorCode::FieldMismatch, "expected " + std::to_string(field_.dimension()) + " coordinates, got " +
                                       std::to_string(coords_.size()));
  }
  for (auto& c : coords_) c.canonicalize();
}

TowerElement TowerElement::zero(const TowerField& f) { return {f, std::vector<Rational>(f.dimension(), Rational(0))}; }

TowerElement TowerElement::from_rational(const TowerField& f, const Rational& v) {
  auto e = zero(f);
  e.coords_[0] = v;
  return e;
}

TowerElement TowerElement::monomial(const TowerField& f, const Rational& c, unsigned long a, unsigned long b) {
  const unsigned p = f.p();
  Rational coef = c;
  for (unsigned long k = 0; k < b / p; ++k) coef *= f.q();
  auto e = zero(f);
  add_term(e.coords_, f, coef, static_cast<unsigned>(a % p), static_cast<unsigned>(b % p));
  return e;
}

TowerElement TowerElement::zeta(const TowerField& f) { return monomial(f, 1, 1, 0); }

TowerElement TowerElement::root(const TowerField& f) { return monomial(f, 1, 0, 1); }

bool TowerElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool TowerElement::is_rational() const {
  for (std::size_t k = 1; k < coords_.size(); ++k) {
    if (coords_[k] != 0) return false;
  }
  return true;
}

void TowerElement::check_same(const TowerElement& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "elements of different towers");
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
  check_same(o);
  auto r = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) r.coords_[k] += o.coords_[k];
  return r;
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
  check_same(o);
  auto r = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) r.coords_[k] -= o.coords_[k];
  return r;
}

TowerElement TowerElement::operator-() const {
  auto r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

TowerElement TowerElement::operator*(const Rational& c) const {
  auto r = *this;
  for (auto& v : r.coords_) v *= c;
  return r;
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
  check_same(o);
  const unsigned p = field_.p();
  auto r = zero(field_);
  Rational prod;
  for (unsigned j = 0; j < p; ++j) {
    for (unsigned i = 0; i + 1 < p; ++i) {
      const Rational& a = coords_[field_.index(i, j)];
      if (a == 0) continue;
      for (unsigned l = 0; l < p; ++l) {
        for (unsigned k = 0; k + 1 < p; ++k) {
          const Rational& b = o.coords_[field_.index(k, l)];
          if (b == 0) continue;
          prod = a * b;
          unsigned tdeg = j + l;
          if (tdeg >= p) {
            tdeg -= p;
            prod *= field_.q();
          }
          add_term(r.coords_, field_, prod, i + k, tdeg);
        }
      }
    }
  }
  return r;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in the tower");
  const std::size_t n = coords_.size();
  // Column k of the multiplication matrix is this * (basis element k).
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  const unsigned p = field_.p();
  for (unsigned j = 0; j < p; ++j) {
    for (unsigned i = 0; i + 1 < p; ++i) {
      const std::size_t k = field_.index(i, j);
      const auto col = *this * monomial(field_, 1, i, j);
      for (std::size_t row = 0; row < n; ++row) m[row][k] = col.coords_[row];
    }
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) {
      fail(ErrorCode::Internal, "zero divisor in Q(zeta_" + std::to_string(p) + ", t): t^" + std::to_string(p) +
                                    " - " + dessinkit::to_string(field_.q()) + " would be reducible");
    }
    std::swap(m[piv], m[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == c || m[row][c] == 0) continue;
      const Rational factor = m[row][c];
      for (std::size_t k = c; k <= n; ++k) m[row][k] -= factor * m[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t row = 0; row < n; ++row) x[row] = m[row][n];
  return {field_, std::move(x)};
}

TowerElement TowerElement::pow(long long k) const {
  TowerElement base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  TowerElement acc = from_rational(field_, 1);
  while (e) {
    if (e & 1ULL) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::string TowerElement::to_string() const {
  std::string out;
  const unsigned p = field_.p();
  for (unsigned j = 0; j < p; ++j) {
    for (unsigned i = 0; i + 1 < p; ++i) {
      const Rational& c = coords_[field_.index(i, j)];
      if (c == 0) continue;
      std::string mono;
      if (i > 0) mono += i == 1 ? "z" : "z^" + std::to_string(i);
      if (j > 0) mono += (mono.empty() ? "" : "*") + std::string(j == 1 ? "t" : "t^" + std::to_string(j));
      const Rational mag = abs(c);
      std::string term;
      if (mono.empty()) {
        term = dessinkit::to_string(mag);
      } else {
        term = mag == 1 ? mono : dessinkit::to_string(mag) + "*" + mono;
      }
      if (out.empty()) {
        out = (c < 0 ? "-" : "") + term;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  a.check_same(b);
  return a.coords_ == b.coords_;
}

GaloisElement compose(const GaloisElement& a, const GaloisElement& b, unsigned p) {
  return {static_cast<unsigned>((a.i + static_cast<unsigned long long>(a.u) * b.i) % p),
          static_cast<unsigned>(static_cast<unsigned long long>(a.u) * b.u % p)};
}

TowerElement galois_apply(const GaloisElement& g, const TowerElement& e) {
  const TowerField& f = e.field();
  const unsigned p = f.p();
  if (g.u % p == 0) fail(ErrorCode::NotAUnit, "u = " + std::to_string(g.u) + " is not a unit mod " + std::to_string(p));
  std::vector<Rational> out(f.dimension(), Rational(0));
  for (unsigned j = 0; j < p; ++j) {
    for (unsigned i = 0; i + 1 < p; ++i) {
      const Rational& c = e.coords()[f.index(i, j)];
      if (c == 0) continue;
      // zeta^i t^j -> zeta^(u i + g.i j) t^j
      const unsigned long long a = (static_cast<unsigned long long>(g.u % p) * i + static_cast<unsigned long long>(g.i % p) * j) % p;
      add_term(out, f, c, static_cast<unsigned>(a), j);
    }
  }
  return {f, std::move(out)};
}

std::vector<GaloisElement> galois_group(unsigned p) {
  std::vector<GaloisElement> out;
  out.reserve(static_cast<std::size_t>(p) * (p - 1));
  for (unsigned u = 1; u < p; ++u) {
    for (unsigned i = 0; i < p; ++i) out.push_back({i, u});
  }
  return out;
}

unsigned primitive_root(unsigned p) {
  if (p == 2) return 1;
  std::vector<unsigned> factors;
  unsigned n = p - 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned f : factors) ok = ok && mod_pow(g, (p - 1) / f, p) != 1;
    if (ok) return g;
  }
  fail(ErrorCode::Internal, "no primitive root mod " + std::to_string(p));
}

TowerElement j_invariant_of_triple(const CurveTriple& tr) {
  if (tr.a == tr.b || tr.a == tr.c || tr.b == tr.c) {
    fail(ErrorCode::DegenerateTriple, "branch points must be pairwise distinct");
  }
  const TowerField& f = tr.a.field();
  const TowerElement lambda = (tr.c - tr.a) / (tr.b - tr.a);
  const TowerElement one = TowerElement::from_rational(f, 1);
  const TowerElement lm1 = lambda - one;
  const TowerElement core = lambda * lm1 + one;  // lambda^2 - lambda + 1
  const TowerElement num = core * core * core * Rational(256);
  const TowerElement den = lambda * lambda * lm1 * lm1;
  return num / den;
}

}  // namespace dessinkit
