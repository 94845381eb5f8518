// Conjugate j-invariants. Each automorphism is independent, so the OpenMP path fills the
// same slots the serial loop would, and the report is identical under either policy.

#include "dessinkit/error.hpp"
#include "dessinkit/kummer.hpp"

namespace dessinkit {

namespace {

TowerElement conjugate_j(const TowerField& f, const GaloisElement& g, const Rational& gamma) {
  const TowerElement zero = TowerElement::zero(f);
  const TowerElement b = TowerElement::from_rational(f, 1) - galois_apply(g, TowerElement::zeta(f));
  const TowerElement c = galois_apply(g, TowerElement::root(f)) * gamma;
  return j_invariant_of_triple({zero, b, c});
}

}  // namespace

ConjugateReport conjugate_triples_distinct(const TowerField& field, const Rational& gamma, ExecPolicy policy) {
  if (gamma == 0) fail(ErrorCode::OutOfRange, "gamma must be nonzero");
  ConjugateReport r;
  r.automorphisms = galois_group(field.p());
  const std::size_t count = r.automorphisms.size();
  std::vector<TowerElement> values(count, TowerElement::zero(field));

  if (policy == ExecPolicy::Serial) {
    for (std::size_t k = 0; k < count; ++k) values[k] = conjugate_j(field, r.automorphisms[k], gamma);
  } else {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      values[idx] = conjugate_j(field, r.automorphisms[idx], gamma);
    }
  }

  const TowerElement base = conjugate_j(field, GaloisElement{0, 1}, gamma);
  for (std::size_t k = 0; k < count; ++k) {
    if (!(galois_apply(r.automorphisms[k], base) == values[k])) r.equivariant = false;
    for (std::size_t l = 0; l < k; ++l) {
      if (values[l] == values[k]) r.collisions.emplace_back(l, k);
    }
  }
  r.j_values = std::move(values);
  return r;
}

}  // namespace dessinkit
