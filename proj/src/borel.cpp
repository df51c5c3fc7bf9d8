#include "modgin/borel.hpp"

namespace modgin {

bool lucas_dominated(unsigned s, unsigned e, unsigned p) noexcept {
  while (s) {
    if (s % p > e % p) return false;
    s /= p;
    e /= p;
  }
  return true;
}

BorelVerdict is_borel_fixed(const MonomialIdeal& ideal, const MonomialOrder& ord) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (ord.size() != n) throw RingMismatch("order size does not match the ring");
  const unsigned p = ring->characteristic();
  for (const auto& m : ideal.generators()) {
    for (std::size_t rj = 1; rj < n; ++rj) {
      const std::size_t j = ord.variable_at_rank(rj);
      const unsigned e = m[j];
      if (!e) continue;
      for (std::size_t ri = 0; ri < rj; ++ri) {
        const std::size_t i = ord.variable_at_rank(ri);
        for (unsigned s = 1; s <= e; ++s) {
          if (!lucas_dominated(s, e, p)) continue;
          Monomial moved = m;
          moved.set(j, e - s);
          moved.set(i, m[i] + s);
          if (!ideal.contains(moved)) return {false, BorelWitness{m, i, j, s, moved}};
        }
      }
    }
  }
  return {};
}

BorelVerdict is_borel_fixed(const MonomialIdeal& ideal) {
  return is_borel_fixed(ideal, MonomialOrder(OrderKind::lex, ideal.ring()->nvars()));
}

std::string describe(const BorelWitness& w, const RingContext& ring) {
  return ring.monomial_to_string(w.generator) + " → " + ring.monomial_to_string(w.moved);
}

bool randomized_borel_check(const MonomialIdeal& ideal, const MonomialOrder& ord, unsigned trials,
                            std::uint64_t seed, const FieldPtr& field) {
  const auto& ring = ideal.ring();
  if (field->characteristic() != ring->characteristic())
    throw InvalidCharacteristic("sampling field has the wrong characteristic");
  auto ext = ring->with_field(field);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(Polynomial::from_monomial(ext, g));
  Rng rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    auto a = sample_matrix(MatrixKind::borel, ring->nvars(), field, rng);
    for (const auto& g : gens) {
      Polynomial image = apply_matrix(g, a, ord);
      for (const auto& term : image.terms())
        if (!ideal.contains(term.monomial)) return false;
    }
  }
  return true;
}

}  // namespace modgin
