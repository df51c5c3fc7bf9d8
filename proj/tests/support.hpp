#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "modgin/groebner.hpp"

namespace modgin::testing {

inline RingPtr ring_of(std::size_t n, std::uint32_t p) { return RingContext::standard(n, Field::prime(p)); }

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline MonomialIdeal monomial_ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Monomial> gens;
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring).terms().front().monomial);
  return MonomialIdeal(ring, std::move(gens));
}

inline Monomial random_monomial(Rng& rng, std::size_t n, unsigned max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<unsigned>(uniform_below(rng, max_exp + 1)));
  return m;
}

inline Monomial random_monomial_of_degree(Rng& rng, std::size_t n, unsigned d) {
  Monomial m(n);
  for (unsigned k = 0; k < d; ++k) {
    auto v = uniform_below(rng, n);
    m.set(v, m[v] + 1);
  }
  return m;
}

inline Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::size_t terms, unsigned max_exp) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i)
    ts.push_back({random_monomial(rng, ring->nvars(), max_exp), ring->field()->random_nonzero(rng)});
  return Polynomial::from_terms(ring, std::move(ts));
}

inline Polynomial random_homogeneous(Rng& rng, const RingPtr& ring, std::size_t terms, unsigned degree) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i)
    ts.push_back({random_monomial_of_degree(rng, ring->nvars(), degree), ring->field()->random_nonzero(rng)});
  return Polynomial::from_terms(ring, std::move(ts));
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[uniform_below(rng, i)]);
  return Permutation(images);
}

inline std::string show(const MonomialIdeal& I) { return I.to_string(); }

}  // namespace modgin::testing
