#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "modgin/action.hpp"

namespace modgin {

/// A generator m and a move x_j^s -> x_i^s (x_i ranked above x_j) whose result
/// is outside the ideal. Indices are variable indices.
struct BorelWitness {
  Monomial generator;
  std::size_t i = 0;
  std::size_t j = 0;
  unsigned s = 0;
  Monomial moved;
};

struct BorelVerdict {
  bool fixed = true;
  std::optional<BorelWitness> witness;
};

/// Each base-p digit of s is at most the matching digit of e, i.e.
/// binomial(e, s) is nonzero mod p.
bool lucas_dominated(unsigned s, unsigned e, unsigned p) noexcept;

/// Characteristic-p Borel criterion with respect to the variable ranking of
/// `ord`; p is the characteristic of the ideal's ring. Generators are scanned
/// in the ideal's canonical order, then j, i and s ascending by rank.
BorelVerdict is_borel_fixed(const MonomialIdeal& ideal, const MonomialOrder& ord);
BorelVerdict is_borel_fixed(const MonomialIdeal& ideal);

/// "x3^2 -> x2*x3" (with a unicode arrow).
std::string describe(const BorelWitness& w, const RingContext& ring);

/// Applies `trials` sampled Borel matrices over `field` (columns acting by the
/// ranks of `ord`) to each generator and tests every term of the image.
bool randomized_borel_check(const MonomialIdeal& ideal, const MonomialOrder& ord, unsigned trials,
                            std::uint64_t seed, const FieldPtr& field);

}  // namespace modgin
