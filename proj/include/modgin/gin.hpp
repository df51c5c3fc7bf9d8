#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modgin/borel.hpp"

namespace modgin {

struct GinOptions {
  unsigned trials = 16;
  std::uint64_t seed = 0;
  /// Sampling field; null selects Field::sampling(p).
  FieldPtr field;
  MatrixKind sampler = MatrixKind::gl;
  /// Worker threads for the trials (results do not depend on it).
  unsigned threads = 1;
  BuchbergerOptions groebner;
};

struct GinReport {
  MonomialIdeal result;
  unsigned trials = 0;
  unsigned agreeing = 0;
  std::uint64_t field_size = 0;
  std::vector<std::uint64_t> per_trial_seeds;
  bool borel_fixed = false;

  double agreement() const noexcept { return trials ? double(agreeing) / trials : 0.0; }
};

/// Initial ideal of each trial's transformed ideal, grouped: (ideal, count),
/// most frequent first, ties by first occurrence.
std::vector<std::pair<MonomialIdeal, unsigned>> gin_outcomes(const IdealPresentation& ideal,
                                                             const MonomialOrder& ord, const GinOptions& options);

/// Strict-majority initial ideal over random coordinate changes. Throws
/// NotHomogeneous and NoMajority.
GinReport gin(const IdealPresentation& ideal, const MonomialOrder& ord, const GinOptions& options = {});

enum class SliceRoute { automatic, direct, dual };

/// Degree-d monomials of the generic initial ideal from one generic matrix,
/// by linear algebra on I_d (spanned by generator multiples) without any
/// Groebner basis. direct: transform a basis of I_d and take leftmost pivots.
/// dual: transform the annihilator of I_d in the divided-power dual and take
/// the complement of its rightmost pivots. Returns monomials in decreasing
/// `ord` order.
std::vector<Monomial> gin_degree_slice(const IdealPresentation& ideal, unsigned d, const MonomialOrder& ord,
                                       const FieldPtr& field, std::uint64_t seed,
                                       SliceRoute route = SliceRoute::automatic);

struct PermutationCheck {
  bool holds = false;
  MonomialIdeal permuted_order_gin;  // gin under ord.permuted(pi)
  MonomialIdeal permuted_gin;        // pi(gin under ord)
};

/// gin_{>_pi}(I) = pi(gin_>(I)), both sides computed with independent seeds.
PermutationCheck check_permutation_theorem(const IdealPresentation& ideal, const MonomialOrder& ord,
                                           const Permutation& pi, const GinOptions& options = {});

}  // namespace modgin
