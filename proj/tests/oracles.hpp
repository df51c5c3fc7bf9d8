#pragma once

// Independent reference computations used to validate the library. They share
// only the polynomial container with the code under test.

#include <cstdint>
#include <vector>

#include "modgin/groebner.hpp"

namespace modgin::oracle {

/// True when the monic polynomial (coefficients low to high) has no monic
/// factor of degree 1..deg/2 over F_p, found by trial division over all
/// candidates.
bool irreducible_by_trial_division(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Ring endomorphism x_i -> images[i], expanded by plain multiplication.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Sum of g(f) over the cyclic group generated by the substitution sigma,
/// with g = sigma^t computed as t successive substitutions.
Polynomial literal_group_sum(const Polynomial& f, const std::vector<Polynomial>& sigma, std::uint32_t order);

/// Closure of a monomial ideal in three variables over F_2 under all 8
/// upper-unitriangular substitutions, checked term by term.
bool borel_fixed_exhaustive_f2(const MonomialIdeal& ideal);

/// Basis of the degree-d invariants of the substitution sigma over a prime
/// field: the kernel of sigma - 1 on the degree-d monomials, by dense
/// Gaussian elimination on integer residues.
std::vector<Polynomial> invariants_of_degree(const RingPtr& ring, const std::vector<Polynomial>& sigma, unsigned d);

}  // namespace modgin::oracle
