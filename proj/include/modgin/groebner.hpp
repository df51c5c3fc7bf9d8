#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modgin/ring.hpp"

namespace modgin {

/// Generators of an ideal. An empty list presents the zero ideal.
class IdealPresentation {
 public:
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_homogeneous() const noexcept;
  /// The same generators over another field of the same characteristic.
  IdealPresentation over(const RingPtr& target) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// Monomial ideal held by its minimal generators, sorted by degree and then
/// lexicographically decreasing. Membership is divisibility.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const Monomial& m) const noexcept;
  /// Every term lies in the ideal.
  bool contains(const Polynomial& f) const;
  /// All degree-d monomials of the ideal, lexicographically decreasing.
  std::vector<Monomial> degree_slice(unsigned d) const;
  /// Ideal generated by the generators of degree at most d.
  MonomialIdeal truncated(unsigned d) const;
  MonomialIdeal permuted(const Permutation& pi) const;
  IdealPresentation presentation() const;

  std::string to_string() const;
  bool operator==(const MonomialIdeal& o) const noexcept { return gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const noexcept { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Reduced Groebner basis: monic elements sorted by decreasing leading monomial.
/// With a degree cap, S-pairs above the cap were skipped.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::optional<unsigned> degree_cap;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. At each step the leading term is reduced by the first
/// divisor in list order whose leading monomial divides it; otherwise it moves
/// to the remainder. Throws ZeroDivisor on a zero divisor.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

/// (lcm/lt(f))*f - (lcm/lt(g))*g, with lt including the coefficient.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

struct BuchbergerOptions {
  std::optional<unsigned> degree_cap;
  std::size_t max_pairs = 200000;
};

/// Incremental Buchberger engine: normal selection strategy (smallest lcm
/// degree first, then pair index), coprime and chain criteria.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, MonomialOrder ord, BuchbergerOptions options = {});
  ~GroebnerEngine();
  GroebnerEngine(GroebnerEngine&&) noexcept;
  GroebnerEngine& operator=(GroebnerEngine&&) noexcept;

  /// Adds a generator. Returns false when it reduces to zero modulo the
  /// current basis (then nothing changes).
  bool add(const Polynomial& f);
  /// Processes all pending S-pairs within the cap.
  void complete();
  /// Full normal form against the current basis.
  Polynomial normal_form(const Polynomial& f) const;
  /// Completes the basis and tests whether f reduces to zero.
  bool contains(const Polynomial& f);
  GroebnerBasis reduced_basis();
  std::size_t pairs_created() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& options = {});

/// f reduces to zero by `divide`. Throws CapExceeded for a truncated basis and
/// f of larger degree.
bool membership(const Polynomial& f, const GroebnerBasis& gb);

/// Two-sided membership of generators.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const MonomialOrder& ord);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

}  // namespace modgin
