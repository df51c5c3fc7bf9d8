#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modgin/gin.hpp"

namespace modgin {

/// Which end of each Jordan chain is the invariant coordinate.
///   fixed_first: sigma(v_0) = v_0, sigma(v_c) = v_c + v_{c-1}
///   fixed_last:  sigma(v_{n-1}) = v_{n-1}, sigma(v_c) = v_c + v_{c+1}
/// With fixed_last every leading prefix of a block is a submodule of V.
enum class Orientation { fixed_first, fixed_last };

/// V = V_{n_1} + ... + V_{n_k} over F_p, acting on the coordinate ring by a
/// unipotent Jordan block per summand. `placement` lists, for each block, the
/// variable index of each chain coordinate v_0, v_1, ...; by default blocks
/// occupy consecutive variables.
class CyclicModule {
 public:
  CyclicModule(std::uint32_t p, std::vector<unsigned> blocks, Orientation orientation = Orientation::fixed_first);
  CyclicModule(std::uint32_t p, std::vector<unsigned> blocks, Orientation orientation,
               std::vector<std::vector<std::size_t>> placement, std::vector<std::string> names);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<unsigned>& blocks() const noexcept { return blocks_; }
  Orientation orientation() const noexcept { return orientation_; }
  const std::vector<std::vector<std::size_t>>& placement() const noexcept { return placement_; }
  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  bool is_fixed_variable(std::size_t v) const;
  /// Short shape text such as "V2+V3" or "2V2".
  std::string shape() const;

  /// Substitution matrix of sigma: x_v -> sum_u S(u, v) x_u.
  SquareMatrix sigma_matrix() const;
  Polynomial sigma(const Polynomial& f) const;
  bool is_invariant(const Polynomial& f) const;
  /// Sum of sigma^t(f) for t = 0..p-1.
  Polynomial transfer(const Polynomial& f) const;

  /// True when x_1..x_k span the dual of a submodule W, i.e. the span of
  /// x_{k+1}..x_n is sigma-stable.
  bool is_submodule_prefix(std::size_t k) const;
  /// W on the first k variables. Throws NotASubmodule.
  CyclicModule submodule(std::size_t k) const;
  /// phi*: x_i -> x_i for i <= k, x_i -> 0 otherwise, into submodule(k).ring().
  Polynomial restrict(const Polynomial& f, std::size_t k) const;

 private:
  void build();
  std::uint32_t p_;
  std::vector<unsigned> blocks_;
  Orientation orientation_;
  std::vector<std::vector<std::size_t>> placement_;
  RingPtr ring_;
};

/// Parses "V3", "2V2", "V2+V3", "2V2+3V3" into block sizes.
std::vector<unsigned> parse_module_shape(std::string_view text);

enum class TransferCandidates {
  /// Monomials in the non-fixed variables with exponents below p: a basis of
  /// F[V] over the invariant subalgebra generated by the fixed variables and
  /// the norms, on which the transfer is linear.
  module_basis,
  /// Every monomial of degree at most the bound.
  all_monomials,
};

/// Nonzero transfers of candidate monomials of degree <= degree_bound, in
/// increasing degree, each kept only when it is not in the ideal of those kept
/// before (grevlex basis truncated at the bound). Throws Degenerate for a zero
/// bound.
IdealPresentation transfer_ideal_gens(const CyclicModule& m, unsigned degree_bound,
                                      TransferCandidates candidates = TransferCandidates::module_basis);

/// Sum of n_j (p - 1) over the blocks.
unsigned default_transfer_bound(const CyclicModule& m);

enum class HilbertShape { lV2mV3, V4, V5 };

struct HilbertCatalogEntry {
  HilbertShape shape;
  unsigned l = 0;
  unsigned m = 0;
  CyclicModule module;
  IdealPresentation ideal;
};

/// Known generating sets of Hilbert ideals. lV2mV3 uses variables
/// x_{l+m} > ... > x_1 > y_{l+m} > ... > y_1 > z_{l+m} > ... > z_{l+1}.
/// V5 at p = 5 is the identity instance of the alpha-parameterized list.
HilbertCatalogEntry hilbert_ideal_gens(HilbertShape shape, std::uint32_t p, unsigned l = 0, unsigned m = 0);

struct V5Coefficients {
  FieldElement C;
  FieldElement D;
  FieldElement C0;
  FieldElement D0;
};

/// C, D, C0, D0 for an upper triangular invertible 5 x 5 matrix (entries
/// alpha_ij at (i-1, j-1)). Throws NotBorel, NotInvertible.
V5Coefficients v5_coefficients(const SquareMatrix& alpha);

/// Generators of alpha(H(V5)) from the coefficients, over the matrix's field:
/// for p > 5 the list with f3 = x3^2 + C x2x3 + D x2x4, for p = 5 the list with
/// C0 x2x4^2 + D0 x3x4^2. Throws InvalidCharacteristic for p < 5.
IdealPresentation v5_alpha_gens(const SquareMatrix& alpha);

/// The generic initial ideal of H(V5) named in the literature: for p >= 7 the
/// set A under grevlex and B under lex, for p = 5 the set A' under both.
MonomialIdeal v5_gin_catalog(std::uint32_t p, OrderKind kind);

struct HeredityReport {
  unsigned bound = 0;
  bool v_borel = false;
  bool w_borel = false;
  bool implication_holds = false;
  /// Each generator Tr_W(h) equals phi*(Tr_V(h')) for the monomial lift h'.
  bool surjective = false;
  /// phi* maps the generators of T(V) into T(W).
  bool image_in_tw = false;
  MonomialIdeal in_v;
  MonomialIdeal in_w;
};

/// Truncated In(T(V)) and In(T(W)) under grevlex (x1 > ... > xn) up to the
/// bound, their Borel verdicts and the lemma's lifting of generators.
HeredityReport check_transfer_heredity(const CyclicModule& m, std::size_t k, std::optional<unsigned> bound = {});

/// In(phi*(f)) = phi*(In(f)) under grevlex, for f whose leading monomial
/// survives phi*. Returns nullopt when it does not.
std::optional<bool> initial_term_commutes(const CyclicModule& m, std::size_t k, const Polynomial& f);

}  // namespace modgin
