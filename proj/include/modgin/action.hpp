#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modgin/groebner.hpp"

namespace modgin {

/// n x n matrix over a finite field, row-major.
class SquareMatrix {
 public:
  SquareMatrix(FieldPtr field, std::size_t n);
  static SquareMatrix identity(FieldPtr field, std::size_t n);
  /// Rows of integers reduced mod p (test and catalog convenience).
  static SquareMatrix from_rows(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  Field::Elem at(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Field::Elem v) noexcept { entries_[i * n_ + j] = v; }
  FieldElement element(std::size_t i, std::size_t j) const { return {field_, at(i, j)}; }

  SquareMatrix operator*(const SquareMatrix& o) const;
  bool operator==(const SquareMatrix& o) const;
  Field::Elem determinant() const;
  bool is_invertible() const { return determinant() != Field::kZero; }
  bool is_upper_triangular() const noexcept;
  /// Upper triangular with nonzero diagonal.
  bool is_borel() const noexcept;
  /// Throws NotInvertible.
  SquareMatrix inverse() const;
  /// The matrix acting on variable indices when its rows and columns refer to
  /// the ranks of `ord`: result(pi(i), pi(j)) = at(i, j).
  SquareMatrix reindexed(const MonomialOrder& ord) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Field::Elem> entries_;
};

enum class MatrixKind { gl, borel };

/// gl: uniform entries, rejection-sampled until invertible. borel: uniform
/// nonzero diagonal, uniform strictly-upper entries, zero below.
SquareMatrix sample_matrix(MatrixKind kind, std::size_t n, const FieldPtr& field, Rng& rng);
SquareMatrix sample_matrix(MatrixKind kind, std::size_t n, const FieldPtr& field, std::uint64_t seed);

/// Linear substitution: the variable of rank j in `ord` maps to
/// sum_i a(i, j) * (variable of rank i). With the identity ranking this is
/// x_j -> a_1j x_1 + ... + a_nj x_n.
Polynomial apply_matrix(const Polynomial& f, const SquareMatrix& a, const MonomialOrder& ord);
Polynomial apply_matrix(const Polynomial& f, const SquareMatrix& a);
IdealPresentation apply_matrix(const IdealPresentation& ideal, const SquareMatrix& a, const MonomialOrder& ord);

Monomial permute_monomial(const Monomial& m, const Permutation& pi);
/// x_i -> x_{pi(i)}.
Polynomial permute_polynomial(const Polynomial& f, const Permutation& pi);
IdealPresentation permute_ideal(const IdealPresentation& ideal, const Permutation& pi);

}  // namespace modgin
