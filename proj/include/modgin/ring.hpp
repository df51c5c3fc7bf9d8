#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modgin/field.hpp"

namespace modgin {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of fixed capacity. Unused slots stay zero, so equality,
/// hashing and the lexicographic comparison ignore the variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t degree() const noexcept { return deg_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned exponent);
  bool is_one() const noexcept { return deg_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Bit i set iff the exponent of variable i is positive.
  std::uint32_t support_mask() const noexcept;

  bool operator==(const Monomial& other) const noexcept { return e_ == other.e_; }
  /// Lexicographic on exponents (x1 > x2 > ...); the storage order of Polynomial.
  std::strong_ordering operator<=>(const Monomial& other) const noexcept { return e_ <=> other.e_; }
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree d in n variables, lexicographically decreasing.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// A permutation pi of {0..n-1}, acting on variables by x_i -> x_{pi(i)}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  static Permutation from_one_based(const std::vector<std::size_t>& images);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// (*this after other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const;
  Monomial apply(const Monomial& m) const;
  std::string to_string() const;  // one-based images

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

enum class OrderKind { lex, grevlex };

/// lex or grevlex, with the variables ranked x_{pi(1)} > x_{pi(2)} > ... .
/// The identity permutation gives the usual x1 > x2 > ... > xn.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, Permutation perm);

  OrderKind kind() const noexcept { return kind_; }
  const Permutation& perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }
  /// Variable index holding rank r (rank 0 is the largest variable).
  std::size_t variable_at_rank(std::size_t r) const noexcept { return perm_(r); }
  std::size_t rank_of(std::size_t var) const noexcept { return rank_[var]; }

  /// -1, 0, +1. Throws RingMismatch on monomials of another size.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Unchecked comparison for inner loops.
  int cmp(const Monomial& a, const Monomial& b) const noexcept {
    return kind_ == OrderKind::lex ? cmp_lex(a, b) : cmp_grevlex(a, b);
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return cmp(a, b) > 0; }

  /// The order >_pi: pi(m1) >_pi pi(m2) iff m1 > m2.
  MonomialOrder permuted(const Permutation& pi) const;
  std::string name() const;

  bool operator==(const MonomialOrder& o) const noexcept { return kind_ == o.kind_ && perm_ == o.perm_; }

 private:
  int cmp_lex(const Monomial& a, const Monomial& b) const noexcept {
    for (std::size_t r = 0; r < n_; ++r) {
      auto v = perm_(r);
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  int cmp_grevlex(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t r = n_; r-- > 0;) {
      auto v = perm_(r);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_;
  Permutation perm_;
  std::vector<std::size_t> rank_;
  std::size_t n_;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// F[x_1..x_n] with named variables.
class RingContext {
 public:
  static constexpr std::uint32_t kDefaultMaxDegree = 10000;

  static RingPtr make(std::vector<std::string> names, FieldPtr field,
                      std::uint32_t max_degree = kDefaultMaxDegree);
  /// Variables x1..xn.
  static RingPtr standard(std::size_t nvars, FieldPtr field, std::string_view prefix = "x");

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_->characteristic(); }
  std::uint32_t max_degree() const noexcept { return max_degree_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Same variables over another field of the same characteristic.
  RingPtr with_field(FieldPtr field) const;
  bool same_as(const RingContext& other) const noexcept;

  std::string monomial_to_string(const Monomial& m) const;

  RingContext(std::vector<std::string> names, FieldPtr field, std::uint32_t max_degree);

 private:
  std::vector<std::string> names_;
  FieldPtr field_;
  std::uint32_t max_degree_;
};

struct Term {
  Monomial monomial;
  Field::Elem coeff;
};

/// Sparse polynomial: terms with nonzero coefficients, kept in decreasing
/// lexicographic order of exponents. Monomial orders are parameters of the
/// operations that need them, never part of the data.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial from_monomial(RingPtr ring, const Monomial& m);
  static Polynomial from_monomial(RingPtr ring, const Monomial& m, Field::Elem coeff);
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return *ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint32_t total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  FieldElement coefficient(const Monomial& m) const;
  /// Largest monomial under `ord` with its coefficient. Throws ZeroPolynomial.
  std::pair<Monomial, FieldElement> leading_term(const MonomialOrder& ord) const;
  Monomial leading_monomial(const MonomialOrder& ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(Field::Elem c) const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, Field::Elem c) const;
  Polynomial pow(unsigned e) const;
  /// Divide by the leading coefficient under `ord`.
  Polynomial monic(const MonomialOrder& ord) const;

  /// Coefficient embedding into a ring with the same variables and characteristic.
  /// The source field must be the prime field or the target field itself.
  Polynomial over(RingPtr target) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Terms in decreasing `ord` order; coefficients as symmetric residues.
  std::string to_string(const MonomialOrder& ord) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void require_same_ring(const Polynomial& o) const;
  friend Polynomial add_sorted(const Polynomial&, const Polynomial&, bool);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parse `text` with the grammar
///   poly ::= ['-'] term (('+'|'-') term)*
///   term ::= [coeff '*'] factor ('*' factor)* | coeff
///   factor ::= name ['^' positive-int]
/// Integer coefficients are reduced mod p; whitespace is insignificant.
/// `line` is reported in SyntaxError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1);

/// Coefficient text for printing: symmetric residue for prime-subfield values.
std::string coefficient_to_string(const Field& field, Field::Elem c, bool& negative);

}  // namespace modgin
