#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modgin/errors.hpp"
#include "modgin/random.hpp"

namespace modgin {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// A finite field F_q, q = p^k, in polynomial-basis representation over a
/// primitive monic modulus. Elements are handled as discrete logarithms to the
/// class x of the modulus (Zech logarithms for addition), which makes every
/// operation a table lookup. Instances are immutable and shared; obtain them
/// through the factory functions, which cache by (p, k, seed).
class Field {
 public:
  using Elem = std::uint32_t;
  static constexpr Elem kZero = UINT32_MAX;
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

  static FieldPtr prime(std::uint32_t p);
  /// Seeded random search for a monic irreducible (and primitive) modulus of
  /// degree k. Deterministic for fixed arguments.
  static FieldPtr extension(std::uint32_t p, std::uint32_t k, std::uint64_t seed = 0);
  /// Smallest extension of F_p with at least `min_size` elements.
  static FieldPtr sampling(std::uint32_t p, std::uint64_t seed = 0,
                           std::uint64_t min_size = std::uint64_t{1} << 20);
  static std::uint32_t degree_for_size(std::uint32_t p, std::uint64_t min_size);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return q_; }
  std::uint64_t seed() const noexcept { return seed_; }
  /// Coefficients (low to high) of the monic modulus; {0, 1} for a prime field.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool same_as(const Field& other) const noexcept;

  Elem zero() const noexcept { return kZero; }
  Elem one() const noexcept { return 0; }
  bool is_zero(Elem a) const noexcept { return a == kZero; }

  Elem from_int(std::int64_t n) const noexcept;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  /// Residue in [0, p) when `a` lies in the prime subfield.
  std::optional<std::uint32_t> prime_residue(Elem a) const noexcept;

  Elem add(Elem a, Elem b) const noexcept {
    if (a == kZero) return b;
    if (b == kZero) return a;
    std::uint32_t d = b >= a ? b - a : b + order_ - a;
    Elem z = zech_[d];
    if (z == kZero) return kZero;
    std::uint32_t r = a + z;
    return r >= order_ ? r - order_ : r;
  }
  Elem neg(Elem a) const noexcept {
    if (a == kZero || p_ == 2) return a;
    std::uint32_t r = a + half_;
    return r >= order_ ? r - order_ : r;
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == kZero || b == kZero) return kZero;
    std::uint32_t r = a + b;
    return r >= order_ ? r - order_ : r;
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  Elem random(Rng& rng) const;
  Elem random_nonzero(Rng& rng) const;

  std::string to_string(Elem a) const;

 private:
  struct Token {};

 public:
  Field(Token, std::uint32_t p, std::uint32_t k, std::uint64_t seed, std::vector<std::uint32_t> modulus,
        std::uint32_t generator);

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t q_;
  std::uint64_t seed_;
  std::uint32_t order_;  // q - 1
  std::uint32_t half_;   // log(-1) for odd p
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // log -> encoding sum c_i p^i
  std::vector<Elem> zech_;           // n -> log(1 + g^n)
  std::vector<Elem> residue_log_;    // residue in [0,p) -> log
};

/// Value-semantics wrapper pairing a raw element with its field. Arithmetic
/// between elements of different fields throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Elem raw) : field_(std::move(field)), raw_(raw) {}
  static FieldElement from_int(FieldPtr field, std::int64_t n) {
    auto raw = field->from_int(n);
    return {std::move(field), raw};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Field::Elem raw() const noexcept { return raw_; }
  bool is_zero() const noexcept { return raw_ == Field::kZero; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(raw_); }
  std::string to_string() const { return field_->to_string(raw_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(raw_)}; }
  FieldElement inv() const { return {field_, field_->inv(raw_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(raw_, e)}; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  Field::Elem raw_;
};

}  // namespace modgin
