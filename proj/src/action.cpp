#include "modgin/action.hpp"

#include <map>
#include <unordered_map>

namespace modgin {

SquareMatrix::SquareMatrix(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, Field::kZero) {}

SquareMatrix SquareMatrix::identity(FieldPtr field, std::size_t n) {
  SquareMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.field_->one());
  return m;
}

SquareMatrix SquareMatrix::from_rows(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
  SquareMatrix m(std::move(field), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, m.field_->from_int(rows[i][j]));
  }
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  if (o.n_ != n_) throw DimensionMismatch("matrix sizes differ");
  if (!field_->same_as(*o.field_)) throw SpecMismatch("matrices over different fields");
  const Field& f = *field_;
  SquareMatrix r(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      Field::Elem a = at(i, k);
      if (a == Field::kZero) continue;
      for (std::size_t j = 0; j < n_; ++j) r.set(i, j, f.add(r.at(i, j), f.mul(a, o.at(k, j))));
    }
  return r;
}

bool SquareMatrix::operator==(const SquareMatrix& o) const {
  return n_ == o.n_ && field_->same_as(*o.field_) && entries_ == o.entries_;
}

Field::Elem SquareMatrix::determinant() const {
  const Field& f = *field_;
  std::vector<Field::Elem> m = entries_;
  Field::Elem det = f.one();
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == Field::kZero) ++piv;
    if (piv == n_) return Field::kZero;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      det = f.neg(det);
    }
    Field::Elem pv = m[c * n_ + c];
    det = f.mul(det, pv);
    Field::Elem pinv = f.inv(pv);
    for (std::size_t r = c + 1; r < n_; ++r) {
      Field::Elem factor = f.mul(m[r * n_ + c], pinv);
      if (factor == Field::kZero) continue;
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] = f.sub(m[r * n_ + j], f.mul(factor, m[c * n_ + j]));
    }
  }
  return det;
}

bool SquareMatrix::is_upper_triangular() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (at(i, j) != Field::kZero) return false;
  return true;
}

bool SquareMatrix::is_borel() const noexcept {
  if (!is_upper_triangular()) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (at(i, i) == Field::kZero) return false;
  return true;
}

SquareMatrix SquareMatrix::inverse() const {
  const Field& f = *field_;
  std::vector<Field::Elem> m = entries_;
  SquareMatrix inv = identity(field_, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == Field::kZero) ++piv;
    if (piv == n_) throw NotInvertible("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m[piv * n_ + j], m[c * n_ + j]);
        std::swap(inv.entries_[piv * n_ + j], inv.entries_[c * n_ + j]);
      }
    Field::Elem pinv = f.inv(m[c * n_ + c]);
    for (std::size_t j = 0; j < n_; ++j) {
      m[c * n_ + j] = f.mul(m[c * n_ + j], pinv);
      inv.entries_[c * n_ + j] = f.mul(inv.entries_[c * n_ + j], pinv);
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c) continue;
      Field::Elem factor = m[r * n_ + c];
      if (factor == Field::kZero) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        m[r * n_ + j] = f.sub(m[r * n_ + j], f.mul(factor, m[c * n_ + j]));
        inv.entries_[r * n_ + j] = f.sub(inv.entries_[r * n_ + j], f.mul(factor, inv.entries_[c * n_ + j]));
      }
    }
  }
  return inv;
}

SquareMatrix SquareMatrix::reindexed(const MonomialOrder& ord) const {
  if (ord.size() != n_) throw DimensionMismatch("order size does not match the matrix");
  SquareMatrix r(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.set(ord.variable_at_rank(i), ord.variable_at_rank(j), at(i, j));
  return r;
}

std::string SquareMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += " ";
      out += field_->to_string(at(i, j));
    }
    out += "]\n";
  }
  return out;
}

SquareMatrix sample_matrix(MatrixKind kind, std::size_t n, const FieldPtr& field, Rng& rng) {
  SquareMatrix m(field, n);
  if (kind == MatrixKind::borel) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, i == j ? field->random_nonzero(rng) : field->random(rng));
    return m;
  }
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, field->random(rng));
  } while (!m.is_invertible());
  return m;
}

SquareMatrix sample_matrix(MatrixKind kind, std::size_t n, const FieldPtr& field, std::uint64_t seed) {
  Rng rng(seed);
  return sample_matrix(kind, n, field, rng);
}

Polynomial apply_matrix(const Polynomial& f, const SquareMatrix& a, const MonomialOrder& ord) {
  const auto& ring = f.ring();
  const std::size_t n = ring->nvars();
  if (a.size() != n || ord.size() != n) throw DimensionMismatch("matrix size does not match the ring");
  if (!a.field()->same_as(f.field())) throw SpecMismatch("matrix and polynomial over different fields");
  const Field& field = f.field();

  // Image of each variable, evaluated once; powers cached on demand.
  std::vector<Polynomial> image(n, Polynomial(ring));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      Field::Elem c = a.at(i, j);
      if (c != Field::kZero) terms.push_back({Monomial::variable(n, ord.variable_at_rank(i)), c});
    }
    image[ord.variable_at_rank(j)] = Polynomial::from_terms(ring, std::move(terms));
  }
  std::vector<std::map<unsigned, Polynomial>> powers(n);
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto it = powers[v].find(e);
    if (it != powers[v].end()) return it->second;
    return powers[v].emplace(e, image[v].pow(e)).first->second;
  };

  std::unordered_map<Monomial, Field::Elem, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(ring, 1).scale(t.coeff);
    for (std::size_t v = 0; v < n && !prod.is_zero(); ++v)
      if (t.monomial[v]) prod = prod * power(v, t.monomial[v]);
    for (const auto& pt : prod.terms()) {
      auto [it, inserted] = acc.try_emplace(pt.monomial, Field::kZero);
      it->second = field.add(it->second, pt.coeff);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != Field::kZero) out.push_back({m, c});
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial apply_matrix(const Polynomial& f, const SquareMatrix& a) {
  return apply_matrix(f, a, MonomialOrder(OrderKind::lex, f.ring()->nvars()));
}

IdealPresentation apply_matrix(const IdealPresentation& ideal, const SquareMatrix& a, const MonomialOrder& ord) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(apply_matrix(g, a, ord));
  return IdealPresentation(ideal.ring(), std::move(gens));
}

Monomial permute_monomial(const Monomial& m, const Permutation& pi) { return pi.apply(m); }

Polynomial permute_polynomial(const Polynomial& f, const Permutation& pi) {
  if (pi.size() != f.ring()->nvars()) throw InvalidPermutation("permutation size does not match the ring");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({pi.apply(t.monomial), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(out));
}

IdealPresentation permute_ideal(const IdealPresentation& ideal, const Permutation& pi) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(permute_polynomial(g, pi));
  return IdealPresentation(ideal.ring(), std::move(gens));
}

}  // namespace modgin
