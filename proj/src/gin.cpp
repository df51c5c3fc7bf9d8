#include "modgin/gin.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>

namespace modgin {

namespace {

FieldPtr sampling_field(const FieldPtr& requested, const RingPtr& ring) {
  const Field& base = *ring->field();
  if (requested) {
    if (requested->characteristic() != base.characteristic())
      throw InvalidCharacteristic("sampling field has the wrong characteristic");
    if (base.degree() > 1 && !requested->same_as(base))
      throw SpecMismatch("ideal over an extension field must be sampled over that field");
    return requested;
  }
  if (base.degree() > 1) return ring->field();
  return Field::sampling(base.characteristic());
}

void require_homogeneous(const IdealPresentation& ideal) {
  if (!ideal.is_homogeneous()) throw NotHomogeneous("generic initial ideals need a homogeneous ideal");
}

MonomialIdeal trial_initial_ideal(const IdealPresentation& ideal, const MonomialOrder& ord, const RingPtr& ext,
                                  const FieldPtr& field, MatrixKind kind, std::uint64_t seed,
                                  const BuchbergerOptions& gb_options) {
  auto a = sample_matrix(kind, ext->nvars(), field, seed);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(apply_matrix(g.over(ext), a, ord));
  auto in = initial_ideal(buchberger(IdealPresentation(ext, std::move(gens)), ord, gb_options));
  return MonomialIdeal(ideal.ring(), in.generators());
}

std::vector<MonomialIdeal> run_trials(const IdealPresentation& ideal, const MonomialOrder& ord,
                                      const GinOptions& options, const FieldPtr& field) {
  auto ext = ideal.ring()->with_field(field);
  std::vector<MonomialIdeal> results(options.trials, MonomialIdeal(ideal.ring(), {}));
  auto work = [&](unsigned t) {
    results[t] = trial_initial_ideal(ideal, ord, ext, field, options.sampler, derive_seed(options.seed, t),
                                     options.groebner);
  };
  const unsigned threads = std::min(std::max(options.threads, 1u), options.trials);
  if (threads <= 1) {
    for (unsigned t = 0; t < options.trials; ++t) work(t);
    return results;
  }
  std::atomic<unsigned> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (unsigned t = next++; t < options.trials; t = next++) work(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// ------------------------------------------------------------ linear algebra

using SparseRow = std::vector<std::pair<std::uint32_t, Field::Elem>>;  // ascending columns

// r + c * s
SparseRow axpy(const SparseRow& r, Field::Elem c, const SparseRow& s, const Field& F) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.push_back({s[j].first, F.mul(c, s[j].second)});
      ++j;
    } else {
      auto v = F.add(r[i].second, F.mul(c, s[j].second));
      if (v != Field::kZero) out.push_back({r[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Row echelon form with leftmost pivots, rows normalized to leading 1.
class SparseEchelon {
 public:
  explicit SparseEchelon(const Field& F) : F_(F) {}

  void insert(SparseRow r) {
    while (!r.empty()) {
      auto it = pivot_.find(r.front().first);
      if (it == pivot_.end()) break;
      r = axpy(r, F_.neg(r.front().second), rows_[it->second], F_);
    }
    if (r.empty()) return;
    auto inv = F_.inv(r.front().second);
    for (auto& e : r) e.second = F_.mul(e.second, inv);
    pivot_.emplace(r.front().first, rows_.size());
    rows_.push_back(std::move(r));
  }

  // Clears every pivot column outside its own row.
  void reduce_fully() {
    std::vector<std::uint32_t> cols;
    for (const auto& [c, idx] : pivot_) cols.push_back(c);
    std::sort(cols.rbegin(), cols.rend());
    for (auto c : cols) {
      SparseRow& r = rows_[pivot_[c]];
      SparseRow kept, eliminated;
      for (std::size_t k = 1; k < r.size(); ++k) {
        auto it = pivot_.find(r[k].first);
        if (it == pivot_.end()) {
          kept.push_back(r[k]);
        } else {
          const SparseRow& s = rows_[it->second];
          eliminated = axpy(eliminated, F_.neg(r[k].second), SparseRow(s.begin() + 1, s.end()), F_);
        }
      }
      SparseRow out{r.front()};
      kept = axpy(kept, F_.one(), eliminated, F_);
      out.insert(out.end(), kept.begin(), kept.end());
      r = std::move(out);
    }
  }

  const std::vector<SparseRow>& rows() const noexcept { return rows_; }
  bool is_pivot(std::uint32_t c) const { return pivot_.count(c) != 0; }

 private:
  const Field& F_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  std::vector<SparseRow> rows_;
};

// Pivot columns of a dense row space; leftmost or rightmost pivots.
std::vector<std::uint32_t> dense_pivots(std::vector<std::vector<Field::Elem>> rows, const Field& F, bool leftmost) {
  std::vector<std::pair<std::uint32_t, std::vector<Field::Elem>>> basis;
  auto lead = [&](const std::vector<Field::Elem>& v) -> std::optional<std::uint32_t> {
    if (leftmost) {
      for (std::uint32_t c = 0; c < v.size(); ++c)
        if (v[c] != Field::kZero) return c;
    } else {
      for (std::uint32_t c = static_cast<std::uint32_t>(v.size()); c-- > 0;)
        if (v[c] != Field::kZero) return c;
    }
    return std::nullopt;
  };
  for (auto& v : rows) {
    for (const auto& [c, b] : basis) {
      if (v[c] == Field::kZero) continue;
      auto factor = F.neg(v[c]);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (b[k] != Field::kZero) v[k] = F.add(v[k], F.mul(factor, b[k]));
    }
    auto c = lead(v);
    if (!c) continue;
    auto inv = F.inv(v[*c]);
    for (auto& e : v) e = F.mul(e, inv);
    // keep the basis reduced at the new pivot column
    for (auto& [bc, b] : basis) {
      if (b[*c] == Field::kZero) continue;
      auto factor = F.neg(b[*c]);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != Field::kZero) b[k] = F.add(b[k], F.mul(factor, v[k]));
    }
    basis.emplace_back(*c, std::move(v));
  }
  std::vector<std::uint32_t> out;
  for (const auto& [c, b] : basis) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

// binomial(n, k) mod p by Lucas.
Field::Elem binomial_mod(unsigned n, unsigned k, const Field& F) {
  const unsigned p = F.characteristic();
  std::uint64_t r = 1;
  while (k || n) {
    unsigned nd = n % p, kd = k % p;
    if (kd > nd) return Field::kZero;
    std::uint64_t c = 1;
    for (unsigned i = 0; i < kd; ++i) c = c * (nd - i) / (i + 1);
    r = r * (c % p) % p;
    n /= p;
    k /= p;
  }
  return F.from_int(static_cast<std::int64_t>(r));
}

using DividedPower = std::unordered_map<Monomial, Field::Elem, MonomialHash>;

// Product in the divided-power algebra: X^[a] X^[b] = prod binom(a_i+b_i, a_i) X^[a+b].
DividedPower dp_multiply(const DividedPower& P, const DividedPower& Q, const Field& F, std::size_t n) {
  DividedPower out;
  for (const auto& [a, pa] : P)
    for (const auto& [b, qb] : Q) {
      Field::Elem c = F.mul(pa, qb);
      for (std::size_t v = 0; v < n && c != Field::kZero; ++v)
        if (a[v] && b[v]) c = F.mul(c, binomial_mod(a[v] + b[v], a[v], F));
      if (c == Field::kZero) continue;
      auto [it, inserted] = out.try_emplace(a * b, Field::kZero);
      it->second = F.add(it->second, c);
    }
  return out;
}

}  // namespace

std::vector<std::pair<MonomialIdeal, unsigned>> gin_outcomes(const IdealPresentation& ideal,
                                                             const MonomialOrder& ord, const GinOptions& options) {
  require_homogeneous(ideal);
  if (ord.size() != ideal.ring()->nvars()) throw RingMismatch("order size does not match the ring");
  if (options.trials == 0) throw InvalidArgument("at least one trial is needed");
  auto field = sampling_field(options.field, ideal.ring());
  std::vector<std::pair<MonomialIdeal, unsigned>> groups;
  for (auto& r : run_trials(ideal, ord, options, field)) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == r; });
    if (it == groups.end())
      groups.emplace_back(std::move(r), 1);
    else
      ++it->second;
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return groups;
}

GinReport gin(const IdealPresentation& ideal, const MonomialOrder& ord, const GinOptions& options) {
  auto groups = gin_outcomes(ideal, ord, options);
  if (2 * groups.front().second <= options.trials)
    throw NoMajority("no initial ideal occurred in more than half of " + std::to_string(options.trials) +
                     " trials (" + std::to_string(groups.size()) + " distinct outcomes)");
  GinReport report{groups.front().first, options.trials, groups.front().second, 0, {}, false};
  report.field_size = sampling_field(options.field, ideal.ring())->size();
  for (unsigned t = 0; t < options.trials; ++t) report.per_trial_seeds.push_back(derive_seed(options.seed, t));
  report.borel_fixed = is_borel_fixed(report.result, ord).fixed;
  return report;
}

std::vector<Monomial> gin_degree_slice(const IdealPresentation& ideal, unsigned d, const MonomialOrder& ord,
                                       const FieldPtr& field_in, std::uint64_t seed, SliceRoute route) {
  require_homogeneous(ideal);
  if (d < 1) throw InvalidArgument("degree must be at least 1");
  const auto& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (ord.size() != n) throw RingMismatch("order size does not match the ring");
  const Field& base = *ring->field();
  auto field = sampling_field(field_in, ring);
  const Field& F = *field;

  // columns: degree-d monomials, decreasing under ord
  auto cols = monomials_of_degree(n, d);
  std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of;
  for (std::uint32_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);

  // I_d from generator multiples, in original coordinates
  SparseEchelon echelon(base);
  for (const auto& g : ideal.generators()) {
    const unsigned e = g.total_degree();
    if (e > d) continue;
    for (const auto& u : monomials_of_degree(n, d - e)) {
      SparseRow row;
      for (const auto& t : g.terms()) row.push_back({col_of.at(u * t.monomial), t.coeff});
      std::sort(row.begin(), row.end());
      echelon.insert(std::move(row));
    }
  }
  echelon.reduce_fully();
  const std::size_t t = echelon.rows().size();
  const std::size_t h = cols.size() - t;
  if (t == 0) return {};
  if (h == 0) return cols;
  if (route == SliceRoute::automatic) route = h < t ? SliceRoute::dual : SliceRoute::direct;

  auto a = sample_matrix(MatrixKind::gl, n, field, seed);
  auto embed = [&](Field::Elem c) { return F.from_int(*base.prime_residue(c)); };
  if (base.degree() > 1) throw SpecMismatch("degree slices need an ideal over a prime field");

  std::vector<std::uint32_t> slice_cols;
  if (route == SliceRoute::direct) {
    auto ext = ring->with_field(field);
    std::vector<std::vector<Field::Elem>> dense;
    for (const auto& row : echelon.rows()) {
      std::vector<Term> terms;
      for (const auto& [c, v] : row) terms.push_back({cols[c], embed(v)});
      auto image = apply_matrix(Polynomial::from_terms(ext, std::move(terms)), a, ord);
      std::vector<Field::Elem> v(cols.size(), Field::kZero);
      for (const auto& term : image.terms()) v[col_of.at(term.monomial)] = term.coeff;
      dense.push_back(std::move(v));
    }
    slice_cols = dense_pivots(std::move(dense), F, true);
  } else {
    // Annihilator of I_d: for each non-pivot column c, phi_c(x^c) = 1 and
    // phi_c(x^pivot(r)) = -R[r][c].
    std::map<std::uint32_t, std::size_t> kernel_index;
    for (std::uint32_t c = 0; c < cols.size(); ++c)
      if (!echelon.is_pivot(c)) kernel_index.emplace(c, kernel_index.size());
    // support monomial -> (kernel vector, coefficient)
    std::unordered_map<Monomial, std::vector<std::pair<std::size_t, Field::Elem>>, MonomialHash> support;
    for (const auto& [c, k] : kernel_index) support[cols[c]].push_back({k, F.one()});
    for (const auto& row : echelon.rows())
      for (std::size_t e = 1; e < row.size(); ++e)
        support[cols[row.front().first]].push_back({kernel_index.at(row[e].first), F.neg(embed(row[e].second))});

    // X_u -> sum_v b(u, v) X_v with b the inverse of the matrix on variable indices
    auto b = a.reindexed(ord).inverse();
    std::vector<std::vector<DividedPower>> powers(n);
    for (std::size_t u = 0; u < n; ++u) {
      powers[u].resize(d + 1);
      for (unsigned m = 0; m <= d; ++m)
        for (const auto& j : monomials_of_degree(n, m)) {
          Field::Elem c = F.one();
          for (std::size_t v = 0; v < n && c != Field::kZero; ++v)
            if (j[v]) c = F.mul(c, F.pow(b.at(u, v), j[v]));
          if (c != Field::kZero) powers[u][m].emplace(j, c);
        }
    }
    std::vector<std::vector<Field::Elem>> psi(kernel_index.size(), std::vector<Field::Elem>(cols.size(), Field::kZero));
    for (const auto& [k, uses] : support) {
      DividedPower image{{Monomial(n), F.one()}};
      for (std::size_t u = 0; u < n; ++u)
        if (k[u]) image = dp_multiply(image, powers[u][k[u]], F, n);
      for (const auto& [mono, c] : image) {
        auto col = col_of.at(mono);
        for (const auto& [idx, coeff] : uses) psi[idx][col] = F.add(psi[idx][col], F.mul(coeff, c));
      }
    }
    auto standard = dense_pivots(std::move(psi), F, false);
    std::vector<bool> is_standard(cols.size(), false);
    for (auto c : standard) is_standard[c] = true;
    for (std::uint32_t c = 0; c < cols.size(); ++c)
      if (!is_standard[c]) slice_cols.push_back(c);
  }
  std::vector<Monomial> out;
  for (auto c : slice_cols) out.push_back(cols[c]);
  return out;
}

PermutationCheck check_permutation_theorem(const IdealPresentation& ideal, const MonomialOrder& ord,
                                           const Permutation& pi, const GinOptions& options) {
  if (pi.size() != ideal.ring()->nvars()) throw InvalidPermutation("permutation size does not match the ring");
  GinOptions left = options, right = options;
  left.seed = derive_seed(options.seed, 1);
  right.seed = derive_seed(options.seed, 2);
  auto lhs = gin(ideal, ord.permuted(pi), left).result;
  auto rhs = gin(ideal, ord, right).result.permuted(pi);
  bool holds = lhs == rhs;
  return {holds, std::move(lhs), std::move(rhs)};
}

}  // namespace modgin
