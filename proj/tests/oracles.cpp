#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace modgin::oracle {

namespace {

// Remainder of a modulo monic b over F_p; vectors low to high.
std::vector<std::uint32_t> remainder(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                     std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * std::uint64_t{b[i]}) % p);
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<std::uint32_t>& v) {
  for (auto c : v)
    if (c) return false;
  return true;
}

}  // namespace

bool irreducible_by_trial_division(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> cand(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[d] = 1;
      if (all_zero(remainder(monic, cand, p))) return false;
    }
  }
  return true;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const auto& ring = f.ring();
  Polynomial out(ring);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::from_monomial(ring, Monomial(ring->nvars()), t.coeff);
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      for (unsigned e = 0; e < t.monomial[v]; ++e) prod = prod * images[v];
    out = out + prod;
  }
  return out;
}

Polynomial literal_group_sum(const Polynomial& f, const std::vector<Polynomial>& sigma, std::uint32_t order) {
  Polynomial sum(f.ring());
  Polynomial g = f;
  for (std::uint32_t t = 0; t < order; ++t) {
    sum = sum + g;
    g = substitute(g, sigma);
  }
  return sum;
}

bool borel_fixed_exhaustive_f2(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  if (ring->nvars() != 3 || ring->characteristic() != 2) throw InvalidArgument("oracle needs F_2 and 3 variables");
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, i); };
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& g : ideal.generators()) {
      bool divides = true;
      for (std::size_t i = 0; i < 3; ++i) divides = divides && g[i] <= m[i];
      if (divides) return true;
    }
    return false;
  };
  for (unsigned bits = 0; bits < 8; ++bits) {
    // columns: x1 -> x1, x2 -> x2 + a12 x1, x3 -> x3 + a13 x1 + a23 x2
    std::vector<Polynomial> images{x(0), x(1), x(2)};
    if (bits & 1) images[1] = images[1] + x(0);
    if (bits & 2) images[2] = images[2] + x(0);
    if (bits & 4) images[2] = images[2] + x(1);
    for (const auto& g : ideal.generators()) {
      Polynomial img = substitute(Polynomial::from_monomial(ring, g), images);
      for (const auto& t : img.terms())
        if (!in_ideal(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace modgin::oracle

namespace modgin::oracle {

std::vector<Polynomial> invariants_of_degree(const RingPtr& ring, const std::vector<Polynomial>& sigma, unsigned d) {
  const Field& field = *ring->field();
  if (field.degree() != 1) throw InvalidArgument("oracle needs a prime field");
  const std::uint32_t p = field.characteristic();
  const auto monos = monomials_of_degree(ring->nvars(), d);
  const std::size_t n = monos.size();
  auto column = [&](const Monomial& m) {
    return static_cast<std::size_t>(std::lower_bound(monos.begin(), monos.end(), m, std::greater<>()) - monos.begin());
  };
  // Column j holds the coordinates of (sigma - 1)(m_j); its kernel is the answer.
  std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial image = substitute(Polynomial::from_monomial(ring, monos[j]), sigma);
    for (const auto& t : image.terms()) a[column(t.monomial)][j] = *field.prime_residue(t.coeff);
    a[j][j] = (a[j][j] + p - 1) % p;
  }
  auto inverse = [&](std::uint32_t x) {
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t r = row;
    while (r < n && !a[r][c]) ++r;
    if (r == n) continue;
    std::swap(a[r], a[row]);
    std::uint32_t inv = inverse(a[row][c]);
    for (auto& x : a[row]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (std::size_t o = 0; o < n; ++o) {
      if (o == row || !a[o][c]) continue;
      std::uint64_t f = a[o][c];
      for (std::size_t k = 0; k < n; ++k) a[o][k] = static_cast<std::uint32_t>((a[o][k] + (p - f) * a[row][k]) % p);
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Polynomial> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Term> terms{{monos[free], field.one()}};
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      if (a[r][free]) terms.push_back({monos[pivot_col[r]], field.from_int(static_cast<std::int64_t>(p - a[r][free]))});
    basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return basis;
}

}  // namespace modgin::oracle
