#include "modgin/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace modgin {

// ------------------------------------------------------- IdealPresentation

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatch("generator from another ring");
    if (g.is_zero()) throw ZeroPolynomial("ideal generators must be nonzero");
  }
}

bool IdealPresentation::is_homogeneous() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

IdealPresentation IdealPresentation::over(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.over(target));
  return IdealPresentation(target, std::move(gens));
}

// ----------------------------------------------------------- MonomialIdeal

namespace {

bool canonical_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a > b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& m : generators)
    if (m.size() != ring_->nvars()) throw RingMismatch("monomial size does not match the ring");
  std::sort(generators.begin(), generators.end(), canonical_before);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& m : generators) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(m);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return contains(t.monomial); });
}

std::vector<Monomial> MonomialIdeal::degree_slice(unsigned d) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(ring_->nvars(), d))
    if (contains(m)) out.push_back(m);
  return out;
}

MonomialIdeal MonomialIdeal::truncated(unsigned d) const {
  std::vector<Monomial> kept;
  for (const auto& g : gens_)
    if (g.degree() <= d) kept.push_back(g);
  return MonomialIdeal(ring_, std::move(kept));
}

MonomialIdeal MonomialIdeal::permuted(const Permutation& pi) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(pi.apply(g));
  return MonomialIdeal(ring_, std::move(out));
}

IdealPresentation MonomialIdeal::presentation() const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(Polynomial::from_monomial(ring_, g));
  return IdealPresentation(ring_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += ring_->monomial_to_string(gens_[i]);
  }
  return out;
}

// ------------------------------------------------- reference division

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  const auto& ring = f.ring();
  const auto& field = f.field();
  std::vector<std::pair<Monomial, Field::Elem>> leads;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw ZeroDivisor("division by the zero polynomial");
    if (!d.ring()->same_as(*ring)) throw RingMismatch("divisor from another ring");
    auto [m, c] = d.leading_term(ord);
    leads.emplace_back(m, c.raw());
  }
  DivisionResult result{std::vector<Polynomial>(divisors.size(), Polynomial(ring)), Polynomial(ring)};
  Polynomial rest = f;
  std::vector<Term> remainder_terms;
  while (!rest.is_zero()) {
    auto [m, c] = rest.leading_term(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].first.divides(m)) continue;
      Monomial u = leads[i].first.cofactor_in(m);
      Field::Elem q = field.div(c.raw(), leads[i].second);
      result.quotients[i] = result.quotients[i] + Polynomial::from_monomial(ring, u, q);
      rest = rest - divisors[i].mul_term(u, q);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back({m, c.raw()});
      rest = rest - Polynomial::from_monomial(ring, m, c.raw());
    }
  }
  result.remainder = Polynomial::from_terms(ring, std::move(remainder_terms));
  return result;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("S-polynomial of the zero polynomial");
  const auto& field = f.field();
  auto [mf, cf] = f.leading_term(ord);
  auto [mg, cg] = g.leading_term(ord);
  Monomial l = mf.lcm(mg);
  return f.mul_term(mf.cofactor_in(l), field.inv(cf.raw())) - g.mul_term(mg.cofactor_in(l), field.inv(cg.raw()));
}

// ------------------------------------------------------------------ engine

struct GroebnerEngine::Impl {
  using Terms = std::vector<Term>;  // decreasing under `ord`

  struct Pair {
    std::uint32_t degree;
    std::size_t i;
    std::size_t j;
    bool operator<(const Pair& o) const { return std::tie(degree, i, j) < std::tie(o.degree, o.i, o.j); }
  };

  Impl(RingPtr r, MonomialOrder o, BuchbergerOptions opts)
      : ring(std::move(r)), field(*ring->field()), ord(std::move(o)), options(opts) {
    if (ord.size() != ring->nvars()) throw RingMismatch("order size does not match the ring");
  }

  RingPtr ring;
  const Field& field;
  MonomialOrder ord;
  BuchbergerOptions options;
  std::vector<Terms> basis;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;
  std::set<Pair> queue;
  std::vector<std::vector<std::uint8_t>> pending;  // pending[j][i], i < j
  std::size_t created = 0;

  Terms to_terms(const Polynomial& f) const {
    if (!f.ring()->same_as(*ring)) throw RingMismatch("polynomial from another ring");
    Terms t = f.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.monomial, b.monomial) > 0; });
    return t;
  }

  Polynomial to_poly(Terms t) const { return Polynomial::from_terms(ring, std::move(t)); }

  // out = a[from..] - c * u * b[1..]
  void sub_mul(const Terms& a, std::size_t from, const Terms& b, Field::Elem c, const Monomial& u, Terms& out) const {
    out.clear();
    out.reserve(a.size() - from + b.size());
    const Field::Elem nc = field.neg(c);
    std::size_t i = from, j = 1;
    while (i < a.size() && j < b.size()) {
      Monomial bm = b[j].monomial * u;
      int s = ord.cmp(a[i].monomial, bm);
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.push_back({bm, field.mul(nc, b[j].coeff)});
        ++j;
      } else {
        Field::Elem v = field.add(a[i].coeff, field.mul(nc, b[j].coeff));
        if (v != Field::kZero) out.push_back({bm, v});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].monomial * u, field.mul(nc, b[j].coeff)});
  }

  long find_reducer(const Monomial& m) const {
    const std::uint32_t mask = m.support_mask();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((masks[k] & ~mask) == 0 && leads[k].divides(m)) return static_cast<long>(k);
    return -1;
  }

  Terms reduce(Terms p) const {
    Terms rem, scratch;
    std::size_t head = 0;
    while (head < p.size()) {
      long k = find_reducer(p[head].monomial);
      if (k < 0) {
        rem.push_back(p[head++]);
        continue;
      }
      Monomial u = leads[k].cofactor_in(p[head].monomial);
      sub_mul(p, head + 1, basis[k], p[head].coeff, u, scratch);
      std::swap(p, scratch);
      head = 0;
    }
    return rem;
  }

  void make_monic(Terms& t) const {
    Field::Elem inv = field.inv(t.front().coeff);
    for (auto& term : t) term.coeff = field.mul(term.coeff, inv);
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return pending[b][a] != 0;
  }

  void insert(Terms t) {
    make_monic(t);
    const std::size_t j = basis.size();
    leads.push_back(t.front().monomial);
    masks.push_back(leads.back().support_mask());
    basis.push_back(std::move(t));
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].coprime(leads[j])) continue;
      if (++created > options.max_pairs)
        throw ResourceLimit("S-pair queue exceeded " + std::to_string(options.max_pairs) + " pairs");
      queue.insert({leads[i].lcm(leads[j]).degree(), i, j});
      pending[j][i] = 1;
    }
  }

  bool chain_criterion(const Pair& pr, const Monomial& l) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!leads[k].divides(l)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) return true;
    }
    return false;
  }

  Terms spoly(std::size_t i, std::size_t j, const Monomial& l) const {
    // Both monic: S = (l/lm_i) f_i - (l/lm_j) f_j, leading terms cancel.
    const Terms& a = basis[i];
    Monomial ui = leads[i].cofactor_in(l);
    Monomial uj = leads[j].cofactor_in(l);
    Terms shifted;
    shifted.reserve(a.size());
    for (const auto& t : a) shifted.push_back({t.monomial * ui, t.coeff});
    Terms out;
    sub_mul(shifted, 1, basis[j], field.one(), uj, out);
    // sub_mul skips b[0]; shifted[0] is skipped through from = 1.
    return out;
  }

  void complete() {
    while (!queue.empty()) {
      Pair pr = *queue.begin();
      if (options.degree_cap && pr.degree > *options.degree_cap) break;
      queue.erase(queue.begin());
      Monomial l = leads[pr.i].lcm(leads[pr.j]);
      bool skip = chain_criterion(pr, l);
      pending[pr.j][pr.i] = 0;
      if (skip) continue;
      Terms r = reduce(spoly(pr.i, pr.j, l));
      if (!r.empty()) insert(std::move(r));
    }
  }

  GroebnerBasis reduced() {
    complete();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j || !leads[j].divides(leads[i])) continue;
        redundant = leads[j] != leads[i] || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    Impl minimal(ring, ord, options);
    for (auto i : keep) {
      minimal.leads.push_back(leads[i]);
      minimal.masks.push_back(masks[i]);
      minimal.basis.push_back(basis[i]);
    }
    std::vector<Polynomial> elements;
    for (std::size_t i = 0; i < minimal.basis.size(); ++i) {
      Terms tail(minimal.basis[i].begin() + 1, minimal.basis[i].end());
      Terms full{minimal.basis[i].front()};
      Terms reduced_tail = minimal.reduce(std::move(tail));
      full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
      minimal.basis[i] = full;
    }
    std::vector<std::size_t> idx(minimal.basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return ord.cmp(minimal.leads[a], minimal.leads[b]) > 0; });
    for (auto i : idx) elements.push_back(to_poly(minimal.basis[i]));
    return GroebnerBasis{ring, ord, std::move(elements), options.degree_cap};
  }
};

GroebnerEngine::GroebnerEngine(RingPtr ring, MonomialOrder ord, BuchbergerOptions options)
    : impl_(std::make_unique<Impl>(std::move(ring), std::move(ord), options)) {}
GroebnerEngine::~GroebnerEngine() = default;
GroebnerEngine::GroebnerEngine(GroebnerEngine&&) noexcept = default;
GroebnerEngine& GroebnerEngine::operator=(GroebnerEngine&&) noexcept = default;

bool GroebnerEngine::add(const Polynomial& f) {
  auto r = impl_->reduce(impl_->to_terms(f));
  if (r.empty()) return false;
  impl_->insert(std::move(r));
  return true;
}

void GroebnerEngine::complete() { impl_->complete(); }

Polynomial GroebnerEngine::normal_form(const Polynomial& f) const {
  return impl_->to_poly(impl_->reduce(impl_->to_terms(f)));
}

bool GroebnerEngine::contains(const Polynomial& f) {
  impl_->complete();
  return impl_->reduce(impl_->to_terms(f)).empty();
}

GroebnerBasis GroebnerEngine::reduced_basis() { return impl_->reduced(); }

std::size_t GroebnerEngine::pairs_created() const noexcept { return impl_->created; }

// ------------------------------------------------------------ entry points

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& ord, const BuchbergerOptions& options) {
  GroebnerEngine engine(ideal.ring(), ord, options);
  std::vector<Polynomial> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.total_degree() < b.total_degree(); });
  for (const auto& g : gens) engine.add(g);
  return engine.reduced_basis();
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  if (gb.degree_cap && f.total_degree() > *gb.degree_cap)
    throw CapExceeded("degree " + std::to_string(f.total_degree()) + " exceeds the basis cap " +
                      std::to_string(*gb.degree_cap));
  return divide(f, gb.elements, gb.order).remainder.is_zero();
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const MonomialOrder& ord) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("ideals from different rings");
  auto gb_b = buchberger(b, ord);
  for (const auto& g : a.generators())
    if (!membership(g, gb_b)) return false;
  auto gb_a = buchberger(a, ord);
  for (const auto& g : b.generators())
    if (!membership(g, gb_a)) return false;
  return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.elements.size());
  for (const auto& g : gb.elements) leads.push_back(g.leading_monomial(gb.order));
  return MonomialIdeal(gb.ring, std::move(leads));
}

}  // namespace modgin
