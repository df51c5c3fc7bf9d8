#include "modgin/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace modgin {

namespace {

std::vector<std::vector<std::size_t>> consecutive_placement(const std::vector<unsigned>& blocks) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t next = 0;
  for (unsigned n : blocks) {
    std::vector<std::size_t> chain(n);
    std::iota(chain.begin(), chain.end(), next);
    next += n;
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<std::string> standard_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace

CyclicModule::CyclicModule(std::uint32_t p, std::vector<unsigned> blocks, Orientation orientation)
    : CyclicModule(p, blocks, orientation, consecutive_placement(blocks),
                   standard_names(std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}))) {}

CyclicModule::CyclicModule(std::uint32_t p, std::vector<unsigned> blocks, Orientation orientation,
                           std::vector<std::vector<std::size_t>> placement, std::vector<std::string> names)
    : p_(p), blocks_(std::move(blocks)), orientation_(orientation), placement_(std::move(placement)) {
  if (!is_prime(p_)) throw InvalidCharacteristic("module characteristic must be prime");
  if (blocks_.empty()) throw InvalidArgument("module needs at least one block");
  if (placement_.size() != blocks_.size()) throw DimensionMismatch("placement does not match the blocks");
  std::size_t n = 0;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j] < 1 || blocks_[j] > p_)
      throw InvalidArgument("block size " + std::to_string(blocks_[j]) + " outside 1.." + std::to_string(p_));
    if (placement_[j].size() != blocks_[j]) throw DimensionMismatch("placement does not match the blocks");
    n += blocks_[j];
  }
  if (n > kMaxVars) throw InvalidArgument("module has more than " + std::to_string(kMaxVars) + " variables");
  if (names.size() != n) throw DimensionMismatch("one name per variable required");
  std::vector<bool> seen(n, false);
  for (const auto& chain : placement_)
    for (std::size_t v : chain) {
      if (v >= n || seen[v]) throw InvalidArgument("placement must use every variable once");
      seen[v] = true;
    }
  ring_ = RingContext::make(std::move(names), Field::prime(p_));
}

bool CyclicModule::is_fixed_variable(std::size_t v) const {
  for (const auto& chain : placement_) {
    std::size_t fixed = orientation_ == Orientation::fixed_first ? chain.front() : chain.back();
    if (fixed == v) return true;
  }
  return false;
}

std::string CyclicModule::shape() const {
  std::string out;
  for (std::size_t j = 0; j < blocks_.size();) {
    std::size_t run = j;
    while (run < blocks_.size() && blocks_[run] == blocks_[j]) ++run;
    if (!out.empty()) out += "+";
    if (run - j > 1) out += std::to_string(run - j);
    out += "V" + std::to_string(blocks_[j]);
    j = run;
  }
  return out;
}

SquareMatrix CyclicModule::sigma_matrix() const {
  const auto& field = ring_->field();
  SquareMatrix s = SquareMatrix::identity(field, nvars());
  for (const auto& chain : placement_)
    for (std::size_t c = 0; c < chain.size(); ++c) {
      if (orientation_ == Orientation::fixed_first && c > 0) s.set(chain[c - 1], chain[c], field->one());
      if (orientation_ == Orientation::fixed_last && c + 1 < chain.size()) s.set(chain[c + 1], chain[c], field->one());
    }
  return s;
}

Polynomial CyclicModule::sigma(const Polynomial& f) const {
  if (!f.ring()->same_as(*ring_)) throw RingMismatch("polynomial is not in the module's ring");
  return apply_matrix(f, sigma_matrix());
}

bool CyclicModule::is_invariant(const Polynomial& f) const { return sigma(f) == f; }

Polynomial CyclicModule::transfer(const Polynomial& f) const {
  if (!f.ring()->same_as(*ring_)) throw RingMismatch("polynomial is not in the module's ring");
  const SquareMatrix s = sigma_matrix();
  Polynomial acc = f;
  Polynomial g = f;
  for (std::uint32_t t = 1; t < p_; ++t) {
    g = apply_matrix(g, s);
    acc = acc + g;
  }
  return acc;
}

bool CyclicModule::is_submodule_prefix(std::size_t k) const {
  if (k > nvars()) return false;
  const SquareMatrix s = sigma_matrix();
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = k; v < nvars(); ++v)
      if (s.at(u, v) != Field::kZero) return false;
  return true;
}

CyclicModule CyclicModule::submodule(std::size_t k) const {
  if (k == 0 || !is_submodule_prefix(k))
    throw NotASubmodule("the first " + std::to_string(k) + " variables do not span a submodule");
  std::vector<unsigned> blocks;
  std::vector<std::vector<std::size_t>> placement;
  for (const auto& chain : placement_) {
    std::vector<std::size_t> kept;
    for (std::size_t v : chain)
      if (v < k) kept.push_back(v);
    if (kept.empty()) continue;
    blocks.push_back(static_cast<unsigned>(kept.size()));
    placement.push_back(std::move(kept));
  }
  std::vector<std::string> names(ring_->names().begin(), ring_->names().begin() + k);
  return CyclicModule(p_, std::move(blocks), orientation_, std::move(placement), std::move(names));
}

Polynomial CyclicModule::restrict(const Polynomial& f, std::size_t k) const {
  if (!f.ring()->same_as(*ring_)) throw RingMismatch("polynomial is not in the module's ring");
  if (k == 0 || !is_submodule_prefix(k))
    throw NotASubmodule("the first " + std::to_string(k) + " variables do not span a submodule");
  auto target = RingContext::make(std::vector<std::string>(ring_->names().begin(), ring_->names().begin() + k),
                                  ring_->field(), ring_->max_degree());
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool survives = true;
    for (std::size_t v = k; v < nvars() && survives; ++v) survives = t.monomial[v] == 0;
    if (!survives) continue;
    Monomial m(k);
    for (std::size_t v = 0; v < k; ++v) m.set(v, t.monomial[v]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

std::vector<unsigned> parse_module_shape(std::string_view text) {
  std::vector<unsigned> blocks;
  std::size_t pos = 0;
  auto fail = [&]() -> void { throw UnsupportedShape("cannot parse module shape '" + std::string(text) + "'"); };
  auto number = [&](unsigned& out) {
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) return false;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, out);
    if (ec != std::errc()) fail();
    pos = end;
    return true;
  };
  while (true) {
    unsigned mult = 1, n = 0;
    number(mult);
    if (pos >= text.size() || (text[pos] != 'V' && text[pos] != 'v')) fail();
    ++pos;
    if (!number(n) || n == 0 || mult == 0) fail();
    blocks.insert(blocks.end(), mult, n);
    if (pos == text.size()) break;
    if (text[pos] != '+') fail();
    ++pos;
  }
  return blocks;
}

unsigned default_transfer_bound(const CyclicModule& m) {
  unsigned total = 0;
  for (unsigned n : m.blocks()) total += n * (m.p() - 1);
  return total;
}

IdealPresentation transfer_ideal_gens(const CyclicModule& m, unsigned degree_bound, TransferCandidates candidates) {
  if (degree_bound == 0) throw Degenerate("transfer ideal needs a positive degree bound");
  const auto& ring = m.ring();
  const std::size_t n = m.nvars();
  const MonomialOrder ord(OrderKind::grevlex, n);

  std::vector<Monomial> pool;
  for (unsigned d = 1; d <= degree_bound; ++d)
    for (const auto& mono : monomials_of_degree(n, d)) {
      if (candidates == TransferCandidates::module_basis) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
          ok = m.is_fixed_variable(v) ? mono[v] == 0 : mono[v] < m.p();
        if (!ok) continue;
      }
      pool.push_back(mono);
    }
  std::stable_sort(pool.begin(), pool.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ord.greater(a, b);
  });

  BuchbergerOptions options;
  options.degree_cap = degree_bound;
  GroebnerEngine engine(ring, ord, options);
  std::vector<Polynomial> kept;
  unsigned current = 0;
  for (const auto& mono : pool) {
    Polynomial t = m.transfer(Polynomial::from_monomial(ring, mono));
    if (t.is_zero()) continue;
    if (mono.degree() != current) {
      engine.complete();
      current = mono.degree();
    }
    if (engine.add(t)) kept.push_back(std::move(t));
  }
  return IdealPresentation(ring, std::move(kept));
}

namespace {

Polynomial from_text(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

std::string pw(const std::string& var, unsigned e) { return e == 1 ? var : var + "^" + std::to_string(e); }

HilbertCatalogEntry lv2mv3_entry(std::uint32_t p, unsigned l, unsigned m) {
  if (l + m == 0) throw UnsupportedShape("lV2+mV3 needs l + m >= 1");
  if (m > 0 && p < 3) throw InvalidCharacteristic("V3 needs p >= 3");
  const unsigned r = l + m;
  if (2 * r + m > kMaxVars) throw UnsupportedShape("too many variables for lV2+mV3");
  auto x = [](unsigned i) { return "x" + std::to_string(i); };
  auto y = [](unsigned i) { return "y" + std::to_string(i); };
  auto z = [](unsigned i) { return "z" + std::to_string(i); };
  std::vector<std::string> names;
  for (unsigned i = r; i >= 1; --i) names.push_back(x(i));
  for (unsigned i = r; i >= 1; --i) names.push_back(y(i));
  for (unsigned i = r; i > l; --i) names.push_back(z(i));
  auto xi = [&](unsigned i) -> std::size_t { return r - i; };
  auto yi = [&](unsigned i) -> std::size_t { return r + (r - i); };
  auto zi = [&](unsigned i) -> std::size_t { return 2 * r + (r - i); };

  std::vector<unsigned> blocks;
  std::vector<std::vector<std::size_t>> placement;
  for (unsigned i = 1; i <= r; ++i) {
    if (i <= l) {
      blocks.push_back(2);
      placement.push_back({xi(i), yi(i)});
    } else {
      blocks.push_back(3);
      placement.push_back({xi(i), yi(i), zi(i)});
    }
  }
  CyclicModule module(p, blocks, Orientation::fixed_first, placement, names);
  const RingPtr ring = module.ring();
  std::vector<Polynomial> gens;
  for (unsigned i = 1; i <= l; ++i) {
    gens.push_back(from_text(ring, x(i)));
    gens.push_back(from_text(ring, pw(y(i), p)));
  }
  for (unsigned i = l + 1; i <= r; ++i) gens.push_back(from_text(ring, x(i)));
  for (unsigned i = l + 1; i <= r; ++i)
    for (unsigned j = i; j <= r; ++j) gens.push_back(from_text(ring, i == j ? pw(y(i), 2) : y(i) + "*" + y(j)));
  for (unsigned i = l + 1; i <= r; ++i) gens.push_back(from_text(ring, pw(z(i), p)));
  return {HilbertShape::lV2mV3, l, m, std::move(module), IdealPresentation(ring, std::move(gens))};
}

HilbertCatalogEntry v4_entry(std::uint32_t p) {
  if (p < 5) throw InvalidCharacteristic("the V4 catalog needs p >= 5");
  CyclicModule module(p, {4});
  const RingPtr ring = module.ring();
  std::vector<Polynomial> gens;
  for (const auto& text : {std::string("x1"), std::string("x2^2"), "x2*" + pw("x3", p - 3), pw("x3", p - 1),
                           pw("x4", p)})
    gens.push_back(from_text(ring, text));
  return {HilbertShape::V4, 0, 0, std::move(module), IdealPresentation(ring, std::move(gens))};
}

HilbertCatalogEntry v5_entry(std::uint32_t p) {
  if (p < 5) throw InvalidCharacteristic("the V5 catalog needs p >= 5");
  CyclicModule module(p, {5});
  const RingPtr ring = module.ring();
  if (p == 5) {
    auto gens = v5_alpha_gens(SquareMatrix::identity(ring->field(), 5));
    return {HilbertShape::V5, 0, 0, std::move(module), gens};
  }
  std::vector<Polynomial> gens;
  for (const auto& text : {std::string("x1"), std::string("x2^2"), std::string("x3^2 - 2*x2*x4 - x2*x3"),
                           std::string("x2*x3*x4"), "x2*" + pw("x4", p - 4), "x3*" + pw("x4", p - 3),
                           pw("x4", p - 1), pw("x5", p)})
    gens.push_back(from_text(ring, text));
  return {HilbertShape::V5, 0, 0, std::move(module), IdealPresentation(ring, std::move(gens))};
}

}  // namespace

HilbertCatalogEntry hilbert_ideal_gens(HilbertShape shape, std::uint32_t p, unsigned l, unsigned m) {
  if (!is_prime(p)) throw InvalidCharacteristic(std::to_string(p) + " is not prime");
  switch (shape) {
    case HilbertShape::lV2mV3:
      return lv2mv3_entry(p, l, m);
    case HilbertShape::V4:
      return v4_entry(p);
    case HilbertShape::V5:
      return v5_entry(p);
  }
  throw UnsupportedShape("unknown catalog shape");
}

V5Coefficients v5_coefficients(const SquareMatrix& alpha) {
  if (alpha.size() != 5) throw DimensionMismatch("V5 coefficients need a 5 x 5 matrix");
  if (!alpha.is_upper_triangular()) throw NotBorel("matrix is not upper triangular");
  if (!alpha.is_invertible()) throw NotInvertible("matrix is singular");
  auto a = [&](int i, int j) { return alpha.element(i - 1, j - 1); };
  const auto& field = alpha.field();
  auto k = [&](std::int64_t c) { return FieldElement::from_int(field, c); };
  const FieldElement inv33 = a(3, 3).inv();
  const FieldElement inv33sq = inv33 * inv33;
  const FieldElement a44sq = a(4, 4) * a(4, 4);
  V5Coefficients c{
      inv33sq * (k(2) * a(2, 3) * a(3, 3) - k(2) * a(2, 2) * a(3, 4) - a(2, 2) * a(3, 3)),
      inv33sq * (k(-2) * a(2, 2) * a(4, 4)),
      (k(4) * inv33 * a(2, 2) * a(3, 4) + k(2) * a(2, 2) + a(2, 3)) * a44sq,
      a(3, 3) * a44sq,
  };
  return c;
}

IdealPresentation v5_alpha_gens(const SquareMatrix& alpha) {
  const auto& field = alpha.field();
  const std::uint32_t p = field->characteristic();
  if (p < 5) throw InvalidCharacteristic("the V5 generating set needs p >= 5");
  const V5Coefficients c = v5_coefficients(alpha);
  auto ring = RingContext::standard(5, field);
  auto mono = [&](std::initializer_list<unsigned> e) { return Polynomial::from_monomial(ring, Monomial(e)); };
  auto scaled = [&](std::initializer_list<unsigned> e, const FieldElement& k) {
    return Polynomial::from_monomial(ring, Monomial(e), k.raw());
  };
  std::vector<Polynomial> gens;
  gens.push_back(mono({1, 0, 0, 0, 0}));
  gens.push_back(mono({0, 2, 0, 0, 0}));
  Polynomial f3 = mono({0, 0, 2, 0, 0});
  if (!c.C.is_zero()) f3 = f3 + scaled({0, 1, 1, 0, 0}, c.C);
  if (!c.D.is_zero()) f3 = f3 + scaled({0, 1, 0, 1, 0}, c.D);
  gens.push_back(f3);
  gens.push_back(mono({0, 1, 1, 1, 0}));
  if (p == 5) {
    Polynomial g = scaled({0, 0, 1, 2, 0}, c.D0);
    if (!c.C0.is_zero()) g = g + scaled({0, 1, 0, 2, 0}, c.C0);
    gens.push_back(g);
    gens.push_back(mono({0, 1, 0, 3, 0}));
    gens.push_back(mono({0, 0, 0, 4, 0}));
  } else {
    gens.push_back(mono({0, 1, 0, p - 4, 0}));
    gens.push_back(mono({0, 0, 1, p - 3, 0}));
    gens.push_back(mono({0, 0, 0, p - 1, 0}));
  }
  gens.push_back(mono({0, 0, 0, 0, p}));
  return IdealPresentation(ring, std::move(gens));
}

MonomialIdeal v5_gin_catalog(std::uint32_t p, OrderKind kind) {
  if (!is_prime(p) || p < 5) throw InvalidCharacteristic("the V5 gin needs a prime p >= 5");
  auto ring = RingContext::standard(5, Field::prime(p));
  std::vector<std::vector<unsigned>> exps;
  if (p == 5) {
    exps = {{1, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 2, 0}, {0, 0, 3, 0, 0},
            {0, 0, 2, 1, 0}, {0, 0, 1, 3, 0}, {0, 0, 0, 4, 0}, {0, 0, 0, 0, 5}};
  } else if (kind == OrderKind::grevlex) {
    exps = {{1, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 3, 0, 0},     {0, 0, 2, 1, 0},
            {0, 1, 0, p - 4, 0}, {0, 0, 1, p - 3, 0}, {0, 0, 0, p - 1, 0}, {0, 0, 0, 0, p}};
  } else {
    exps = {{1, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 3, 0, 0},     {0, 1, 0, 2, 0},
            {0, 0, 2, p - 5, 0}, {0, 0, 1, p - 3, 0}, {0, 0, 0, p - 1, 0}, {0, 0, 0, 0, p}};
  }
  std::vector<Monomial> gens;
  for (const auto& e : exps) gens.push_back(Monomial(std::span<const unsigned>(e)));
  return MonomialIdeal(ring, std::move(gens));
}

namespace {

MonomialIdeal truncated_initial(const IdealPresentation& gens, unsigned bound) {
  if (gens.generators().empty()) return MonomialIdeal(gens.ring(), {});
  BuchbergerOptions options;
  options.degree_cap = bound;
  MonomialOrder ord(OrderKind::grevlex, gens.ring()->nvars());
  return initial_ideal(buchberger(gens, ord, options)).truncated(bound);
}

// Degree-bounded candidates of the module basis of W, matching the
// ones transfer_ideal_gens would try.
std::vector<Monomial> basis_monomials(const CyclicModule& m, unsigned bound) {
  std::vector<Monomial> out;
  for (unsigned d = 1; d <= bound; ++d)
    for (const auto& mono : monomials_of_degree(m.nvars(), d)) {
      bool ok = true;
      for (std::size_t v = 0; v < m.nvars() && ok; ++v)
        ok = m.is_fixed_variable(v) ? mono[v] == 0 : mono[v] < m.p();
      if (ok) out.push_back(mono);
    }
  return out;
}

}  // namespace

HeredityReport check_transfer_heredity(const CyclicModule& m, std::size_t k, std::optional<unsigned> bound) {
  const CyclicModule w = m.submodule(k);
  const unsigned degree_bound = bound.value_or(default_transfer_bound(m));
  const MonomialOrder ord_v(OrderKind::grevlex, m.nvars());
  const MonomialOrder ord_w(OrderKind::grevlex, w.nvars());

  const IdealPresentation tv = transfer_ideal_gens(m, degree_bound);
  const IdealPresentation tw = transfer_ideal_gens(w, degree_bound);
  HeredityReport report{degree_bound, false, false, false, false, false, truncated_initial(tv, degree_bound),
                        truncated_initial(tw, degree_bound)};
  report.v_borel = is_borel_fixed(report.in_v, ord_v).fixed;
  report.w_borel = is_borel_fixed(report.in_w, ord_w).fixed;
  report.implication_holds = !report.v_borel || report.w_borel;

  // Lifting: every transfer generating T(W) is phi* of the transfer of the
  // monomial with the same exponents in V.
  report.surjective = true;
  for (const auto& h : basis_monomials(w, report.bound)) {
    Polynomial tw_h = w.transfer(Polynomial::from_monomial(w.ring(), h));
    if (tw_h.is_zero()) continue;
    Monomial lift(m.nvars());
    for (std::size_t v = 0; v < k; ++v) lift.set(v, h[v]);
    Polynomial image = m.restrict(m.transfer(Polynomial::from_monomial(m.ring(), lift)), k);
    if (image != tw_h) {
      report.surjective = false;
      break;
    }
  }

  BuchbergerOptions options;
  options.degree_cap = report.bound;
  GroebnerEngine engine(w.ring(), ord_w, options);
  for (const auto& g : tw.generators()) engine.add(g);
  engine.complete();
  report.image_in_tw = true;
  for (const auto& g : tv.generators())
    if (!engine.normal_form(m.restrict(g, k)).is_zero()) {
      report.image_in_tw = false;
      break;
    }
  return report;
}

std::optional<bool> initial_term_commutes(const CyclicModule& m, std::size_t k, const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const MonomialOrder ord_v(OrderKind::grevlex, m.nvars());
  const MonomialOrder ord_w(OrderKind::grevlex, k);
  const Polynomial lead = Polynomial::from_monomial(f.ring(), f.leading_monomial(ord_v));
  const Polynomial lead_image = m.restrict(lead, k);
  if (lead_image.is_zero()) return std::nullopt;
  const Polynomial image = m.restrict(f, k);
  return image.leading_monomial(ord_w) == lead_image.leading_monomial(ord_w);
}

}  // namespace modgin
