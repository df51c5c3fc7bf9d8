#include "modgin/reproduce.hpp"

#include <algorithm>
#include <chrono>

namespace modgin {

namespace {

using Detail = std::string;

struct Sizes {
  unsigned alphas;
  unsigned zero_c;
  unsigned perms;
  unsigned random_cases;
};

Sizes sizes(const ReproduceOptions& o) { return o.fast ? Sizes{5, 2, 3, 100} : Sizes{20, 5, 10, 500}; }

GinOptions gin_options(const ReproduceOptions& o, std::uint64_t seed) {
  GinOptions g;
  g.trials = 16;
  g.seed = seed;
  g.threads = o.threads;
  return g;
}

MonomialIdeal monomials_of(const IdealPresentation& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw InvalidArgument("catalog ideal is not monomial");
    gens.push_back(g.terms().front().monomial);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

const char* order_name(OrderKind k) { return k == OrderKind::lex ? "lex" : "grevlex"; }

Monomial random_monomial(Rng& rng, std::size_t n, unsigned max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<unsigned>(uniform_below(rng, max_exp + 1)));
  return m;
}

Monomial random_monomial_of_degree(Rng& rng, std::size_t n, unsigned d) {
  Monomial m(n);
  for (unsigned k = 0; k < d; ++k) {
    auto v = uniform_below(rng, n);
    m.set(v, m[v] + 1);
  }
  return m;
}

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::size_t terms, unsigned max_exp) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i)
    ts.push_back({random_monomial(rng, ring->nvars(), max_exp), ring->field()->random_nonzero(rng)});
  return Polynomial::from_terms(ring, std::move(ts));
}

Polynomial random_homogeneous(Rng& rng, const RingPtr& ring, std::size_t terms, unsigned degree) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i)
    ts.push_back({random_monomial_of_degree(rng, ring->nvars(), degree), ring->field()->random_nonzero(rng)});
  return Polynomial::from_terms(ring, std::move(ts));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[uniform_below(rng, i)]);
  return Permutation(images);
}

bool same_set(std::vector<Monomial> a, std::vector<Monomial> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Catalog ideals whose gin is the ideal itself.
std::vector<HilbertCatalogEntry> monomial_catalogs() {
  std::vector<HilbertCatalogEntry> out;
  for (std::uint32_t p : {5u, 7u})
    for (auto [l, m] : {std::pair{1u, 0u}, {0u, 1u}, {1u, 1u}}) out.push_back(hilbert_ideal_gens(HilbertShape::lV2mV3, p, l, m));
  for (std::uint32_t p : {5u, 7u, 11u}) out.push_back(hilbert_ideal_gens(HilbertShape::V4, p));
  return out;
}

std::string label(const HilbertCatalogEntry& e) { return e.module.shape() + " p=" + std::to_string(e.module.p()); }

Detail monomial_gins(const ReproduceOptions& o) {
  for (const auto& e : monomial_catalogs()) {
    const auto L = monomials_of(e.ideal);
    const std::size_t n = e.module.nvars();
    if (!is_borel_fixed(L, MonomialOrder(OrderKind::lex, n)).fixed) return label(e) + ": catalog ideal not Borel fixed";
    for (auto kind : {OrderKind::lex, OrderKind::grevlex}) {
      auto rep = gin(e.ideal, MonomialOrder(kind, n), gin_options(o, 1));
      if (rep.result != L) return label(e) + " " + order_name(kind) + ": gin is " + rep.result.to_string();
      if (rep.agreeing != rep.trials) return label(e) + " " + order_name(kind) + ": agreement below 1";
    }
  }
  return {};
}

Detail permutation_theorem(const ReproduceOptions& o) {
  const Sizes s = sizes(o);
  Rng rng(2);
  auto v4 = hilbert_ideal_gens(HilbertShape::V4, 5);
  const auto M = monomials_of(v4.ideal);
  for (unsigned i = 0; i < s.perms; ++i) {
    auto pi = random_permutation(rng, 4);
    auto kind = i % 2 ? OrderKind::lex : OrderKind::grevlex;
    auto check = check_permutation_theorem(v4.ideal, MonomialOrder(kind, 4), pi, gin_options(o, 100 + i));
    const auto target = M.permuted(pi);
    if (!check.holds || check.permuted_gin != target || check.permuted_order_gin != target)
      return "V4 p=5 " + std::string(order_name(kind)) + " perm " + pi.to_string();
  }
  auto ring = RingContext::standard(3, Field::prime(7));
  for (unsigned i = 0; i < s.perms; ++i) {
    std::vector<Polynomial> gens;
    const unsigned count = 1 + static_cast<unsigned>(uniform_below(rng, 3));
    while (gens.size() < count) {
      auto f = random_homogeneous(rng, ring, 1 + uniform_below(rng, 4), 1 + static_cast<unsigned>(uniform_below(rng, 3)));
      if (!f.is_zero()) gens.push_back(std::move(f));
    }
    IdealPresentation ideal(ring, std::move(gens));
    auto pi = random_permutation(rng, 3);
    auto kind = i % 2 ? OrderKind::lex : OrderKind::grevlex;
    auto check = check_permutation_theorem(ideal, MonomialOrder(kind, 3), pi, gin_options(o, 200 + i));
    if (!check.holds) return "random ideal " + std::to_string(i) + " perm " + pi.to_string();
  }
  return {};
}

Detail v5_generation(const ReproduceOptions& o) {
  auto entry = hilbert_ideal_gens(HilbertShape::V5, o.p);
  const MonomialOrder ident(OrderKind::lex, 5);
  unsigned i = 0;
  for (const auto& a : v5_generic_matrices(entry.module.ring()->field(), 3, sizes(o).alphas)) {
    if (!ideal_equal(apply_matrix(entry.ideal, a, ident), v5_alpha_gens(a), MonomialOrder(OrderKind::grevlex, 5)))
      return "matrix " + std::to_string(i) + "\n" + a.to_string();
    ++i;
  }
  return {};
}

Detail v5_groebner(const ReproduceOptions& o) {
  auto entry = hilbert_ideal_gens(HilbertShape::V5, o.p);
  const auto& field = entry.module.ring()->field();
  const MonomialOrder ident(OrderKind::lex, 5);
  unsigned i = 0;
  for (const auto& a : v5_generic_matrices(field, 3, sizes(o).alphas)) {
    auto image = apply_matrix(entry.ideal, a, ident);
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
      auto in = initial_ideal(buchberger(image, MonomialOrder(kind, 5)));
      if (in != v5_gin_catalog(o.p, kind))
        return "matrix " + std::to_string(i) + " " + order_name(kind) + ": " + in.to_string();
    }
    ++i;
  }
  for (unsigned k = 0; k < sizes(o).zero_c; ++k) {
    auto a = v5_zero_c_matrix(field, 1000 + k);
    auto image = apply_matrix(entry.ideal, a, ident);
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
      MonomialOrder ord(kind, 5);
      auto in = initial_ideal(buchberger(image, ord));
      auto verdict = is_borel_fixed(in, ord);
      const Monomial x2x3{0, 1, 1, 0, 0};
      if (verdict.fixed) return "C = 0 matrix " + std::to_string(k) + " " + order_name(kind) + ": Borel fixed";
      if (!(verdict.witness->moved == x2x3) || in.contains(x2x3))
        return "C = 0 matrix " + std::to_string(k) + " " + order_name(kind) + ": witness " +
               describe(*verdict.witness, *in.ring());
    }
  }
  return {};
}

Detail v5_gin(const ReproduceOptions& o) {
  auto entry = hilbert_ideal_gens(HilbertShape::V5, o.p);
  for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
    MonomialOrder ord(kind, 5);
    auto rep = gin(entry.ideal, ord, gin_options(o, 5));
    const std::string tag = std::string(order_name(kind)) + ": ";
    if (rep.result != v5_gin_catalog(o.p, kind)) return tag + "gin is " + rep.result.to_string();
    if (!rep.borel_fixed) return tag + "gin not Borel fixed";
    if (rep.agreeing * 16 < 15 * rep.trials) return tag + "agreement " + std::to_string(rep.agreeing);
    if (initial_ideal(buchberger(entry.ideal, ord)) != rep.result) return tag + "initial ideal differs from gin";
  }
  return {};
}

Detail p5_remark(const ReproduceOptions& o) {
  auto entry = hilbert_ideal_gens(HilbertShape::V5, 5);
  for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
    auto rep = gin(entry.ideal, MonomialOrder(kind, 5), gin_options(o, 6));
    if (rep.result != v5_gin_catalog(5, kind)) return std::string(order_name(kind)) + ": gin is " + rep.result.to_string();
  }
  return {};
}

Detail transfer_heredity(const ReproduceOptions& o) {
  Rng rng(7);
  for (std::uint32_t p : {3u, 5u})
    for (const auto& blocks : {std::vector<unsigned>{3}, std::vector<unsigned>{2, 2}, std::vector<unsigned>{2, 3}}) {
      CyclicModule m(p, blocks, Orientation::fixed_last);
      const std::string tag = m.shape() + " p=" + std::to_string(p) + ": ";
      auto report = check_transfer_heredity(m, 2);
      if (!report.implication_holds) return tag + "implication fails";
      if (!report.surjective || !report.image_in_tw) return tag + "restriction of transfer ideals";
      unsigned seen = 0;
      while (seen < sizes(o).random_cases) {
        auto f = random_polynomial(rng, m.ring(), 1 + uniform_below(rng, 5), p + 1);
        auto verdict = initial_term_commutes(m, 2, f);
        if (!verdict) continue;
        if (!*verdict) return tag + "initial term lemma fails for " + f.to_string(MonomialOrder(OrderKind::grevlex, m.nvars()));
        ++seen;
      }
    }
  return {};
}

Detail slice_oracle(const ReproduceOptions& o) {
  auto entries = monomial_catalogs();
  entries.push_back(hilbert_ideal_gens(HilbertShape::V5, o.p));
  entries.push_back(hilbert_ideal_gens(HilbertShape::V5, 5));
  for (const auto& e : entries) {
    const std::size_t n = e.module.nvars();
    const unsigned top = (o.fast ? 1 : 2) * e.module.p();
    auto field = Field::sampling(e.module.p());
    for (auto kind : {OrderKind::lex, OrderKind::grevlex}) {
      MonomialOrder ord(kind, n);
      auto result = gin(e.ideal, ord, gin_options(o, 8)).result;
      for (unsigned d = 1; d <= top; ++d) {
        auto slice = gin_degree_slice(e.ideal, d, ord, field, derive_seed(8, d));
        if (!same_set(slice, result.degree_slice(d)))
          return label(e) + " " + order_name(kind) + " degree " + std::to_string(d);
      }
    }
  }
  return {};
}

Detail field_properties(unsigned cases) {
  Rng rng(9);
  for (const auto& F : {Field::prime(7), Field::extension(5, 2, 1), Field::extension(2, 8), Field::sampling(3)}) {
    const Field& f = *F;
    const std::string tag = "F_" + std::to_string(f.size()) + ": ";
    for (unsigned i = 0; i < cases; ++i) {
      auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return tag + "commutativity";
      if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return tag + "additive associativity";
      if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return tag + "multiplicative associativity";
      if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return tag + "distributivity";
      if (f.add(a, f.neg(a)) != f.zero()) return tag + "negation";
      if (a != f.zero() && f.mul(a, f.inv(a)) != f.one()) return tag + "inverse";
      const auto p = f.characteristic();
      if (f.pow(f.add(a, b), p) != f.add(f.pow(a, p), f.pow(b, p))) return tag + "Frobenius";
      if (f.pow(a, f.size()) != a) return tag + "a^q = a";
    }
  }
  return {};
}

Detail order_properties(unsigned cases) {
  Rng rng(10);
  for (unsigned i = 0; i < cases; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 4);
    MonomialOrder ord(i % 2 ? OrderKind::lex : OrderKind::grevlex, random_permutation(rng, n));
    auto a = random_monomial(rng, n, 4), b = random_monomial(rng, n, 4), c = random_monomial(rng, n, 4);
    const int ab = ord.compare(a, b);
    if (ab != -ord.compare(b, a)) return ord.name() + ": antisymmetry";
    if ((ab == 0) != (a == b)) return ord.name() + ": totality";
    if (ord.compare(a * c, b * c) != ab) return ord.name() + ": multiplicativity";
    if (ord.compare(a, Monomial(n)) < 0) return ord.name() + ": well ordering";
    if (ab > 0 && ord.compare(b, c) > 0 && ord.compare(a, c) <= 0) return ord.name() + ": transitivity";
  }
  return {};
}

Detail division_properties(unsigned cases) {
  Rng rng(11);
  for (unsigned i = 0; i < cases; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 3);
    auto ring = RingContext::standard(n, Field::prime(i % 2 ? 5 : 7));
    MonomialOrder ord(i % 3 ? OrderKind::grevlex : OrderKind::lex, random_permutation(rng, n));
    auto f = random_polynomial(rng, ring, 1 + uniform_below(rng, 6), 4);
    std::vector<Polynomial> divisors;
    while (divisors.size() < 1 + uniform_below(rng, 3)) {
      auto g = random_polynomial(rng, ring, 1 + uniform_below(rng, 3), 2);
      if (!g.is_zero()) divisors.push_back(std::move(g));
    }
    auto res = divide(f, divisors, ord);
    Polynomial sum = res.remainder;
    for (std::size_t k = 0; k < divisors.size(); ++k) sum = sum + res.quotients[k] * divisors[k];
    if (sum != f) return "case " + std::to_string(i) + ": f != sum q g + r";
    for (const auto& t : res.remainder.terms())
      for (const auto& g : divisors)
        if (g.leading_monomial(ord).divides(t.monomial)) return "case " + std::to_string(i) + ": reducible remainder";
  }
  return {};
}

Detail buchberger_properties(unsigned cases) {
  Rng rng(12);
  for (unsigned i = 0; i < cases; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 2);
    auto ring = RingContext::standard(n, Field::prime(i % 2 ? 3 : 7));
    MonomialOrder ord(i % 2 ? OrderKind::lex : OrderKind::grevlex, random_permutation(rng, n));
    std::vector<Polynomial> gens;
    while (gens.size() < 1 + uniform_below(rng, 3)) {
      auto g = random_polynomial(rng, ring, 1 + uniform_below(rng, 3), 2);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    IdealPresentation ideal(ring, gens);
    auto gb = buchberger(ideal, ord);
    const std::string tag = "case " + std::to_string(i) + ": ";
    const auto& el = gb.elements;
    for (std::size_t a = 0; a < el.size(); ++a) {
      if (el[a].leading_term(ord).second.raw() != ring->field()->one()) return tag + "not monic";
      for (std::size_t b = 0; b < el.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : el[a].terms())
          if (el[b].leading_monomial(ord).divides(t.monomial)) return tag + "not reduced";
        if (b > a && !divide(s_polynomial(el[a], el[b], ord), el, ord).remainder.is_zero())
          return tag + "S-polynomial does not reduce to zero";
      }
    }
    for (const auto& g : gens)
      if (!divide(g, el, ord).remainder.is_zero()) return tag + "generator not in the basis ideal";
  }
  return {};
}

Detail borel_agreement(unsigned cases) {
  Rng rng(13);
  for (unsigned i = 0; i < cases; ++i) {
    const std::uint32_t p = i % 3 == 0 ? 2 : (i % 3 == 1 ? 3 : 5);
    auto ring = RingContext::standard(3, Field::prime(p));
    std::vector<Monomial> gens;
    const auto count = 1 + uniform_below(rng, 4);
    for (std::size_t k = 0; k < count; ++k) {
      auto m = random_monomial(rng, 3, 4);
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    MonomialIdeal ideal(ring, std::move(gens));
    MonomialOrder ord(OrderKind::lex, 3);
    const bool combinatorial = is_borel_fixed(ideal, ord).fixed;
    const bool randomized = randomized_borel_check(ideal, ord, 8, derive_seed(13, i), Field::sampling(p));
    if (combinatorial != randomized) return "ideal " + ideal.to_string() + " over F_" + std::to_string(p);
  }
  return {};
}

Detail kernel_properties(const ReproduceOptions& o) {
  const unsigned cases = sizes(o).random_cases;
  for (const auto& check : {field_properties, order_properties, division_properties, buchberger_properties,
                            borel_agreement}) {
    Detail d = check(cases);
    if (!d.empty()) return d;
  }
  return {};
}

Detail derived_transfer(const ReproduceOptions&) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CyclicModule v2(p, {2});
    const auto& ring = v2.ring();
    const auto x1 = Polynomial::variable(ring, 0), x2 = Polynomial::variable(ring, 1);
    Polynomial literal(ring);
    for (std::uint32_t t = 0; t < p; ++t) literal = literal + (x2 + x1.scale(ring->field()->from_int(t))).pow(p - 1);
    const Polynomial expected = -x1.pow(p - 1);
    if (v2.transfer(x2.pow(p - 1)) != expected) return "p=" + std::to_string(p) + ": transfer";
    if (literal != expected) return "p=" + std::to_string(p) + ": literal sum";
  }
  return {};
}

using ClaimFn = Detail (*)(const ReproduceOptions&);

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> claims{
      {"monomial-gins", monomial_gins},
      {"permutation-theorem", permutation_theorem},
      {"v5-generation", v5_generation},
      {"v5-groebner", v5_groebner},
      {"v5-gin", v5_gin},
      {"p5-remark", p5_remark},
      {"transfer-heredity", transfer_heredity},
      {"slice-oracle", slice_oracle},
      {"kernel-properties", kernel_properties},
      {"derived-transfer", derived_transfer},
  };
  return claims;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

ClaimResult run_claim(const std::string& id, const ReproduceOptions& options) {
  if (!is_prime(options.p) || options.p < 7) throw InvalidArgument("--p must be a prime >= 7");
  const auto& claims = registry();
  auto it = std::find_if(claims.begin(), claims.end(), [&](const auto& c) { return c.first == id; });
  if (it == claims.end()) throw InvalidArgument("unknown claim '" + id + "'");
  ClaimResult result;
  result.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = it->second(options);
    result.pass = result.detail.empty();
  } catch (const Error& e) {
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<ClaimResult> reproduce_paper(const ReproduceOptions& options) {
  std::vector<ClaimResult> out;
  for (const auto& id : claim_ids()) out.push_back(run_claim(id, options));
  return out;
}

SquareMatrix v5_zero_c_matrix(const FieldPtr& field, std::uint64_t seed) {
  SquareMatrix a = sample_matrix(MatrixKind::borel, 5, field, seed);
  const Field& f = *field;
  // 2 a23 a33 = 2 a22 a34 + a22 a33
  const Field::Elem rhs = f.mul(a.at(1, 1), f.add(f.mul(f.from_int(2), a.at(2, 3)), a.at(2, 2)));
  a.set(1, 2, f.div(rhs, f.mul(f.from_int(2), a.at(2, 2))));
  return a;
}

std::vector<SquareMatrix> v5_generic_matrices(const FieldPtr& field, std::uint64_t seed, unsigned count) {
  std::vector<SquareMatrix> out;
  for (std::uint64_t stream = 0; out.size() < count; ++stream) {
    auto a = sample_matrix(MatrixKind::borel, 5, field, derive_seed(seed, stream));
    if (!v5_coefficients(a).C.is_zero()) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace modgin
