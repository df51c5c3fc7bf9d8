#include "modgin/groebner.hpp"

#include "support.hpp"

using namespace modgin;
using namespace modgin::testing;

namespace {

const MonomialOrder kGrevlex5(OrderKind::grevlex, 5);
const MonomialOrder kLex5(OrderKind::lex, 5);

std::vector<std::string> v5_generators_p7() {
  return {"x1", "x2^2", "x3^2 - 2*x2*x4 - x2*x3", "x2*x3*x4", "x2*x4^3", "x3*x4^4", "x4^6", "x5^7"};
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  return divide(f, basis, ord).remainder.is_zero();
}

void check_reduced(const GroebnerBasis& gb) {
  const auto& ord = gb.order;
  std::vector<Monomial> lms;
  for (const auto& g : gb.elements) {
    REQUIRE(g.leading_term(ord).second.raw() == g.field().one());
    lms.push_back(g.leading_monomial(ord));
  }
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (const auto& t : gb.elements[i].terms())
      for (std::size_t j = 0; j < lms.size(); ++j)
        if (j != i) REQUIRE_FALSE(lms[j].divides(t.monomial));
  for (std::size_t i = 1; i < lms.size(); ++i) REQUIRE(ord.greater(lms[i - 1], lms[i]));
}

void check_s_pairs(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      auto s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
      if (gb.degree_cap && s.total_degree() > *gb.degree_cap) continue;
      REQUIRE(reduces_to_zero(s, gb.elements, gb.order));
    }
}

}  // namespace

TEST_CASE("division by the first applicable divisor") {
  auto R = ring_of(5, 7);
  auto C = R->field()->from_int(-1), D = R->field()->from_int(-2);
  auto f3 = poly(R, "x3^2 - x2*x3 - 2*x2*x4");
  auto x2f3 = poly(R, "x2") * f3;
  auto divisors = polys(R, {"x2^2", "x1"});
  auto res = divide(x2f3, divisors, kGrevlex5);
  CHECK(res.remainder == poly(R, "x2*x3^2"));
  CHECK(res.quotients[0] == poly(R, "x3").scale(C) + poly(R, "x4").scale(D));
  CHECK(res.quotients[1].is_zero());

  auto self = divide(f3, std::vector<Polynomial>{f3}, kLex5);
  CHECK(self.quotients[0] == Polynomial::constant(R, 1));
  CHECK(self.remainder.is_zero());

  auto none = divide(poly(R, "x1*x5"), polys(R, {"x2"}), kLex5);
  CHECK(none.remainder == poly(R, "x1*x5"));
  CHECK(none.quotients[0].is_zero());

  CHECK_THROWS_AS(divide(f3, std::vector<Polynomial>{Polynomial(R)}, kLex5), ZeroDivisor);
}

TEST_CASE("S-polynomials of the quadratic V5 generators") {
  auto R = ring_of(5, 7);
  const auto& F = *R->field();
  auto f2 = poly(R, "x2^2"), f3 = poly(R, "x3^2 - x2*x3 - 2*x2*x4"), f4 = poly(R, "x2*x3*x4");
  auto s23 = s_polynomial(f2, f3, kGrevlex5);
  CHECK(s23 == poly(R, "x2*x3^2 - 2*x2^2*x4"));
  // x2*x3*x4 must go through f4; f3 would also divide it
  auto r = divide(s23, std::vector<Polynomial>{f2, f4, f3}, kGrevlex5).remainder;
  CHECK(r == poly(R, "x3^3"));
  auto listed = divide(s23, std::vector<Polynomial>{f2, f3, f4}, kGrevlex5).remainder;
  CHECK(listed == poly(R, "x3^3 - 2*x3^2*x4 + 4*x2*x4^2"));

  auto Cinv = F.inv(F.from_int(-1));
  auto s34 = s_polynomial(f3, f4, kGrevlex5);
  CHECK(s34 == poly(R, "x3^2*x4 - 2*x2*x4^2").scale(Cinv));

  CHECK(s_polynomial(poly(R, "x1*x2"), poly(R, "x2^3"), kLex5).is_zero());
  CHECK_THROWS_AS(s_polynomial(Polynomial(R), f2, kLex5), ZeroPolynomial);
}

TEST_CASE("monomial generators form their own basis") {
  auto R = ring_of(4, 7);
  auto gens = polys(R, {"x4^7", "x1", "x2*x3^4", "x3^6", "x2^2", "x1*x2"});
  auto gb = buchberger(IdealPresentation(R, gens), MonomialOrder(OrderKind::lex, 4));
  auto in = initial_ideal(gb);
  CHECK(in == monomial_ideal(R, {"x1", "x2^2", "x2*x3^4", "x3^6", "x4^7"}));
  CHECK(in.to_string() == "x1, x2^2, x2*x3^4, x3^6, x4^7");
  CHECK(gb.elements.size() == 5);
}

TEST_CASE("initial ideals of the V5 generating set") {
  auto R = ring_of(5, 7);
  IdealPresentation I(R, polys(R, v5_generators_p7()));
  auto A = monomial_ideal(R, {"x1", "x2^2", "x2*x3", "x3^3", "x3^2*x4", "x2*x4^3", "x3*x4^4", "x4^6", "x5^7"});
  auto B = monomial_ideal(R, {"x1", "x2^2", "x2*x3", "x3^3", "x2*x4^2", "x3^2*x4^2", "x3*x4^4", "x4^6", "x5^7"});
  auto gb_g = buchberger(I, kGrevlex5);
  CHECK(initial_ideal(gb_g) == A);
  check_reduced(gb_g);
  check_s_pairs(gb_g);
  auto gb_l = buchberger(I, kLex5);
  CHECK(initial_ideal(gb_l) == B);
  check_reduced(gb_l);
  check_s_pairs(gb_l);
  for (const auto& g : gb_g.elements) CHECK(g.is_homogeneous());
}

TEST_CASE("membership") {
  auto R = ring_of(5, 7);
  auto gb = buchberger(IdealPresentation(R, polys(R, v5_generators_p7())), kGrevlex5);
  CHECK(membership(poly(R, "x2*x3^2"), gb));
  CHECK(membership(Polynomial(R), gb));
  CHECK_FALSE(membership(poly(R, "x2*x3^2 + x4^5"), gb));

  auto R5 = ring_of(5, 7);
  auto v4 = buchberger(IdealPresentation(R5, polys(R5, {"x1", "x2^2", "x2*x3^4", "x3^6", "x4^7"})), kLex5);
  CHECK_FALSE(membership(poly(R5, "x5"), v4));

  BuchbergerOptions capped;
  capped.degree_cap = 3;
  auto gbc = buchberger(IdealPresentation(R, polys(R, v5_generators_p7())), kGrevlex5, capped);
  CHECK(gbc.degree_cap == 3u);
  CHECK(membership(poly(R, "x2*x3^2"), gbc));
  CHECK_THROWS_AS(membership(poly(R, "x4^6"), gbc), CapExceeded);
}

TEST_CASE("initial ideal of a principal ideal") {
  auto R = ring_of(5, 7);
  IdealPresentation I(R, polys(R, {"x3^2 - 2*x2*x4 - x2*x3"}));
  CHECK(initial_ideal(buchberger(I, kLex5)) == monomial_ideal(R, {"x2*x3"}));
  CHECK(initial_ideal(buchberger(I, kGrevlex5)) == monomial_ideal(R, {"x2*x3"}));
  auto perm = MonomialOrder(OrderKind::lex, Permutation::from_one_based({1, 2, 4, 3, 5}));
  CHECK(initial_ideal(buchberger(I, perm)) == monomial_ideal(R, {"x2*x4"}));
}

TEST_CASE("ideal equality") {
  auto R = ring_of(3, 5);
  MonomialOrder lex(OrderKind::lex, 3);
  CHECK(ideal_equal(IdealPresentation(R, polys(R, {"x1"})), IdealPresentation(R, polys(R, {"x1", "x1^2"})), lex));
  CHECK_FALSE(ideal_equal(IdealPresentation(R, polys(R, {"x1"})), IdealPresentation(R, polys(R, {"x2"})), lex));
  CHECK(ideal_equal(IdealPresentation(R, polys(R, {"x1 + x2", "x1 - x2"})),
                    IdealPresentation(R, polys(R, {"x1", "x2"})), lex));
  CHECK(ideal_equal(IdealPresentation(R, {}), IdealPresentation(R, {}), lex));
  CHECK_THROWS_AS(IdealPresentation(R, {Polynomial(R)}), ZeroPolynomial);
}

TEST_CASE("monomial ideal operations") {
  auto R = ring_of(3, 5);
  auto I = monomial_ideal(R, {"x2^2", "x1", "x1*x3", "x3^3"});
  CHECK(I.generators().size() == 3);
  CHECK(I.contains(Monomial{0, 2, 1}));
  CHECK_FALSE(I.contains(Monomial{0, 1, 2}));
  CHECK(I.contains(poly(R, "x1*x2 + 2*x3^4")));
  CHECK_FALSE(I.contains(poly(R, "x1 + x2")));
  auto slice = I.degree_slice(2);
  CHECK(slice.size() == 4);  // x1^2, x1x2, x1x3, x2^2
  CHECK(I.truncated(2) == monomial_ideal(R, {"x1", "x2^2"}));
  CHECK(I.permuted(Permutation::from_one_based({3, 2, 1})) == monomial_ideal(R, {"x3", "x2^2", "x1^3"}));
  CHECK(MonomialIdeal(R, {}).to_string() == "0");
}

TEST_CASE("division invariant on random inputs") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    auto p = std::vector<unsigned>{2, 3, 5, 7}[i % 4];
    auto R = ring_of(2 + uniform_below(rng, 3), p);
    MonomialOrder ord(i % 3 ? OrderKind::grevlex : OrderKind::lex, random_permutation(rng, R->nvars()));
    auto f = random_polynomial(rng, R, 6, 4);
    std::vector<Polynomial> ds;
    for (std::size_t k = 0, nd = 1 + uniform_below(rng, 3); k < nd; ++k) {
      auto d = random_polynomial(rng, R, 1 + uniform_below(rng, 3), 2);
      if (!d.is_zero()) ds.push_back(d);
    }
    if (ds.empty()) continue;
    auto res = divide(f, ds, ord);
    Polynomial sum = res.remainder;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      sum = sum + res.quotients[k] * ds[k];
      if (!res.quotients[k].is_zero() && !f.is_zero())
        REQUIRE(ord.compare((res.quotients[k] * ds[k]).leading_monomial(ord), f.leading_monomial(ord)) <= 0);
    }
    REQUIRE(sum == f);
    for (const auto& t : res.remainder.terms())
      for (const auto& d : ds) REQUIRE_FALSE(d.leading_monomial(ord).divides(t.monomial));
  }
}

TEST_CASE("Buchberger self-check on random ideals") {
  Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    auto p = std::vector<unsigned>{2, 3, 5, 7}[i % 4];
    auto R = ring_of(2 + uniform_below(rng, 2), p);
    MonomialOrder ord(i % 2 ? OrderKind::grevlex : OrderKind::lex, random_permutation(rng, R->nvars()));
    std::vector<Polynomial> gens;
    bool homogeneous = i % 3 == 0;
    for (std::size_t k = 0, ng = 1 + uniform_below(rng, 3); k < ng; ++k) {
      auto g = homogeneous ? random_homogeneous(rng, R, 3, 1 + static_cast<unsigned>(uniform_below(rng, 3)))
                           : random_polynomial(rng, R, 3, 2);
      if (!g.is_zero()) gens.push_back(g);
    }
    IdealPresentation I(R, gens);
    auto gb = buchberger(I, ord);
    check_reduced(gb);
    check_s_pairs(gb);
    for (const auto& g : gens) REQUIRE(reduces_to_zero(g, gb.elements, ord));
    if (homogeneous)
      for (const auto& g : gb.elements) REQUIRE(g.is_homogeneous());
    // membership does not depend on the order
    MonomialOrder other(i % 2 ? OrderKind::lex : OrderKind::grevlex, R->nvars());
    auto gb2 = buchberger(I, other);
    for (int k = 0; k < 3; ++k) {
      auto f = random_polynomial(rng, R, 2, 2);
      auto probe = k == 0 ? f * gens.front() + gens.back() : f;
      REQUIRE(membership(probe, gb) == membership(probe, gb2));
    }
  }
}

TEST_CASE("engine normal form matches reference division against a basis") {
  Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    auto R = ring_of(3, 5);
    MonomialOrder ord(OrderKind::grevlex, 3);
    std::vector<Polynomial> gens{random_homogeneous(rng, R, 3, 2), random_homogeneous(rng, R, 3, 3)};
    if (gens[0].is_zero() || gens[1].is_zero()) continue;
    GroebnerEngine engine(R, ord);
    for (const auto& g : gens) engine.add(g);
    auto gb = engine.reduced_basis();
    auto f = random_polynomial(rng, R, 5, 4);
    REQUIRE(engine.normal_form(f) == divide(f, gb.elements, ord).remainder);
  }
}

TEST_CASE("degree-capped bases are correct up to the cap") {
  auto R = ring_of(5, 7);
  IdealPresentation I(R, polys(R, v5_generators_p7()));
  auto full = buchberger(I, kGrevlex5);
  for (unsigned cap = 1; cap <= 7; ++cap) {
    BuchbergerOptions opt;
    opt.degree_cap = cap;
    auto capped = buchberger(I, kGrevlex5, opt);
    CHECK(initial_ideal(capped).truncated(cap) == initial_ideal(full).truncated(cap));
  }
}

TEST_CASE("resource limit on the pair queue") {
  auto R = ring_of(4, 7);
  BuchbergerOptions opt;
  opt.max_pairs = 2;
  IdealPresentation I(R, polys(R, {"x1^2 + x2*x3", "x2^2 + x3*x4", "x3^2 + x1*x4", "x4^2 + x1*x2"}));
  CHECK_THROWS_AS(buchberger(I, MonomialOrder(OrderKind::grevlex, 4), opt), ResourceLimit);
}
