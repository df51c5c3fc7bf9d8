#include "modgin/ring.hpp"

#include "support.hpp"

using namespace modgin;
using namespace modgin::testing;

TEST_CASE("order comparisons in five variables") {
  auto R = ring_of(5, 7);
  Monomial x3sq{0, 0, 2, 0, 0}, x2x4{0, 1, 0, 1, 0};
  MonomialOrder grevlex(OrderKind::grevlex, 5), lex(OrderKind::lex, 5);
  CHECK(grevlex.compare(x3sq, x2x4) == 1);
  CHECK(lex.compare(x3sq, x2x4) == -1);
  CHECK(lex.compare(x3sq, x3sq) == 0);
  CHECK(grevlex.compare(x2x4, x2x4) == 0);
  CHECK_THROWS_AS(lex.compare(x3sq, Monomial{1, 0}), RingMismatch);
}

TEST_CASE("grevlex reference pairs") {
  MonomialOrder g(OrderKind::grevlex, 3);
  // x1 > x2 > x3: degree first, then the smaller last exponent wins
  CHECK(g.compare(Monomial{0, 0, 3}, Monomial{2, 0, 0}) == 1);
  CHECK(g.compare(Monomial{1, 1, 0}, Monomial{2, 0, 0}) == -1);
  CHECK(g.compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}) == 1);
  CHECK(g.compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) == -1);
}

TEST_CASE("leading terms of the quadratic V5 generator") {
  auto R = ring_of(5, 7);
  auto f = poly(R, "x3^2 - 2*x2*x4 - x2*x3");
  // x2*x3 is largest under both orders (with x1 > ... > x5)
  auto [mg, cg] = f.leading_term(MonomialOrder(OrderKind::grevlex, 5));
  CHECK(mg == Monomial{0, 1, 1, 0, 0});
  CHECK(cg == FieldElement::from_int(R->field(), -1));
  auto [ml, cl] = f.leading_term(MonomialOrder(OrderKind::lex, 5));
  CHECK(ml == Monomial{0, 1, 1, 0, 0});
  CHECK(cl == FieldElement::from_int(R->field(), -1));
  // a permuted order where x4 outranks x3 makes x2*x4 lead under lex
  auto perm = Permutation::from_one_based({1, 2, 4, 3, 5});
  auto [mp, cp] = f.leading_term(MonomialOrder(OrderKind::lex, perm));
  CHECK(mp == Monomial{0, 1, 0, 1, 0});
  CHECK(cp == FieldElement::from_int(R->field(), -2));
  auto x1 = poly(R, "x1");
  CHECK(x1.leading_term(MonomialOrder(OrderKind::lex, 5)).first == Monomial{1, 0, 0, 0, 0});
  CHECK(x1.leading_term(MonomialOrder(OrderKind::lex, 5)).second == FieldElement::from_int(R->field(), 1));
  CHECK_THROWS_AS(Polynomial(R).leading_term(MonomialOrder(OrderKind::lex, 5)), ZeroPolynomial);
}

TEST_CASE("polynomial arithmetic") {
  auto R = ring_of(5, 5);
  auto f = poly(R, "x1^2 + 3*x2*x5 - x4");
  CHECK((f + (-f)).is_zero());
  CHECK((f - f).is_zero());
  CHECK(poly(R, "x2 + x3") * poly(R, "x2 - x3") == poly(R, "x2^2 - x3^2"));
  CHECK(poly(R, "x2 + x3").pow(5) == poly(R, "x2^5 + x3^5"));
  CHECK(f.scale(R->field()->from_int(2)) == poly(R, "2*x1^2 + x2*x5 - 2*x4"));
  CHECK(f.scale(R->field()->zero()).is_zero());
  CHECK(poly(R, "x1").pow(0) == Polynomial::constant(R, 1));
  auto other = ring_of(5, 7);
  CHECK_THROWS_AS(f + poly(other, "x1"), RingMismatch);
}

TEST_CASE("arithmetic identities on random polynomials") {
  auto R = ring_of(4, 7);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto a = random_polynomial(rng, R, 5, 3), b = random_polynomial(rng, R, 4, 3), c = random_polynomial(rng, R, 3, 2);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) - b == a);
  }
}

TEST_CASE("parse and print") {
  auto R = ring_of(5, 7);
  auto f = poly(R, "x3^2 - 2*x2*x4 - x2*x3");
  CHECK(f.size() == 3);
  CHECK(f.coefficient(Monomial{0, 1, 0, 1, 0}) == FieldElement::from_int(R->field(), -2));
  CHECK(f.to_string(MonomialOrder(OrderKind::grevlex, 5)) == "-x2*x3 + x3^2 - 2*x2*x4");
  CHECK(f.to_string(MonomialOrder(OrderKind::lex, 5)) == "-x2*x3 - 2*x2*x4 + x3^2");
  CHECK(poly(R, "0").is_zero());
  CHECK(poly(R, "0").to_string(MonomialOrder(OrderKind::lex, 5)) == "0");
  CHECK(poly(R, " 7*x1 ").is_zero());
  CHECK(poly(R, "x1*x1") == poly(R, "x1^2"));
  CHECK(poly(R, "-3") == Polynomial::constant(R, 4));
  CHECK(poly(R, "x1 - x1 + 2*x2").to_string(MonomialOrder(OrderKind::lex, 5)) == "2*x2");
}

TEST_CASE("parse errors") {
  auto R = ring_of(3, 5);
  CHECK_THROWS_AS(poly(R, "x1 +"), SyntaxError);
  CHECK_THROWS_AS(poly(R, "x1^0"), SyntaxError);
  CHECK_THROWS_AS(poly(R, "x1 x2"), SyntaxError);
  CHECK_THROWS_AS(poly(R, ""), SyntaxError);
  CHECK_THROWS_AS(poly(R, "x9"), UnknownVariable);
  try {
    parse_polynomial("x1 + * x2", R, 4);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("named variables") {
  auto R = RingContext::make({"x2", "x1", "y2", "y1", "z2"}, Field::prime(5));
  auto f = parse_polynomial("y2*y1 + z2^5 - x1", R);
  CHECK(f.coefficient(Monomial{0, 0, 1, 1, 0}) == FieldElement::from_int(R->field(), 1));
  CHECK(f.to_string(MonomialOrder(OrderKind::lex, 5)) == "-x1 + y2*y1 + z2^5");
  CHECK_THROWS_AS(RingContext::make({"a", "a"}, Field::prime(5)), InvalidArgument);
  CHECK_THROWS_AS(RingContext::make({"1a"}, Field::prime(5)), InvalidArgument);
  CHECK_THROWS_AS(RingContext::make({}, Field::prime(5)), InvalidArgument);
}

TEST_CASE("print then parse is the identity") {
  Rng rng(17);
  for (auto p : {2u, 3u, 7u, 11u}) {
    auto R = ring_of(4, p);
    for (int i = 0; i < 200; ++i) {
      auto f = random_polynomial(rng, R, 1 + uniform_below(rng, 6), 4);
      auto perm = random_permutation(rng, 4);
      MonomialOrder ord(i % 2 ? OrderKind::lex : OrderKind::grevlex, perm);
      REQUIRE(parse_polynomial(f.to_string(ord), R) == f);
    }
  }
}

TEST_CASE("print over an extension field") {
  auto F = Field::extension(5, 2, 1);
  auto R = RingContext::standard(2, F);
  std::vector<std::uint32_t> c{1, 2};
  auto f = Polynomial::from_monomial(R, Monomial{1, 0}, F->from_coeffs(c));
  CHECK(f.to_string(MonomialOrder(OrderKind::lex, 2)) == "{1,2}*x1");
}

TEST_CASE("order axioms on random monomials") {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    auto n = 1 + uniform_below(rng, 6);
    MonomialOrder ord(i % 2 ? OrderKind::lex : OrderKind::grevlex, random_permutation(rng, n));
    auto a = random_monomial(rng, n, 4), b = random_monomial(rng, n, 4), c = random_monomial(rng, n, 4);
    auto u = random_monomial(rng, n, 3);
    REQUIRE(ord.compare(a, b) == -ord.compare(b, a));
    REQUIRE((ord.compare(a, b) == 0) == (a == b));
    if (ord.compare(a, b) > 0 && ord.compare(b, c) > 0) REQUIRE(ord.compare(a, c) > 0);
    REQUIRE(ord.compare(a * u, b * u) == ord.compare(a, b));
    Monomial one(n);
    if (!a.is_one()) REQUIRE(ord.compare(a, one) > 0);
    if (a.divides(b) && a != b) REQUIRE(ord.compare(b, a) > 0);
  }
}

TEST_CASE("permuted orders are coherent") {
  Rng rng(29);
  for (int i = 0; i < 500; ++i) {
    auto n = 2 + uniform_below(rng, 5);
    MonomialOrder base(i % 2 ? OrderKind::lex : OrderKind::grevlex, random_permutation(rng, n));
    auto pi = random_permutation(rng, n);
    auto permuted = base.permuted(pi);
    auto a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3);
    REQUIRE(permuted.compare(pi.apply(a), pi.apply(b)) == base.compare(a, b));
  }
}

TEST_CASE("permutations") {
  auto pi = Permutation::from_one_based({2, 3, 1});
  CHECK(pi(0) == 1);
  CHECK(pi.apply(Monomial{1, 2, 0}) == Monomial{0, 1, 2});
  CHECK(pi.inverse().compose(pi).is_identity());
  CHECK(pi.to_string() == "2 3 1");
  CHECK_THROWS_AS(Permutation::from_one_based({1, 1, 2}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::from_one_based({0, 1}), InvalidPermutation);
  CHECK(MonomialOrder(OrderKind::grevlex, pi).name() == "grevlex perm = 2 3 1");
  CHECK(MonomialOrder(OrderKind::lex, 3).name() == "lex");
}

TEST_CASE("monomials of a degree") {
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial{2, 0, 0});
  CHECK(ms.back() == Monomial{0, 0, 2});
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1] > ms[i]);
  CHECK(monomials_of_degree(4, 0).size() == 1);
  CHECK(monomials_of_degree(5, 6).size() == 210);
}

TEST_CASE("degree guard") {
  auto R = RingContext::make({"a", "b"}, Field::prime(3), 10);
  CHECK_THROWS_AS(parse_polynomial("a^11", R), SyntaxError);
  CHECK_THROWS_AS(Polynomial::from_monomial(R, Monomial{11, 0}), DegreeOverflow);
  CHECK_THROWS_AS(parse_polynomial("a^6", R).pow(2), DegreeOverflow);
}
