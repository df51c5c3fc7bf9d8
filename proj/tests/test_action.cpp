#include "modgin/action.hpp"

#include "support.hpp"

using namespace modgin;
using namespace modgin::testing;

TEST_CASE("identity substitution") {
  auto R = ring_of(5, 7);
  auto f = poly(R, "x3^2 - 2*x2*x4 - x2*x3 + x5^7");
  CHECK(apply_matrix(f, SquareMatrix::identity(R->field(), 5)) == f);
}

TEST_CASE("columns give the images of the variables") {
  auto R = ring_of(2, 5);
  // x1 -> x1, x2 -> x2 + x1
  auto a = SquareMatrix::from_rows(R->field(), {{1, 1}, {0, 1}});
  CHECK(apply_matrix(poly(R, "x2"), a) == poly(R, "x1 + x2"));
  CHECK(apply_matrix(poly(R, "x1"), a) == poly(R, "x1"));
  CHECK(apply_matrix(poly(R, "x2^5"), a) == poly(R, "x1^5 + x2^5"));
}

TEST_CASE("ranks follow the order") {
  auto R = ring_of(2, 5);
  auto a = SquareMatrix::from_rows(R->field(), {{1, 1}, {0, 1}});
  // with x2 > x1 the second-ranked variable is x1, mapped to x1 + x2
  MonomialOrder ord(OrderKind::lex, Permutation::from_one_based({2, 1}));
  CHECK(apply_matrix(poly(R, "x1"), a, ord) == poly(R, "x1 + x2"));
  CHECK(apply_matrix(poly(R, "x2"), a, ord) == poly(R, "x2"));
  auto re = a.reindexed(ord);
  CHECK(apply_matrix(poly(R, "x1"), re) == poly(R, "x1 + x2"));
}

TEST_CASE("upper triangular substitution sends p-th powers to p-th powers") {
  auto F = Field::prime(7);
  auto R = RingContext::standard(5, F);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto a = sample_matrix(MatrixKind::borel, 5, F, rng);
    auto img = apply_matrix(poly(R, "x5^7"), a);
    Polynomial expected(R);
    for (std::size_t r = 0; r < 5; ++r)
      expected = expected + Polynomial::from_monomial(R, Monomial::variable(5, r, 7), F->pow(a.at(r, 4), 7));
    CHECK(img == expected);
  }
}

TEST_CASE("substitution is a ring homomorphism and composes") {
  auto F = Field::extension(5, 3, 1);
  auto R = RingContext::standard(4, F);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto ord = MonomialOrder(i % 2 ? OrderKind::lex : OrderKind::grevlex, random_permutation(rng, 4));
    auto a = sample_matrix(MatrixKind::gl, 4, F, rng);
    auto b = sample_matrix(i % 3 ? MatrixKind::gl : MatrixKind::borel, 4, F, rng);
    auto f = random_polynomial(rng, R, 4, 3), g = random_polynomial(rng, R, 3, 2);
    REQUIRE(apply_matrix(f + g, a, ord) == apply_matrix(f, a, ord) + apply_matrix(g, a, ord));
    REQUIRE(apply_matrix(f * g, a, ord) == apply_matrix(f, a, ord) * apply_matrix(g, a, ord));
    REQUIRE(apply_matrix(apply_matrix(f, a, ord), b, ord) == apply_matrix(f, b * a, ord));
    REQUIRE(apply_matrix(apply_matrix(f, a, ord), a.inverse(), ord) == f);
    if (f.is_homogeneous() && !f.is_zero()) REQUIRE(apply_matrix(f, a, ord).total_degree() == f.total_degree());
  }
}

TEST_CASE("matrix algebra") {
  auto F = Field::prime(7);
  auto a = SquareMatrix::from_rows(F, {{2, 1, 0}, {0, 3, 5}, {0, 0, 6}});
  CHECK(F->prime_residue(a.determinant()) == 1u);  // 36 = 1 mod 7
  CHECK(a.is_borel());
  CHECK(a * a.inverse() == SquareMatrix::identity(F, 3));
  auto singular = SquareMatrix::from_rows(F, {{1, 2}, {2, 4}});
  CHECK_FALSE(singular.is_invertible());
  CHECK_THROWS_AS(singular.inverse(), NotInvertible);
  CHECK_FALSE(SquareMatrix::from_rows(F, {{1, 0}, {1, 1}}).is_upper_triangular());
  CHECK_FALSE(SquareMatrix::from_rows(F, {{1, 1}, {0, 0}}).is_borel());
  CHECK_THROWS_AS(a * SquareMatrix::identity(F, 2), DimensionMismatch);
  CHECK_THROWS_AS(SquareMatrix::from_rows(F, {{1, 2}, {3}}), DimensionMismatch);
}

TEST_CASE("sampling") {
  auto F = Field::prime(7);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto b = sample_matrix(MatrixKind::borel, 5, F, seed);
    CHECK(b.is_borel());
    for (std::size_t i = 0; i < 5; ++i) CHECK(F->prime_residue(b.at(i, i)).value() != 0);
    CHECK(b == sample_matrix(MatrixKind::borel, 5, F, seed));
    auto g = sample_matrix(MatrixKind::gl, 5, F, seed);
    CHECK(g.is_invertible());
    CHECK(g == sample_matrix(MatrixKind::gl, 5, F, seed));
  }
  CHECK_FALSE(sample_matrix(MatrixKind::gl, 3, F, 1) == sample_matrix(MatrixKind::gl, 3, F, 2));
}

TEST_CASE("dimension and field checks") {
  auto R = ring_of(3, 7);
  CHECK_THROWS_AS(apply_matrix(poly(R, "x1"), SquareMatrix::identity(R->field(), 2)), DimensionMismatch);
  CHECK_THROWS_AS(apply_matrix(poly(R, "x1"), SquareMatrix::identity(Field::prime(5), 3)), SpecMismatch);
}

TEST_CASE("variable permutations") {
  auto R = ring_of(3, 5);
  auto swap12 = Permutation::from_one_based({2, 1, 3});
  CHECK(permute_polynomial(poly(R, "x1*x2^2"), swap12) == poly(R, "x1^2*x2"));
  auto f = poly(R, "x1^3 + 2*x2*x3 - x3");
  CHECK(permute_polynomial(f, Permutation::identity(3)) == f);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto pi = random_permutation(rng, 3);
    auto g = random_polynomial(rng, R, 5, 3);
    auto img = permute_polynomial(g, pi);
    REQUIRE(permute_polynomial(img, pi.inverse()) == g);
    REQUIRE(img.size() == g.size());
    for (const auto& t : g.terms()) REQUIRE(img.coefficient(pi.apply(t.monomial)).raw() == t.coeff);
  }
  CHECK(permute_monomial(Monomial{1, 0, 2}, Permutation::from_one_based({3, 1, 2})) == Monomial{0, 2, 1});
  CHECK_THROWS_AS(permute_polynomial(f, Permutation::identity(2)), InvalidPermutation);
  auto I = permute_ideal(IdealPresentation(R, polys(R, {"x1", "x2^2"})), swap12);
  CHECK(I.generators()[0] == poly(R, "x2"));
}
