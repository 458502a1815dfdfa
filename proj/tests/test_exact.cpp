#include <doctest.h>

#include <random>

#include "sl2ybe/exact.hpp"
#include "sl2ybe/poly.hpp"

using namespace sl2ybe;

namespace {
Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  BigInt p = 1;
  for (long i = 2; i <= 30; ++i) p *= i;
  CHECK(factorial(30) == p);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3/6") == q(1, 2));
  CHECK(Rational::parse("-4") == q(-4));
  CHECK(Rational::parse("2/-4") == q(-1, 2));
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK(q(-3, 9).str() == "-1/3");
}

TEST_CASE("half-integers") {
  CHECK(HalfInt::parse("3/2").twice == 3);
  CHECK(HalfInt::parse("2").twice == 4);
  CHECK(HalfInt::parse("4/2").twice == 4);
  CHECK_THROWS(HalfInt::parse("1/3"));
  CHECK_THROWS(HalfInt::parse("1.5"));
  CHECK(HalfInt::from_twice(5).str() == "5/2");
  CHECK(HalfInt::from_twice(-3).floor() == -2);
}

TEST_CASE("square-root canonical form") {
  auto a = SqrtRational::make(q(1), q(12));
  CHECK(a.coeff() == q(2));
  CHECK(a.radicand() == 3);
  auto b = SqrtRational::make(q(5), q(1));
  CHECK(b.coeff() == q(5));
  CHECK(b.radicand() == 1);
  auto c = SqrtRational::make(q(1), q(9, 4));
  CHECK(c.coeff() == q(3, 2));
  CHECK(c.radicand() == 1);
  // sqrt(2/3) = sqrt(6)/3
  auto d = SqrtRational::make(q(1), q(2, 3));
  CHECK(d.coeff() == q(1, 3));
  CHECK(d.radicand() == 6);
  CHECK_THROWS_AS(SqrtRational::make(q(1), q(-2)), std::domain_error);
  CHECK(SqrtRational::make(q(0), q(7)).is_zero());
}

TEST_CASE("square-root arithmetic against doubles") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30), rad(1, 60);
  for (int i = 0; i < 300; ++i) {
    const auto x = SqrtRational::make(q(num(rng), den(rng)), q(rad(rng), den(rng)));
    const auto y = SqrtRational::make(q(num(rng), den(rng)), q(rad(rng), den(rng)));
    CHECK((x * y).to_double() == doctest::Approx(x.to_double() * y.to_double()).epsilon(1e-12));
    if (!y.is_zero()) CHECK((x / y).to_double() == doctest::Approx(x.to_double() / y.to_double()).epsilon(1e-12));
    CHECK(x.squared().to_double() == doctest::Approx(x.to_double() * x.to_double()).epsilon(1e-12));
  }
}

TEST_CASE("quadratic extension") {
  const QuadExt b(q(3, 2), q(1, 2), q(5));
  const QuadExt bc(q(3, 2), q(-1, 2), q(5));
  CHECK(quad_ext_arith(b, bc, QuadOp::mul) == QuadExt(1));
  CHECK(quad_ext_arith(QuadExt(1), QuadExt(), QuadOp::inv) == QuadExt(1));
  CHECK(quad_ext_arith(QuadExt(q(1), q(1), q(5)), QuadExt(q(1), q(-1), q(5)), QuadOp::add) == QuadExt(2));
  CHECK_THROWS_AS(quad_ext_arith(QuadExt(0), QuadExt(), QuadOp::inv), std::domain_error);
  CHECK_THROWS(QuadExt::sqrt(q(2)) + QuadExt::sqrt(q(3)));
  // sqrt(8) lives in Q(sqrt 2)
  const QuadExt r8 = QuadExt::sqrt(q(8));
  CHECK(r8.d() == 2);
  CHECK(r8 * r8 == QuadExt(8));
  CHECK(QuadExt::sqrt(q(9, 4)).is_rational());
}

TEST_CASE("quadratic extension field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  auto draw = [&] { return QuadExt(q(num(rng), den(rng)), q(num(rng), den(rng)), q(7)); };
  for (int i = 0; i < 200; ++i) {
    const QuadExt x = draw(), y = draw(), z = draw();
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
    CHECK(x * x.conjugate() == QuadExt(x.norm()));
    CHECK((x * y).to_double() == doctest::Approx(x.to_double() * y.to_double()).epsilon(1e-12));
  }
}

TEST_CASE("rational functions") {
  using P = Polynomial<QuadExt>;
  using RF = RationalFunction<QuadExt>;
  const RF cayley(P::linear(QuadExt(1), QuadExt(-1)), P::linear(QuadExt(1), QuadExt(1)));
  CHECK(cayley(QuadExt(2)) == QuadExt(q(-1, 3)));
  CHECK_THROWS_AS(cayley(QuadExt(-1)), EvaluationError);
  const RF sq = cayley * cayley;
  CHECK(sq(QuadExt(q(1, 2))) == QuadExt(q(1, 9)));
  CHECK((cayley + RF(QuadExt(1)))(QuadExt(3)) == QuadExt(q(1, 2)));
  CHECK(P::linear(QuadExt(-6), QuadExt(2)).divide_root(QuadExt(3)) == P(QuadExt(2)));
  CHECK_THROWS(P::linear(QuadExt(-6), QuadExt(2)).divide_root(QuadExt(2)));
}
