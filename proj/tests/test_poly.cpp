#include <random>

#include "doctest.h"
#include "support.hpp"

#include "flagcoh/error.hpp"
#include "flagcoh/poly.hpp"

using namespace flagcoh;
using flagcoh::testing::random_polynomial;

TEST_CASE("grevlex order in two and three variables") {
  const auto m2 = monomials_of_degree(2, 2);
  REQUIRE(m2.size() == 3);
  CHECK(to_string(m2[0], 2) == "a2^2");
  CHECK(to_string(m2[1], 2) == "a1*a2");
  CHECK(to_string(m2[2], 2) == "a1^2");

  // grevlex distinguishes from lex at x1*x3 vs x2^2 in three variables.
  const Polynomial x = parse_polynomial("a1*a3 + a2^2", 3);
  CHECK(to_string(x.leading_monomial(), 3) == "a2^2");
  CHECK(monomials_of_degree(3, 3).size() == 10);
}

TEST_CASE("canonical rendering") {
  CHECK(to_string(parse_polynomial("0", 2)) == "0");
  CHECK(to_string(parse_polynomial("a2^2 + a1^2 + a1*a2", 2)) == "a1^2 + a1*a2 + a2^2");
  CHECK(to_string(parse_polynomial("-(1/3)*a1 + 2", 2)) == "-(1/3)*a1 + 2");
  CHECK(to_string(parse_polynomial("(a1 - a2)*(a1 + a2)", 2)) == "a1^2 - a2^2");
  CHECK(to_string(parse_polynomial("2/4*a1", 2)) == "(1/2)*a1");
  CHECK(parse_polynomial("-a1^2", 2) == parse_polynomial("-(a1^2)", 2));
  CHECK(parse_polynomial("-a1^2 + a2", 2) == parse_polynomial("a2 - a1*a1", 2));
  CHECK(to_latex(parse_polynomial("2*a1 + a2", 2)) == "2 \\, \\alpha + \\beta");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polynomial("a3", 2), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("a1 +", 2), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("(a1", 2), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("a1 $ a2", 2), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("1/0", 2), InvalidInput);
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(rng, 3, 4) * Rational(1, 1 + i % 5);
    CAPTURE(to_string(p));
    CHECK(to_string(parse_polynomial(to_string(p), 3)) == to_string(p));
    CHECK(parse_polynomial(to_string(p), 3) == p);
  }
}

TEST_CASE("commutative ring axioms on random polynomials") {
  std::mt19937 rng(11);
  const std::size_t rank = 3;
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = random_polynomial(rng, rank, 3);
    const Polynomial b = random_polynomial(rng, rank, 3);
    const Polynomial c = random_polynomial(rng, rank, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(rank, 1) == a);
    CHECK((a * Polynomial(rank)).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(13);
  const Vector point{Rational(2, 3), Rational(-1), Rational(5)};
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = random_polynomial(rng, 3, 3);
    const Polynomial b = random_polynomial(rng, 3, 3);
    CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
  }
}

TEST_CASE("derivative obeys the Leibniz rule") {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = random_polynomial(rng, 2, 4);
    const Polynomial b = random_polynomial(rng, 2, 4);
    for (std::size_t v = 0; v < 2; ++v)
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
}

TEST_CASE("Weyl action is multiplicative and composes") {
  std::mt19937 rng(19);
  for (auto t : {DynkinType::A, DynkinType::B, DynkinType::G}) {
    const RootSystem rs = build_root_system(t, 2);
    const auto group = enumerate_weyl(rs);
    for (int i = 0; i < 20; ++i) {
      const Polynomial a = random_polynomial(rng, 2, 3);
      const Polynomial b = random_polynomial(rng, 2, 3);
      const auto& u = group[i % group.size()];
      const auto& v = group[(3 * i + 1) % group.size()];
      CHECK(weyl_act(u, a * b) == weyl_act(u, a) * weyl_act(u, b));
      WeylElement uv;
      uv.action = multiply(u.action, v.action);
      CHECK(weyl_act(uv, a) == weyl_act(u, weyl_act(v, a)));
    }
  }
}

TEST_CASE("substitution and powers") {
  const Polynomial p = parse_polynomial("a1^2 - a1*a2", 2);
  const std::vector<Polynomial> images{parse_polynomial("a1 + a2", 2), parse_polynomial("a2", 2)};
  CHECK(p.substitute(images) == parse_polynomial("a1^2 + a1*a2", 2));
  CHECK(pow(parse_polynomial("a1 + a2", 2), 3) == parse_polynomial("a1^3 + 3*a1^2*a2 + 3*a1*a2^2 + a2^3", 2));
  CHECK(pow(p, 0) == Polynomial::constant(2, 1));
}

TEST_CASE("primitive part") {
  CHECK(primitive_part(parse_polynomial("(1/2)*a1 + (1/3)*a2", 2)) == parse_polynomial("3*a1 + 2*a2", 2));
  CHECK(primitive_part(parse_polynomial("-4*a1 + 6*a2", 2)) == parse_polynomial("2*a1 - 3*a2", 2));
}
