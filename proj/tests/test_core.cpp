#include <catch2/catch_amalgamated.hpp>

#include "support/gen.hpp"

using namespace diffalg;
using namespace testgen;

TEST_CASE("free monoid multiplication is concatenation") {
  auto cfg = session_xy12();
  CHECK(M(cfg, "1") * M(cfg, "D1 (x)") == M(cfg, "D1 (x)"));
  CHECK(M(cfg, "D1 (x)") * M(cfg, "D2 (y) * (x)") ==
        M(cfg, "D1 (x) * D2 (y) * (x)"));
  CHECK(M(cfg, "(x) * (x)") * M(cfg, "1") == M(cfg, "(x) * (x)"));
  CHECK((M(cfg, "(x)") * M(cfg, "(y)")).length() == 2);
}

TEST_CASE("monoid laws hold on random words") {
  Rng rng(2024);
  Alphabet a{2, 2};
  Bound b{3, 2};
  for (int i = 0; i < 500; ++i) {
    Monomial u = random_monomial(rng, a, b);
    Monomial v = random_monomial(rng, a, b);
    Monomial w = random_monomial(rng, a, b);
    CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
    CHECK(mul(Monomial::one(), u) == u);
    CHECK(mul(u, Monomial::one()) == u);
    CHECK(mul(u, v).length() == u.length() + v.length());
  }
}

TEST_CASE("polynomial arithmetic is exact") {
  auto cfg = session_xy();
  CHECK((P(cfg, "(x)") + P(cfg, "-(x)")).is_zero());
  CHECK(P(cfg, "(x) + (y)") * P(cfg, "(x)") == P(cfg, "(x) * (x) + (y) * (x)"));
  CHECK(poly_scale(Rational(2, 3), P(cfg, "3 * (x)")) == P(cfg, "2 * (x)"));
  CHECK(P(cfg, "1/3 * (x)") + P(cfg, "1/6 * (x)") == P(cfg, "1/2 * (x)"));
}

TEST_CASE("ring laws hold on random polynomials") {
  Rng rng(7);
  Alphabet a{2, 2};
  Bound b{2, 1};
  Polynomial one = Polynomial::constant(Rational(1));
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_polynomial(rng, a, b, 3);
    Polynomial g = random_polynomial(rng, a, b, 3);
    Polynomial h = random_polynomial(rng, a, b, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * one == f);
    CHECK(one * f == f);
    CHECK((f + Polynomial::zero()) == f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("leading term follows the word order") {
  auto cfg = session_x123();
  auto [m1, c1] = P(cfg, "2 * D1 (x) + (x)").leading_term();
  CHECK(m1 == M(cfg, "D1 (x)"));
  CHECK(c1 == 2);

  auto [m2, c2] = P(cfg, "(x)").leading_term();
  CHECK(m2 == M(cfg, "(x)"));
  CHECK(c2 == 1);

  auto yx = session_yx();  // x > y in this session
  auto [m3, c3] = P(yx, "(x) * (y) + (y) * (x)").leading_term();
  CHECK(m3 == M(yx, "(x) * (y)"));
  CHECK(c3 == 1);

  CHECK_THROWS_AS(Polynomial::zero().leading_term(), ZeroPolynomialError);
}

TEST_CASE("leading term of a product multiplies the leading monomials") {
  Rng rng(11);
  Alphabet a{2, 2};
  Bound b{3, 2};
  for (int i = 0; i < 300; ++i) {
    Polynomial f = random_polynomial(rng, a, b, 3, false);
    Polynomial g = random_polynomial(rng, a, b, 3, false);
    CHECK((f * g).leading_monomial() ==
          mul(f.leading_monomial(), g.leading_monomial()));
  }
}

TEST_CASE("make_monic divides by the leading coefficient") {
  auto cfg = session_x123();
  CHECK(make_monic(P(cfg, "2 * D1 (x) + 4 * (x)")) ==
        P(cfg, "D1 (x) + 2 * (x)"));
  CHECK(make_monic(P(cfg, "(x)")) == P(cfg, "(x)"));

  auto yx = session_yx();
  CHECK(make_monic(P(yx, "-(x) + (y)")) == P(yx, "(x) - (y)"));
  CHECK_THROWS_AS(make_monic(Polynomial::zero()), ZeroPolynomialError);
}

TEST_CASE("substitution extends maps as a differential homomorphism") {
  auto cfg = session_xy12();
  Variable x = *cfg.find_variable("x");

  std::map<Variable, Polynomial> to_y{{x, P(cfg, "(y)")}};
  CHECK(substitute(P(cfg, "(x)"), to_y) == P(cfg, "(y)"));

  std::map<Variable, Polynomial> to_yy{{x, P(cfg, "(y) * (y)")}};
  CHECK(substitute(P(cfg, "D1 (x)"), to_yy) ==
        P(cfg, "D1 (y) * (y) + (y) * D1 (y)"));

  std::map<Variable, Polynomial> to_sum{{x, P(cfg, "(x) + (y)")}};
  CHECK(substitute(P(cfg, "(x) * (x)"), to_sum) ==
        P(cfg, "(x) * (x) + (x) * (y) + (y) * (x) + (y) * (y)"));

  CHECK_THROWS_AS(substitute(P(cfg, "(x) * (y)"), to_y), UnboundVariableError);
}

TEST_CASE("substitution commutes with derivation") {
  Rng rng(23);
  Alphabet a{2, 2};
  Bound b{2, 1};
  for (int i = 0; i < 150; ++i) {
    Polynomial f = random_polynomial(rng, a, b, 3);
    std::map<Variable, Polynomial> phi;
    phi[Variable{0}] = random_polynomial(rng, a, b, 2);
    phi[Variable{1}] = random_polynomial(rng, a, b, 2);
    OperatorId j{pick(rng, 0, a.op_count - 1)};
    CHECK(substitute(derive(f, j), phi) == derive(substitute(f, phi), j));
  }
}
