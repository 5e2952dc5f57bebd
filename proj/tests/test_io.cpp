#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support/gen.hpp"

using namespace diffalg;
using namespace testgen;

TEST_CASE("parsing the canonical syntax") {
  auto cfg = session_x123();
  Polynomial heis = P(cfg, "D2 D1 (x) - D1 D2 (x) + D3 (x)");
  CHECK(heis.term_count() == 3);
  CHECK(heis.leading_monomial() == M(cfg, "D2 D1 (x)"));
  CHECK(heis.coefficient(M(cfg, "D1 D2 (x)")) == -1);
  CHECK(heis.coefficient(M(cfg, "D3 (x)")) == 1);

  CHECK(P(cfg, "1") == Polynomial::constant(Rational(1)));
  CHECK(P(cfg, "0").is_zero());

  auto xy = session_xy();
  Polynomial t = P(xy, "2/3 * (x) * (y)");
  REQUIRE(t.term_count() == 1);
  CHECK(t.leading_coefficient() == Rational(2, 3));
  CHECK(t.leading_monomial() == M(xy, "(x) * (y)"));

  // whitespace-insensitive; multi-digit indices attach to the D
  auto cfg12 = make_session({"x"}, {1, 12});
  CHECK(P(cfg12, "D12(x)") == P(cfg12, "D12 ( x )"));
  CHECK(P(cfg12, "D1 D12 (x)").leading_monomial().letters[0].op_count() == 2);

  // a leading sign is accepted so printed output re-parses
  CHECK(P(xy, "-(x) + (y)") == P(xy, "(y) - (x)"));
  CHECK(P(xy, "- 2 * (x)") == P(xy, "0 - 2 * (x)"));
}

TEST_CASE("parse errors carry positions") {
  auto cfg = session_xy12();
  CHECK_THROWS_AS(P(cfg, ""), SyntaxError);
  CHECK_THROWS_AS(P(cfg, "(x) +"), SyntaxError);
  CHECK_THROWS_AS(P(cfg, "(x) (y)"), SyntaxError);
  CHECK_THROWS_AS(P(cfg, "2/0"), SyntaxError);
  CHECK_THROWS_AS(P(cfg, "(z)"), UnknownVariableError);
  CHECK_THROWS_AS(P(cfg, "D9 (x)"), UnknownOperatorError);
  CHECK_THROWS_AS(P(cfg, "D (x)"), SyntaxError);
  CHECK_THROWS_AS(P(cfg, "(x) * 1"), SyntaxError);

  try {
    P(cfg, "(x) @ (y)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("canonical printing") {
  auto cfg = session_x123();
  CHECK(print_polynomial(P(cfg, "D2 D1 (x) - D1 D2 (x) + D3 (x)"), cfg) ==
        "D2 D1 (x) - D1 D2 (x) + D3 (x)");
  CHECK(print_polynomial(Polynomial::zero(), cfg) == "0");

  auto xy = session_xy();
  CHECK(print_polynomial(P(xy, "1/2 * (x)"), xy) == "1/2 * (x)");
  CHECK(print_polynomial(P(xy, "(y) - (x)"), xy) == "(y) - (x)");
  CHECK(print_polynomial(P(xy, "-(y) + (x)"), xy) == "-(y) + (x)");
  CHECK(print_polynomial(P(xy, "2/4 * (x) * (y) + 1"), xy) ==
        "1/2 * (x) * (y) + 1");
  CHECK(print_polynomial(Polynomial::constant(Rational(-3, 7)), xy) == "-3/7");
}

TEST_CASE("print/parse round trip on random polynomials") {
  Rng rng(113);
  auto cfg = session_xy12();
  Alphabet a = cfg.alphabet();
  Bound b{3, 2};
  for (int i = 0; i < 300; ++i) {
    Polynomial f = random_polynomial(rng, a, b, 5);
    std::string text = print_polynomial(f, cfg);
    CHECK(parse_polynomial(text, cfg) == f);
    // printing is deterministic
    CHECK(print_polynomial(f, cfg) == text);
  }
}

TEST_CASE("session config files") {
  std::istringstream in(
      "# structure constants for a three-operator session\n"
      "vars = x y\n"
      "operators = 1 2 3\n"
      "alpha 1 2 3 = 1\n"
      "alpha 2 1 3 = -1\n"
      "limit_iterations = 42\n"
      "bound_length = 2\n"
      "bound_op_depth = 4\n");
  SessionConfig cfg = parse_config(in);
  CHECK(cfg.var_names == std::vector<std::string>{"x", "y"});
  CHECK(cfg.op_labels == std::vector<unsigned long>{1, 2, 3});
  CHECK(cfg.limits.max_iterations == 42);
  CHECK(cfg.bounds.max_length == 2);
  CHECK(cfg.bounds.max_op_depth == 4);
  REQUIRE(cfg.lie.has_value());
  CHECK(cfg.lie->alpha(OperatorId{0}, OperatorId{1}, OperatorId{2}) == 1);
  CHECK(cfg.lie->alpha(OperatorId{1}, OperatorId{0}, OperatorId{2}) == -1);
  CHECK(validate_lie(cfg.lie_structure()).ok);
}

TEST_CASE("config errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
  };
  CHECK_THROWS_AS(parse("frobnicate = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("vars = x x\n"), ConfigError);
  CHECK_THROWS_AS(parse("operators = 1 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("vars = x\nvars = y\n"), ConfigError);
  CHECK_THROWS_AS(parse("operators = 1\nalpha 1 2 1 = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("operators = 1\nalpha 1 1 1 = nope\n"), ConfigError);
  CHECK_THROWS_AS(parse("vars x\n"), ConfigError);

  // a config with no alpha lines still yields the abelian structure
  std::istringstream in("vars = x\noperators = 1 2\n");
  SessionConfig cfg = parse_config(in);
  CHECK_FALSE(cfg.lie.has_value());
  CHECK(cfg.lie_structure().entries().empty());
  CHECK(cfg.lie_structure().op_count() == 2);
}

TEST_CASE("rules files normalize on load") {
  auto cfg = session_x123();
  std::istringstream in(
      "# relations\n"
      "D2 D1 (x) - D1 D2 (x) + D3 (x)\n"
      "\n"
      "2 * D3 (x) - 2 * (x)   # gets scaled monic\n"
      "(x) - (x)              # zero, skipped\n");
  std::ostringstream diag;
  auto rules = load_rules(in, cfg, &diag);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0] == P(cfg, "D2 D1 (x) - D1 D2 (x) + D3 (x)"));
  CHECK(rules[1] == P(cfg, "D3 (x) - (x)"));
  CHECK(diag.str().find("normalized") != std::string::npos);
  CHECK(diag.str().find("zero polynomial") != std::string::npos);
  for (const auto& r : rules) CHECK(r.is_monic());
}
