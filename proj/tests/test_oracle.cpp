#include <catch2/catch_amalgamated.hpp>

#include "support/gen.hpp"

using namespace diffalg;
using namespace testgen;

namespace {

/// Reduction that also returns the subtracted context words, so tests can
/// tell when the certificate stays within a bound.
std::pair<Polynomial, std::vector<Polynomial>> traced_reduce(
    const Polynomial& f, const RewriteSystem& S) {
  Polynomial out, rem = f;
  std::vector<Polynomial> words;
  while (!rem.is_zero()) {
    auto [u, c] = rem.leading_term();
    auto occ = find_first_occurrence(u, S);
    if (occ) {
      Polynomial word =
          context_word(occ->left, S.rule(occ->rule_index), occ->jbar,
                       occ->right);
      rem -= c * word;
      words.push_back(std::move(word));
    } else {
      out.add_term(u, c);
      rem.add_term(u, -c);
    }
  }
  return {out, words};
}

}  // namespace

TEST_CASE("span of a single relation at tiny bounds") {
  auto yx = session_yx();  // x > y
  RewriteSystem S = system_of(yx, {"(x) - (y)"});

  SpanBasis span1 = build_span(S, yx.alphabet(), Bound{1, 0});
  REQUIRE(span1.rows.size() == 1);
  CHECK(span1.rows[0] == P(yx, "(x) - (y)"));

  // at length 2 the five context words are linearly dependent: rank 4
  SpanBasis span2 = build_span(S, yx.alphabet(), Bound{2, 0});
  CHECK(span2.rows.size() == 4);

  SpanBasis empty = build_span(RewriteSystem{}, yx.alphabet(), Bound{2, 0});
  CHECK(empty.rows.empty());
}

TEST_CASE("bounded ideal membership") {
  auto yx = session_yx();
  RewriteSystem S = system_of(yx, {"(x) - (y)"});
  SpanBasis span = build_span(S, yx.alphabet(), Bound{2, 0});

  CHECK(ideal_member(Polynomial::zero(), span));
  CHECK(ideal_member(P(yx, "(x) * (x) - (y) * (y)"), span));
  CHECK_FALSE(ideal_member(P(yx, "(x)"), span));
  CHECK_THROWS_AS(ideal_member(P(yx, "(x) * (x) * (x)"), span),
                  OutOfBoundError);
}

TEST_CASE("leading-term reducibility of span rows") {
  auto yx = session_yx();
  RewriteSystem good = system_of(yx, {"(x) - (y)"});
  SpanBasis span = build_span(good, yx.alphabet(), Bound{2, 0});
  CHECK(check_leading_reducibility(good, span).pass);

  auto cfg = session_xy();
  RewriteSystem bad = system_of(cfg, {"(x) * (y) - 1", "(y) * (x) - (y)"});
  REQUIRE_FALSE(is_gsb(bad).ok);
  SpanBasis bad_span = build_span(bad, cfg.alphabet(), Bound{3, 0});
  auto report = check_leading_reducibility(bad, bad_span);
  CHECK_FALSE(report.pass);
  REQUIRE(report.witness.has_value());
  CHECK_FALSE(is_reducible(report.witness->leading_monomial(), bad));

  CHECK(check_leading_reducibility(RewriteSystem{},
                                   build_span(RewriteSystem{}, cfg.alphabet(),
                                              Bound{2, 0}))
            .pass);
}

TEST_CASE("irreducible words are a basis of the bounded quotient") {
  auto yx = session_yx();
  RewriteSystem S = system_of(yx, {"(x) - (y)"});
  SpanBasis span = build_span(S, yx.alphabet(), Bound{2, 0});
  auto report = check_irreducible_basis(S, span, yx.alphabet());
  CHECK(report.pass);
  CHECK(report.monomials == 7);  // 1 + 2 + 4
  CHECK(report.irreducible == 3);  // 1, y, y*y
  CHECK(report.rank == 4);

  auto irr = irr_enumerate(S, yx.alphabet(), Bound{2, 0});
  REQUIRE(irr.size() == 3);
  CHECK(irr[0] == Monomial::one());
  CHECK(irr[1] == M(yx, "(y)"));
  CHECK(irr[2] == M(yx, "(y) * (y)"));

  // commutator rules at a bounded slice
  RewriteSystem s0(commutator_rules(heisenberg(), 1, 2));
  Alphabet a{1, 3};
  SpanBasis hspan = build_span(s0, a, Bound{1, 2});
  auto hreport = check_irreducible_basis(s0, hspan, a);
  CHECK(hreport.pass);
  CHECK(hreport.monomials == 14);  // 1 + (3 + 9) + 1... letters: 1+3+9 = 13
  CHECK(hreport.irreducible == 11);
  CHECK(hreport.rank == 3);
}

TEST_CASE("rank-nullity bookkeeping on random systems") {
  Rng rng(97);
  Alphabet a{1, 2};
  Bound b{2, 1};
  auto monomials = all_monomials(a, b);
  for (int i = 0; i < 40; ++i) {
    RewriteSystem S = random_system(rng, a, b, 2, 2);
    SpanBasis span = build_span(S, a, b);
    // pivots are distinct bounded monomials
    std::size_t pivot_free = monomials.size();
    for (std::size_t r = 0; r + 1 < span.rows.size(); ++r)
      REQUIRE(cmp_monomial(span.rows[r].leading_monomial(),
                           span.rows[r + 1].leading_monomial()) ==
              std::strong_ordering::greater);
    pivot_free -= span.rows.size();
    CHECK(monomials.size() == span.rows.size() + pivot_free);
    for (const auto& row : span.rows) CHECK(fits(row, b));
  }
}

TEST_CASE("reduction certificates are span members when they fit") {
  Rng rng(101);
  Alphabet a{1, 2};
  Bound small{2, 1};
  Bound span_bound{3, 2};
  int verified = 0;
  for (int i = 0; i < 60 && verified < 25; ++i) {
    RewriteSystem S = random_system(rng, a, small, 2, 2);
    Polynomial f = random_polynomial(rng, a, small, 3);
    auto [nf, words] = traced_reduce(f, S);
    bool bounded = true;
    for (const auto& w : words) bounded = bounded && fits(w, span_bound);
    if (!bounded) continue;
    SpanBasis span = build_span(S, a, span_bound);
    CHECK(ideal_member(f - nf, span));
    ++verified;
  }
  CHECK(verified >= 20);
}

TEST_CASE("finite slices undercount when tails out-depth the leading letter") {
  // The system {x*x, x*D2(x) + 2*x*D1(x)} is closed under compositions, yet
  // the word D1 D1 (x) * D2 (x) is reducible only through a derivative word
  // that puts two more operators on a letter already carrying one. Every
  // covering word therefore expands past depth 2, so the (3,2) slice has no
  // row with that pivot: leading reducibility still holds row by row, but
  // the dimension count comes up short. Enlarging the bound only moves the
  // boundary; the undercount recurs at every depth for rules shaped like
  // this. Pinned here as the known limit of the bounded cross-check.
  auto cfg = session_x12();
  Polynomial a = P(cfg, "(x) * (x)");
  Polynomial b = P(cfg, "(x) * D2 (x) + 2 * (x) * D1 (x)");
  RewriteSystem S({a, b});
  REQUIRE(is_gsb(S).ok);

  Bound bound{3, 2};
  SpanBasis span = build_span(S, cfg.alphabet(), bound);
  CHECK(check_leading_reducibility(S, span).pass);

  auto report = check_irreducible_basis(S, span, cfg.alphabet());
  CHECK_FALSE(report.pass);
  CHECK(report.monomials == 400);
  CHECK(report.irreducible == 218);
  CHECK(report.rank == 134);  // < 400 - 218 = 182 reducible words

  Monomial missing = M(cfg, "D1 D1 (x) * D2 (x)");
  CHECK(is_reducible(missing, S));
  bool is_pivot = false;
  for (const auto& row : span.rows)
    if (row.leading_monomial() == missing) is_pivot = true;
  CHECK_FALSE(is_pivot);
}

TEST_CASE("closed systems agree with the linear-algebra oracle") {
  Rng rng(103);
  Alphabet a{1, 2};
  Bound rule_bound{2, 1};
  Bound span_bound{2, 2};
  auto monomials = all_monomials(a, span_bound);
  int gsb_seen = 0;
  for (int i = 0; i < 60; ++i) {
    RewriteSystem S = random_system(rng, a, rule_bound, 2, 2);
    if (!is_gsb(S).ok) continue;
    ++gsb_seen;
    SpanBasis span = build_span(S, a, span_bound);
    CHECK(check_leading_reducibility(S, span).pass);
    CHECK(check_irreducible_basis(S, span, a).pass);
    for (const auto& m : monomials) {
      bool nf_zero = reduce(Polynomial(m), S).is_zero();
      bool member = ideal_member(Polynomial(m), span);
      CHECK(nf_zero == member);
    }
    // linearity of reduction on closed systems
    for (int k = 0; k < 10; ++k) {
      Polynomial f = random_polynomial(rng, a, span_bound, 3);
      Polynomial g = random_polynomial(rng, a, span_bound, 3);
      CHECK(reduce(f + g, S) == reduce(f, S) + reduce(g, S));
    }
  }
  CHECK(gsb_seen >= 10);
}
