#pragma once

#include <optional>
#include <string>

#include "rewriting.hpp"

namespace diffalg {

/// Row-reduced basis of the bounded slice of the ideal generated by a rule
/// set: the exact rational span of every context word a * D^{jbar}(s) * b
/// whose full expansion stays within the bound. Rows have distinct monic
/// pivot monomials, each pivot eliminated from all other rows; rows are
/// listed pivot-descending. A word enters only if every one of its
/// monomials fits the bound, which keeps membership and the rank counts
/// exact for the bounded slice.
struct SpanBasis {
  Bound bound{};
  std::vector<Polynomial> rows;
};

inline bool fits(const Polynomial& f, const Bound& b) {
  for (const auto& [m, c] : f.terms())
    if (!fits(m, b)) return false;
  return true;
}

namespace detail {

/// Incremental exact Gaussian elimination keyed by pivot monomial.
class RowReducer {
 public:
  /// Fully reduces v against the current rows: any pivot monomial occurring
  /// in v is eliminated.
  Polynomial reduce(Polynomial v) const {
    Polynomial out;
    while (!v.is_zero()) {
      auto [m, c] = v.leading_term();
      auto it = rows_.find(m);
      if (it != rows_.end()) {
        v -= c * it->second;
      } else {
        out.add_term(m, c);
        v.add_term(m, -c);
      }
    }
    return out;
  }

  void insert(Polynomial v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return;
    v = make_monic(v);
    const Monomial pivot = v.leading_monomial();
    for (auto& [p, row] : rows_) {
      Rational c = row.coefficient(pivot);
      if (c != 0) row -= c * v;
    }
    rows_.emplace(pivot, std::move(v));
  }

  std::vector<Polynomial> take_rows() && {
    std::vector<Polynomial> out;
    out.reserve(rows_.size());
    for (auto& [p, row] : rows_) out.push_back(std::move(row));
    return out;  // pivot-descending
  }

 private:
  std::map<Monomial, Polynomial, MonomialGreater> rows_;
};

}  // namespace detail

/// Enumerates every context word whose full expansion fits the bound and
/// Gaussian-eliminates the collection over the rationals.
inline SpanBasis build_span(const RewriteSystem& S, const Alphabet& alpha,
                            const Bound& bound) {
  // contexts grouped by length, each ascending
  std::vector<std::vector<Monomial>> by_len(bound.max_length + 1);
  for (auto& m : all_monomials(alpha, bound)) {
    std::size_t len = m.length();
    by_len[len].push_back(std::move(m));
  }

  detail::RowReducer reducer;
  for (const auto& s : S.rules()) {
    const Monomial& lead = s.leading_monomial();
    const std::size_t lead_len = lead.length();
    if (lead_len > bound.max_length) continue;
    std::size_t first_ops = lead.is_one() ? 0 : lead.letters[0].op_count();
    if (first_ops > bound.max_op_depth) continue;
    std::size_t jbar_cap = lead.is_one() ? 0 : bound.max_op_depth - first_ops;
    for (const auto& jbar : all_op_strings(alpha.op_count, jbar_cap)) {
      Polynomial derived = derive_poly(s, jbar);
      if (derived.is_zero()) continue;
      for (std::size_t la = 0; la + lead_len <= bound.max_length; ++la)
        for (std::size_t lb = 0; la + lead_len + lb <= bound.max_length; ++lb)
          for (const auto& a : by_len[la])
            for (const auto& b : by_len[lb]) {
              Polynomial word = mul_context(a, derived, b);
              if (!fits(word, bound)) continue;
              reducer.insert(std::move(word));
            }
    }
  }
  return SpanBasis{bound, std::move(reducer).take_rows()};
}

/// Residue of f modulo the span rows.
inline Polynomial reduce_mod_span(const SpanBasis& span, Polynomial f) {
  auto pivot_at = [&](std::size_t i) -> const Monomial& {
    return span.rows[i].leading_monomial();
  };
  Polynomial out;
  while (!f.is_zero()) {
    auto [m, c] = f.leading_term();
    // binary search the pivot-descending rows
    std::size_t lo = 0, hi = span.rows.size();
    bool hit = false;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      auto cmp = cmp_monomial(pivot_at(mid), m);
      if (cmp == std::strong_ordering::equal) {
        f -= c * span.rows[mid];
        hit = true;
        break;
      }
      if (cmp == std::strong_ordering::greater)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (!hit) {
      out.add_term(m, c);
      f.add_term(m, -c);
    }
  }
  return out;
}

/// Membership in the bounded ideal slice: true iff f row-reduces to zero.
/// Complete for elements all of whose context-word decompositions fit the
/// bound; membership implies true in that regime, and true always implies
/// membership. Throws OutOfBoundError if f has a monomial outside the
/// bound.
inline bool ideal_member(const Polynomial& f, const SpanBasis& span) {
  if (!fits(f, span.bound))
    throw OutOfBoundError("polynomial exceeds the span bound");
  return reduce_mod_span(span, f).is_zero();
}

struct ReducibilityReport {
  bool pass = true;
  std::size_t rows = 0;
  std::optional<Polynomial> witness;  // a span element with irreducible lead
};

/// Every nonzero element of the ideal must have a reducible leading
/// monomial when the rules are closed under compositions; a span row whose
/// pivot has no occurrence witnesses the converse.
inline ReducibilityReport check_leading_reducibility(const RewriteSystem& S,
                                                     const SpanBasis& span) {
  ReducibilityReport report;
  report.rows = span.rows.size();
  for (const auto& row : span.rows) {
    if (!is_reducible(row.leading_monomial(), S)) {
      report.pass = false;
      report.witness = row;
      return report;
    }
  }
  return report;
}

struct BasisReport {
  bool pass = true;
  std::size_t monomials = 0;
  std::size_t irreducible = 0;
  std::size_t rank = 0;
  std::optional<Monomial> witness;  // an irreducible pivot, when that fails
};

/// Checks that the irreducible monomials form a basis of the bounded
/// quotient slice: no pivot is irreducible, and the counts satisfy
/// |monomials| = |irreducible| + rank. Together these make the pivots
/// exactly the reducible monomials, which gives both spanning and linear
/// independence at the bound.
inline BasisReport check_irreducible_basis(const RewriteSystem& S,
                                           const SpanBasis& span,
                                           const Alphabet& alpha) {
  BasisReport report;
  report.rank = span.rows.size();
  auto monomials = all_monomials(alpha, span.bound);
  report.monomials = monomials.size();
  for (const auto& m : monomials)
    if (!is_reducible(m, S)) ++report.irreducible;
  for (const auto& row : span.rows) {
    if (!is_reducible(row.leading_monomial(), S)) {
      report.pass = false;
      report.witness = row.leading_monomial();
      return report;
    }
  }
  if (report.monomials != report.irreducible + report.rank) report.pass = false;
  return report;
}

}  // namespace diffalg
