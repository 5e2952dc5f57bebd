#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <vector>

#include "derivation.hpp"
#include "enumerate.hpp"

namespace diffalg {

/// If `suffix` is a suffix of `host`, returns the leftover prefix.
inline std::optional<OpString> strip_op_suffix(const OpString& host,
                                               const OpString& suffix) {
  if (host.size() < suffix.size()) return std::nullopt;
  std::size_t off = host.size() - suffix.size();
  if (!std::equal(suffix.begin(), suffix.end(), host.begin() + off))
    return std::nullopt;
  return OpString(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(off));
}

/// Matches the letters of `pattern` (nonempty) against `host` starting at
/// position p: letters after the first must be equal, the first letter must
/// have the same generator and carry the pattern's operator string as a
/// suffix. Returns the leftover prefix, i.e. the derivative word under which
/// the pattern's leading word sits inside the host.
inline std::optional<OpString> match_leading_at(const Monomial& host,
                                                std::size_t p,
                                                const Monomial& pattern) {
  const std::size_t k = pattern.length();
  if (k == 0 || p + k > host.length()) return std::nullopt;
  for (std::size_t i = 1; i < k; ++i)
    if (!(host.letters[p + i] == pattern.letters[i])) return std::nullopt;
  const DiffWord& h0 = host.letters[p];
  const DiffWord& n0 = pattern.letters[0];
  if (h0.var != n0.var) return std::nullopt;
  return strip_op_suffix(h0.ops, n0.ops);
}

/// An occurrence of a rule inside a host word: the host factors as
/// left * d^{jbar}(leading of rule) * right.
struct Occurrence {
  std::size_t rule_index = 0;
  Monomial left;
  OpString jbar;
  Monomial right;
};

/// A finite set of monic nonzero polynomials with a first-letter index for
/// occurrence scans. Exact duplicates are dropped on construction; rule
/// order is otherwise the given order. Immutable once built.
class RewriteSystem {
 public:
  RewriteSystem() = default;

  explicit RewriteSystem(std::vector<Polynomial> rules) {
    for (auto& r : rules) {
      if (r.is_zero()) throw InvalidRuleError("zero polynomial as a rule");
      if (!r.is_monic())
        throw InvalidRuleError("rules must be monic: " + raw_string(r));
      bool dup = false;
      for (const auto& have : rules_)
        if (have == r) {
          dup = true;
          break;
        }
      if (dup) continue;
      rules_.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Monomial& lead = rules_[i].leading_monomial();
      if (lead.is_one())
        unit_rules_.push_back(i);
      else
        by_var_[lead.letters[0].var.rank].push_back(i);
    }
  }

  /// Builds a system from arbitrary nonzero generators: scales each monic
  /// and drops zero entries.
  static RewriteSystem normalized(const std::vector<Polynomial>& rules) {
    std::vector<Polynomial> monic;
    monic.reserve(rules.size());
    for (const auto& r : rules)
      if (!r.is_zero()) monic.push_back(make_monic(r));
    return RewriteSystem(std::move(monic));
  }

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const std::vector<Polynomial>& rules() const { return rules_; }
  const Polynomial& rule(std::size_t i) const { return rules_[i]; }

  const std::vector<std::size_t>& rules_leading_with(Variable v) const {
    static const std::vector<std::size_t> none;
    auto it = by_var_.find(v.rank);
    return it == by_var_.end() ? none : it->second;
  }

  const std::vector<std::size_t>& unit_rules() const { return unit_rules_; }

 private:
  std::vector<Polynomial> rules_;
  std::map<int, std::vector<std::size_t>> by_var_;
  std::vector<std::size_t> unit_rules_;
};

namespace detail {

/// Visits occurrences in deterministic order: position ascending, then rule
/// index, the derivative word being unique given both. A rule whose leading
/// monomial is the empty word occurs at every split of the host. The visitor
/// returns true to stop early.
template <typename Visitor>
bool visit_occurrences(const Monomial& u, const RewriteSystem& S,
                       Visitor&& visit) {
  for (std::size_t p = 0; p <= u.length(); ++p) {
    const std::vector<std::size_t>* letter_rules = nullptr;
    if (p < u.length())
      letter_rules = &S.rules_leading_with(u.letters[p].var);
    const std::vector<std::size_t>& units = S.unit_rules();
    std::size_t a = 0, b = 0;
    while ((letter_rules && a < letter_rules->size()) || b < units.size()) {
      std::size_t idx;
      if (letter_rules && a < letter_rules->size() &&
          (b >= units.size() || (*letter_rules)[a] < units[b]))
        idx = (*letter_rules)[a++];
      else
        idx = units[b++];
      const Monomial& lead = S.rule(idx).leading_monomial();
      if (lead.is_one()) {
        if (visit(Occurrence{idx, subword(u, 0, p), OpString{},
                             subword(u, p, u.length())}))
          return true;
        continue;
      }
      auto jbar = match_leading_at(u, p, lead);
      if (!jbar) continue;
      if (visit(Occurrence{idx, subword(u, 0, p), std::move(*jbar),
                           subword(u, p + lead.length(), u.length())}))
        return true;
    }
  }
  return false;
}

}  // namespace detail

/// All factorizations u = a * d^{jbar}(leading of s) * b over rules s.
inline std::vector<Occurrence> find_occurrences(const Monomial& u,
                                                const RewriteSystem& S) {
  std::vector<Occurrence> out;
  detail::visit_occurrences(u, S, [&](Occurrence occ) {
    out.push_back(std::move(occ));
    return false;
  });
  return out;
}

inline std::optional<Occurrence> find_first_occurrence(
    const Monomial& u, const RewriteSystem& S) {
  std::optional<Occurrence> out;
  detail::visit_occurrences(u, S, [&](Occurrence occ) {
    out = std::move(occ);
    return true;
  });
  return out;
}

inline bool is_reducible(const Monomial& u, const RewriteSystem& S) {
  return detail::visit_occurrences(u, S,
                                   [](const Occurrence&) { return true; });
}

/// The context product a * D^{jbar}(s) * b. For monic s its leading term is
/// the monomial a * d^{jbar}(leading of s) * b with coefficient 1.
inline Polynomial context_word(const Monomial& a, const Polynomial& s,
                               const OpString& jbar, const Monomial& b) {
  return mul_context(a, derive_poly(s, jbar), b);
}

/// Reduction to normal form: while the leading monomial of the remainder
/// has an occurrence, subtract the matching context word (scaled by the
/// leading coefficient); otherwise emit the leading term. When several
/// occurrences exist the first in the deterministic scan order is used, so
/// normal forms are reproducible. Terminates because the leading monomial
/// strictly decreases in a well-order.
inline Polynomial reduce(const Polynomial& f, const RewriteSystem& S) {
  Polynomial out;
  Polynomial rem = f;
  while (!rem.is_zero()) {
    auto [u, c] = rem.leading_term();
    auto occ = find_first_occurrence(u, S);
    if (occ) {
      rem -= c * context_word(occ->left, S.rule(occ->rule_index), occ->jbar,
                              occ->right);
      assert(rem.is_zero() || rem.leading_monomial() < u);
    } else {
      out.add_term(u, c);
      rem.add_term(u, -c);
    }
  }
  return out;
}

enum class CompositionKind { inclusion_outer, inclusion_derived, intersection };

inline const char* to_string(CompositionKind k) {
  switch (k) {
    case CompositionKind::inclusion_outer: return "inclusion_outer";
    case CompositionKind::inclusion_derived: return "inclusion_derived";
    case CompositionKind::intersection: return "intersection";
  }
  return "?";
}

/// A critical pair of two rules relative to an ambiguity word `overlap`:
/// the difference of the two reductions of that word. Whenever the value is
/// nonzero its leading monomial lies strictly below the overlap.
struct Composition {
  CompositionKind kind{};
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  Monomial overlap;
  Polynomial value;
  Monomial left;        // context a
  Monomial right;       // context b
  OpString derivative;  // on g for inclusion_outer/intersection, on f for
                        // inclusion_derived
};

/// All compositions of the ordered pair (f, g), both monic. Three families:
///
///  (1) inclusion_outer: the leading word of g sits (possibly derived)
///      inside the leading word of f; value = f - a * D^{jbar}(g) * b,
///      overlap = leading of f. The identity occurrence of a rule in
///      itself is skipped.
///  (2) inclusion_derived: a derived form of the whole leading word of f
///      equals leading(g) * b with a nonempty derivative word; value =
///      D^{ibar}(f) - g * b. An empty derivative word would be family (1).
///  (3) intersection: a proper right part of leading(f) overlaps a derived
///      left letter of leading(g) with g extending past f, both contexts
///      nonempty; value = f * b - a * D^{jbar}(g).
///
/// Each family's matches are uniquely determined by the position, so the
/// output is deterministic: family (1) occurrences in scan order, then the
/// single family (2) candidate, then family (3) by position.
inline std::vector<Composition> compositions(const Polynomial& f,
                                             const Polynomial& g,
                                             std::size_t fi = 0,
                                             std::size_t gi = 0) {
  std::vector<Composition> out;
  const Monomial& fbar = f.leading_monomial();
  const Monomial& gbar = g.leading_monomial();
  const std::size_t n = fbar.length();
  const std::size_t k = gbar.length();

  // (1) inclusion_outer
  if (k == 0) {
    // unit-leading g occurs at every split of fbar; all splits subtract the
    // same word a*g*b = fbar, so one composition suffices.
    if (!(f == g)) {
      Composition c{CompositionKind::inclusion_outer, fi, gi, fbar,
                    f - context_word(Monomial::one(), g, OpString{}, fbar),
                    Monomial::one(), fbar, OpString{}};
      out.push_back(std::move(c));
    }
  } else if (n >= k) {
    for (std::size_t p = 0; p + k <= n; ++p) {
      auto jbar = match_leading_at(fbar, p, gbar);
      if (!jbar) continue;
      if (f == g && p == 0 && k == n && jbar->empty()) continue;
      Monomial a = subword(fbar, 0, p);
      Monomial b = subword(fbar, p + k, n);
      Polynomial value = f - context_word(a, g, *jbar, b);
      out.push_back(Composition{CompositionKind::inclusion_outer, fi, gi,
                                fbar, std::move(value), std::move(a),
                                std::move(b), std::move(*jbar)});
    }
  }

  // (2) inclusion_derived
  if (n >= 1 && k >= 1 && k <= n) {
    const DiffWord& f0 = fbar.letters[0];
    const DiffWord& g0 = gbar.letters[0];
    if (g0.var == f0.var && g0.op_count() > f0.op_count()) {
      auto ibar = strip_op_suffix(g0.ops, f0.ops);
      bool tail_ok = ibar.has_value();
      for (std::size_t i = 1; tail_ok && i < k; ++i)
        tail_ok = fbar.letters[i] == gbar.letters[i];
      if (tail_ok) {
        Monomial b = subword(fbar, k, n);
        Monomial w = leading_derived(fbar, *ibar);  // = gbar * b
        Polynomial value = derive_poly(f, *ibar) - g * Polynomial(b);
        out.push_back(Composition{CompositionKind::inclusion_derived, fi, gi,
                                  std::move(w), std::move(value),
                                  Monomial::one(), std::move(b),
                                  std::move(*ibar)});
      }
    }
  }

  // (3) intersection
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t overlap_len = n - p;
    if (k <= overlap_len) continue;  // g must extend past f
    const DiffWord& fp = fbar.letters[p];
    const DiffWord& g0 = gbar.letters[0];
    if (fp.var != g0.var) continue;
    auto jbar = strip_op_suffix(fp.ops, g0.ops);
    if (!jbar) continue;
    bool tail_ok = true;
    for (std::size_t i = 1; i < overlap_len; ++i)
      if (!(fbar.letters[p + i] == gbar.letters[i])) {
        tail_ok = false;
        break;
      }
    if (!tail_ok) continue;
    Monomial a = subword(fbar, 0, p);
    Monomial b = subword(gbar, overlap_len, k);
    Monomial w = mul(fbar, b);  // = a * d^{jbar}(gbar)
    Polynomial value =
        f * Polynomial(b) - context_word(a, g, *jbar, Monomial::one());
    out.push_back(Composition{CompositionKind::intersection, fi, gi,
                              std::move(w), std::move(value), std::move(a),
                              std::move(b), std::move(*jbar)});
  }

  return out;
}

/// Compositions over all ordered rule pairs (including a rule with itself),
/// pairs enumerated lexicographically by index.
inline std::vector<Composition> all_compositions(const RewriteSystem& S) {
  std::vector<Composition> out;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j) {
      auto cs = compositions(S.rule(i), S.rule(j), i, j);
      out.insert(out.end(), std::make_move_iterator(cs.begin()),
                 std::make_move_iterator(cs.end()));
    }
  return out;
}

/// Reduction to zero, a sufficient certificate for triviality modulo
/// (S, overlap): the subtracted context words all have leading monomials at
/// or below the value's leading monomial, hence strictly below the overlap.
inline bool is_trivial(const Composition& c, const RewriteSystem& S) {
  return reduce(c.value, S).is_zero();
}

struct GsbCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<Composition> witness;
};

/// Checks triviality of compositions, optionally restricted to ambiguity
/// words carrying at most `max_overlap_ops` operators in total (used when a
/// system is a finite truncation of an infinite one). Returns the first
/// failing composition as a witness.
inline GsbCheck check_compositions(
    const RewriteSystem& S,
    std::optional<std::size_t> max_overlap_ops = std::nullopt) {
  GsbCheck result;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j)
      for (auto& c : compositions(S.rule(i), S.rule(j), i, j)) {
        if (max_overlap_ops && c.overlap.total_ops() > *max_overlap_ops)
          continue;
        ++result.checked;
        if (!is_trivial(c, S)) {
          result.ok = false;
          result.witness = std::move(c);
          return result;
        }
      }
  return result;
}

inline GsbCheck is_gsb(const RewriteSystem& S) { return check_compositions(S); }

/// Monomials within the bound having no occurrence of any rule, ascending.
inline std::vector<Monomial> irr_enumerate(const RewriteSystem& S,
                                           const Alphabet& alpha,
                                           const Bound& bound) {
  std::vector<Monomial> out;
  for (auto& m : all_monomials(alpha, bound))
    if (!is_reducible(m, S)) out.push_back(std::move(m));
  return out;
}

}  // namespace diffalg
