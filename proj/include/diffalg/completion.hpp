#pragma once

#include <set>
#include <utility>

#include "rewriting.hpp"

namespace diffalg {

/// Resource limits for completion. Saturation does not terminate in
/// general, so all three are mandatory.
struct CompletionLimits {
  std::size_t max_iterations = 1000;
  std::size_t max_rule_length = 10;
  std::size_t max_op_depth = 10;
};

enum class CompletionStatus { closed, truncated };

inline const char* to_string(CompletionStatus s) {
  return s == CompletionStatus::closed ? "closed" : "truncated";
}

struct ProcessedComposition {
  enum class Outcome { trivial, added, limit };
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  CompositionKind kind{};
  Monomial overlap;
  Outcome outcome{};
  std::size_t rule_index = 0;  // valid when outcome == added
};

struct CompletionResult {
  CompletionStatus status{};
  RewriteSystem basis;
  std::vector<Polynomial> added;  // discovery order
  std::vector<ProcessedComposition> log;
};

/// Saturates S with reduced nontrivial compositions: pending compositions
/// are processed smallest ambiguity word first (ties by discovery order);
/// a nonzero reduction is made monic, appended as a new rule, and its
/// compositions with every rule are enqueued. Rules are append-only, so the
/// log stays auditable; inter-reduction is available separately. Every
/// added rule is a combination of context words of earlier rules, so the
/// generated ideal never changes.
///
/// Stops with status `closed` when no pending composition remains, or
/// `truncated` as soon as a limit trips (iteration budget exhausted, or a
/// new rule's leading monomial exceeding the size limits).
inline CompletionResult complete(const RewriteSystem& S,
                                 const CompletionLimits& limits) {
  struct Pending {
    Composition comp;
    std::size_t seq;
  };
  struct PendingLess {
    bool operator()(const Pending& x, const Pending& y) const {
      auto c = cmp_monomial(x.comp.overlap, y.comp.overlap);
      if (c != 0) return c == std::strong_ordering::less;
      return x.seq < y.seq;
    }
  };

  std::vector<Polynomial> rules = S.rules();
  std::set<Pending, PendingLess> pending;
  std::size_t seq = 0;

  auto enqueue = [&](std::size_t fi, std::size_t gi) {
    for (auto& c : compositions(rules[fi], rules[gi], fi, gi))
      pending.insert(Pending{std::move(c), seq++});
  };
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) enqueue(i, j);

  CompletionResult result;
  RewriteSystem current(rules);
  std::size_t iterations = 0;

  while (!pending.empty()) {
    if (iterations >= limits.max_iterations) {
      result.status = CompletionStatus::truncated;
      result.basis = std::move(current);
      return result;
    }
    Pending p = *pending.begin();
    pending.erase(pending.begin());
    ++iterations;

    ProcessedComposition entry{p.comp.f_index, p.comp.g_index, p.comp.kind,
                               p.comp.overlap,
                               ProcessedComposition::Outcome::trivial, 0};
    Polynomial r = reduce(p.comp.value, current);
    if (r.is_zero()) {
      result.log.push_back(std::move(entry));
      continue;
    }
    r = make_monic(r);
    const Monomial& lead = r.leading_monomial();
    if (lead.length() > limits.max_rule_length ||
        lead.max_letter_ops() > limits.max_op_depth) {
      entry.outcome = ProcessedComposition::Outcome::limit;
      result.log.push_back(std::move(entry));
      result.status = CompletionStatus::truncated;
      result.basis = std::move(current);
      return result;
    }

    rules.push_back(std::move(r));
    const std::size_t k = rules.size() - 1;
    entry.outcome = ProcessedComposition::Outcome::added;
    entry.rule_index = k;
    result.log.push_back(std::move(entry));
    result.added.push_back(rules.back());
    current = RewriteSystem(rules);
    for (std::size_t t = 0; t < k; ++t) {
      enqueue(t, k);
      enqueue(k, t);
    }
    enqueue(k, k);
  }

  result.status = CompletionStatus::closed;
  result.basis = std::move(current);
  return result;
}

/// Repeatedly replaces any rule whose leading monomial is reducible by the
/// other rules with its reduction against them, dropping rules that reduce
/// to zero. The output generates the same ideal and has pairwise
/// irreducible leading monomials. Terminates because each replacement
/// strictly lowers a leading monomial in a well-order.
inline RewriteSystem interreduce(const RewriteSystem& S) {
  std::vector<Polynomial> rules = S.rules();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(rules.size() - 1);
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      RewriteSystem rest(std::move(others));
      if (!is_reducible(rules[i].leading_monomial(), rest)) continue;
      Polynomial r = reduce(rules[i], rest);
      if (r.is_zero())
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      else
        rules[i] = make_monic(r);
      changed = true;
      break;
    }
  }
  return RewriteSystem(std::move(rules));
}

}  // namespace diffalg
