#pragma once

#include <compare>
#include <cstddef>

#include "term.hpp"

namespace diffalg {

/// The weight tuple of a letter: (generator; operator count, operator
/// string). Letters are compared by this tuple lexicographically.
struct Weight {
  Variable var;
  std::size_t m = 0;
  OpString indices;

  bool operator==(const Weight&) const = default;
};

inline Weight weight(const DiffWord& d) { return {d.var, d.ops.size(), d.ops}; }

/// Letter order: generator first, then operator count, then the operator
/// string left to right. Because the count is compared before the string,
/// strings of unequal length never reach the index comparison.
inline std::strong_ordering cmp_diffword(const DiffWord& a, const DiffWord& b) {
  if (auto c = a.var <=> b.var; c != 0) return c;
  if (auto c = a.ops.size() <=> b.ops.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.ops.size(); ++i)
    if (auto c = a.ops[i] <=> b.ops[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

/// Word order, deg-lex: shorter words are smaller; words of equal length are
/// decided by the leftmost differing letter.
inline std::strong_ordering cmp_monomial(const Monomial& u, const Monomial& v) {
  if (auto c = u.length() <=> v.length(); c != 0) return c;
  for (std::size_t i = 0; i < u.length(); ++i)
    if (auto c = cmp_diffword(u.letters[i], v.letters[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const DiffWord& a, const DiffWord& b) {
  return cmp_diffword(a, b);
}

inline std::strong_ordering operator<=>(const Monomial& u, const Monomial& v) {
  return cmp_monomial(u, v);
}

/// Comparator placing larger monomials first; polynomial term maps use this
/// so that begin() is the leading term.
struct MonomialGreater {
  bool operator()(const Monomial& u, const Monomial& v) const {
    return cmp_monomial(u, v) == std::strong_ordering::greater;
  }
};

struct MonomialLess {
  bool operator()(const Monomial& u, const Monomial& v) const {
    return cmp_monomial(u, v) == std::strong_ordering::less;
  }
};

}  // namespace diffalg
