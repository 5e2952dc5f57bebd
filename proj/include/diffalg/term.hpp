#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "symbols.hpp"

namespace diffalg {

/// An operator string, outermost application first: {j1, j2, j3} stands for
/// D_{j1} D_{j2} D_{j3} applied to whatever follows.
using OpString = std::vector<OperatorId>;

/// One letter of the free monoid: a generator with a finite (possibly empty)
/// string of operators applied to it.
struct DiffWord {
  Variable var;
  OpString ops;

  std::size_t op_count() const { return ops.size(); }
  bool operator==(const DiffWord&) const = default;
};

/// A word over DiffWord letters. The empty word is the monoid identity.
struct Monomial {
  std::vector<DiffWord> letters;

  Monomial() = default;
  explicit Monomial(std::vector<DiffWord> ls) : letters(std::move(ls)) {}

  static Monomial one() { return Monomial{}; }
  static Monomial single(DiffWord d) { return Monomial{{std::move(d)}}; }

  bool is_one() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  std::size_t total_ops() const {
    std::size_t n = 0;
    for (const auto& l : letters) n += l.op_count();
    return n;
  }

  /// Largest operator count carried by a single letter.
  std::size_t max_letter_ops() const {
    std::size_t n = 0;
    for (const auto& l : letters) n = std::max(n, l.op_count());
    return n;
  }

  bool operator==(const Monomial&) const = default;
};

/// Free-monoid multiplication: concatenation of letter sequences.
inline Monomial mul(const Monomial& u, const Monomial& v) {
  Monomial r;
  r.letters.reserve(u.length() + v.length());
  r.letters.insert(r.letters.end(), u.letters.begin(), u.letters.end());
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

inline Monomial operator*(const Monomial& u, const Monomial& v) {
  return mul(u, v);
}

/// The sub-word [from, to).
inline Monomial subword(const Monomial& u, std::size_t from, std::size_t to) {
  Monomial r;
  r.letters.assign(u.letters.begin() + static_cast<std::ptrdiff_t>(from),
                   u.letters.begin() + static_cast<std::ptrdiff_t>(to));
  return r;
}

/// Enumeration bounds: at most `max_length` letters, each letter carrying at
/// most `max_op_depth` operators.
struct Bound {
  std::size_t max_length = 0;
  std::size_t max_op_depth = 0;
};

inline bool fits(const DiffWord& d, const Bound& b) {
  return d.op_count() <= b.max_op_depth;
}

inline bool fits(const Monomial& u, const Bound& b) {
  if (u.length() > b.max_length) return false;
  return std::all_of(u.letters.begin(), u.letters.end(),
                     [&](const DiffWord& d) { return fits(d, b); });
}

}  // namespace diffalg
