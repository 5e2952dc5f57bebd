#pragma once

#include "polynomial.hpp"

namespace diffalg {

/// Applies one operator to a word by the Leibniz rule:
///   D_j(1) = 0,
///   D_j(single letter) = the letter with j prepended to its string,
///   D_j(l1 ... ln) = sum over positions k of l1 ... D_j(lk) ... ln.
/// Every term of the result has the same length as u.
inline Polynomial derive_monomial(const Monomial& u, OperatorId j) {
  Polynomial r;
  for (std::size_t k = 0; k < u.length(); ++k) {
    Monomial t = u;
    auto& ops = t.letters[k].ops;
    ops.insert(ops.begin(), j);
    r.add_term(std::move(t), Rational(1));
  }
  return r;
}

/// Linear extension of derive_monomial.
inline Polynomial derive(const Polynomial& f, OperatorId j) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t k = 0; k < m.length(); ++k) {
      Monomial t = m;
      auto& ops = t.letters[k].ops;
      ops.insert(ops.begin(), j);
      r.add_term(std::move(t), c);
    }
  }
  return r;
}

/// Applies a whole derivative word, innermost operator first, so the result
/// equals D_{j1}(D_{j2}(... D_{jn}(f) ...)) for jbar = (j1, ..., jn).
/// The empty string is the identity.
inline Polynomial derive_poly(const Polynomial& f, const OpString& jbar) {
  Polynomial r = f;
  for (auto it = jbar.rbegin(); it != jbar.rend(); ++it) r = derive(r, *it);
  return r;
}

/// Leading monomial of derive_poly(u, jbar) in closed form: jbar is
/// prepended to the first letter's operator string, the remaining letters
/// are untouched. Requires u != 1; the derivative of 1 is 0 and has no
/// leading term.
inline Monomial leading_derived(const Monomial& u, const OpString& jbar) {
  if (u.is_one()) throw EmptyMonomialError{};
  Monomial r = u;
  auto& ops = r.letters.front().ops;
  ops.insert(ops.begin(), jbar.begin(), jbar.end());
  return r;
}

}  // namespace diffalg
