#pragma once

#include <map>

#include "derivation.hpp"

namespace diffalg {

/// Image of f under the differential-algebra homomorphism extending phi:
/// a letter D_{i1}...D_{im}(x) maps to the derivative word applied to
/// phi(x), extended multiplicatively over letters and linearly over terms.
/// Throws UnboundVariableError if some variable of f has no image.
inline Polynomial substitute(const Polynomial& f,
                             const std::map<Variable, Polynomial>& phi) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    Polynomial image = Polynomial::constant(Rational(1));
    for (const auto& letter : m.letters) {
      auto it = phi.find(letter.var);
      if (it == phi.end()) throw UnboundVariableError(letter.var.rank);
      image = image * derive_poly(it->second, letter.ops);
    }
    out += image * c;
  }
  return out;
}

}  // namespace diffalg
