#pragma once

#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "ordering.hpp"
#include "rational.hpp"

namespace diffalg {

/// An element of the free differential algebra: a finite map from monomials
/// to nonzero exact rational coefficients. Terms are stored sorted in
/// decreasing monomial order, so the leading term is the first entry and
/// printing is deterministic. The zero polynomial is the empty map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGreater>;

  Polynomial() = default;
  explicit Polynomial(Monomial m, Rational c = Rational(1)) {
    add_term(std::move(m), std::move(c));
  }

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial constant(Rational c) {
    return Polynomial(Monomial::one(), std::move(c));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of `m`, zero if absent.
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw ZeroPolynomialError{};
    return terms_.begin()->first;
  }

  const Rational& leading_coefficient() const {
    if (is_zero()) throw ZeroPolynomialError{};
    return terms_.begin()->second;
  }

  std::pair<Monomial, Rational> leading_term() const {
    if (is_zero()) throw ZeroPolynomialError{};
    return *terms_.begin();
  }

  bool is_monic() const {
    return !is_zero() && leading_coefficient() == 1;
  }

  /// Adds c * m, merging with an existing term and pruning zeros.
  void add_term(Monomial m, Rational c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  TermMap terms_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

inline Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

inline Polynomial operator-(Polynomial a) {
  a *= Rational(-1);
  return a;
}

inline Polynomial operator*(Polynomial a, const Rational& c) {
  a *= c;
  return a;
}

inline Polynomial operator*(const Rational& c, Polynomial a) {
  a *= c;
  return a;
}

/// Ring multiplication: distributes over terms, multiplies monomials by
/// concatenation.
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add_term(mul(u, v), cu * cv);
  return r;
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  return a + b;
}

inline Polynomial poly_scale(const Rational& c, const Polynomial& f) {
  return f * c;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  return a * b;
}

/// a * f * b for monomial contexts, without building context polynomials.
inline Polynomial mul_context(const Monomial& a, const Polynomial& f,
                              const Monomial& b) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) r.add_term(mul(mul(a, m), b), c);
  return r;
}

/// f divided by its leading coefficient. Requires f != 0.
inline Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError{};
  Rational lc = f.leading_coefficient();
  if (lc == 1) return f;
  Polynomial r = f;
  r *= Rational(1) / lc;
  return r;
}

/// Rank-based rendering used in diagnostics and logs; the session-aware
/// canonical printer lives in io.hpp.
inline std::string raw_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (i) s += ".";
    for (const auto& op : m.letters[i].ops)
      s += "d" + std::to_string(op.rank) + " ";
    s += "(v" + std::to_string(m.letters[i].var.rank) + ")";
  }
  return s;
}

inline std::string raw_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + raw_string(m);
  }
  return s;
}

}  // namespace diffalg
