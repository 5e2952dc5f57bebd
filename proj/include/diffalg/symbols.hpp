#pragma once

#include <compare>
#include <cstdint>

namespace diffalg {

/// A generator symbol. `rank` is the position in the declared alphabet;
/// declaration order is the total order, earlier-declared meaning smaller.
struct Variable {
  std::int32_t rank = 0;
  auto operator<=>(const Variable&) const = default;
};

/// A derivation-operator symbol, ranked like Variable. The numeral printed
/// after `D` in the text syntax is a display label kept in the session
/// config; all comparisons use the rank.
struct OperatorId {
  std::int32_t rank = 0;
  auto operator<=>(const OperatorId&) const = default;
};

/// Sizes of the declared (finite) alphabets of a session.
struct Alphabet {
  int var_count = 0;
  int op_count = 0;
};

}  // namespace diffalg
