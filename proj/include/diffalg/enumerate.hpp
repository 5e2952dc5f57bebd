#pragma once

#include <algorithm>
#include <vector>

#include "ordering.hpp"

namespace diffalg {

/// All operator strings over the declared operators of length <= max_len,
/// ordered by length then lexicographically.
inline std::vector<OpString> all_op_strings(int op_count, std::size_t max_len) {
  std::vector<OpString> out{OpString{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int j = 0; j < op_count; ++j) {
        OpString s = out[i];
        s.push_back(OperatorId{j});
        out.push_back(std::move(s));
      }
    level_begin = level_end;
  }
  return out;
}

/// All nondecreasing operator strings of length <= max_len (multisets).
inline std::vector<OpString> nondecreasing_op_strings(int op_count,
                                                      std::size_t max_len) {
  std::vector<OpString> out{OpString{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      int lo = out[i].empty() ? 0 : out[i].back().rank;
      for (int j = lo; j < op_count; ++j) {
        OpString s = out[i];
        s.push_back(OperatorId{j});
        out.push_back(std::move(s));
      }
    }
    level_begin = level_end;
  }
  return out;
}

/// All letters over the alphabet carrying at most max_depth operators,
/// ascending in the letter order.
inline std::vector<DiffWord> all_letters(const Alphabet& a,
                                         std::size_t max_depth) {
  std::vector<DiffWord> out;
  auto strings = all_op_strings(a.op_count, max_depth);
  for (int v = 0; v < a.var_count; ++v)
    for (const auto& s : strings) out.push_back(DiffWord{Variable{v}, s});
  std::sort(out.begin(), out.end(),
            [](const DiffWord& x, const DiffWord& y) { return x < y; });
  return out;
}

/// All monomials within the bound, ascending in the word order. Intended
/// for desk-scale bounds; the count grows as letters^length.
inline std::vector<Monomial> all_monomials(const Alphabet& a, const Bound& b) {
  auto letters = all_letters(a, b.max_op_depth);
  std::vector<Monomial> out{Monomial::one()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= b.max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const auto& l : letters) {
        Monomial m = out[i];
        m.letters.push_back(l);
        out.push_back(std::move(m));
      }
    level_begin = level_end;
  }
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

}  // namespace diffalg
