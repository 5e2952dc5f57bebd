#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "completion.hpp"
#include "lie.hpp"

namespace diffalg {

/// A parsing/printing session: the declared alphabets with their display
/// names, optional structure constants, and default limits and bounds.
/// Declaration order is the total order on both alphabets, earlier-declared
/// meaning smaller.
struct SessionConfig {
  std::vector<std::string> var_names;
  std::vector<unsigned long> op_labels;
  std::optional<LieStructure> lie;
  CompletionLimits limits{};
  Bound bounds{3, 3};

  Alphabet alphabet() const {
    return {static_cast<int>(var_names.size()),
            static_cast<int>(op_labels.size())};
  }

  std::optional<Variable> find_variable(std::string_view name) const {
    for (std::size_t i = 0; i < var_names.size(); ++i)
      if (var_names[i] == name) return Variable{static_cast<int>(i)};
    return std::nullopt;
  }

  std::optional<OperatorId> find_operator(unsigned long label) const {
    for (std::size_t i = 0; i < op_labels.size(); ++i)
      if (op_labels[i] == label) return OperatorId{static_cast<int>(i)};
    return std::nullopt;
  }

  /// The structure constants, defaulting to the abelian Lie algebra on the
  /// declared operators when the config carried no alpha entries.
  LieStructure lie_structure() const {
    if (lie) return *lie;
    return LieStructure(static_cast<int>(op_labels.size()));
  }
};

// ---------------------------------------------------------------------------
// Canonical polynomial syntax
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' mono)? | mono
//   coeff  := integer ('/' positive-integer)?
//   mono   := factor ('*' factor)* | '1'
//   factor := ('D' index)* '(' var ')'
//
// Whitespace-insensitive. Operator indices are written inline after `D`
// ("D12" is index 12, "D1 D2" is two operators), outermost application
// first: "D3 D2 D1 (x)" applies D1 innermost.
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const SessionConfig& cfg)
      : text_(text), cfg_(cfg) {}

  Polynomial parse() {
    Polynomial acc;
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty polynomial");
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    acc += term() * Rational(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-')
        throw SyntaxError(pos_, "expected '+', '-' or end of input");
      ++pos_;
      acc += term() * Rational(c == '-' ? -1 : 1);
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || is_digit(c) ||
           c == '_';
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, "expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational coefficient() {
    Integer num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_pos = pos_;
      Integer den = digits();
      if (den == 0) throw SyntaxError(den_pos, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Polynomial term() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected a term");
    if (is_digit(peek())) {
      Rational c = coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        return Polynomial(mono(), std::move(c));
      }
      return Polynomial::constant(std::move(c));
    }
    return Polynomial(mono());
  }

  Monomial mono() {
    skip_ws();
    if (!at_end() && peek() == '1') {
      ++pos_;
      return Monomial::one();
    }
    Monomial m = Monomial::single(factor());
    for (;;) {
      std::size_t save = pos_;
      skip_ws();
      if (at_end() || peek() != '*') {
        pos_ = save;
        break;
      }
      ++pos_;
      m.letters.push_back(factor());
    }
    return m;
  }

  DiffWord factor() {
    OpString ops;
    for (;;) {
      skip_ws();
      if (!at_end() && peek() == 'D' && pos_ + 1 < text_.size() &&
          is_digit(text_[pos_ + 1])) {
        ++pos_;
        std::size_t label_pos = pos_;
        Integer label = digits();
        unsigned long value = label.convert_to<unsigned long>();
        auto op = cfg_.find_operator(value);
        if (!op) throw UnknownOperatorError(label_pos, value);
        ops.push_back(*op);
        continue;
      }
      break;
    }
    skip_ws();
    if (at_end() || peek() != '(')
      throw SyntaxError(pos_, "expected '(' or 'D<index>'");
    ++pos_;
    skip_ws();
    std::size_t name_pos = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    std::string name(text_.substr(name_pos, pos_ - name_pos));
    if (name.empty()) throw SyntaxError(pos_, "expected a variable name");
    skip_ws();
    if (at_end() || peek() != ')') throw SyntaxError(pos_, "expected ')'");
    ++pos_;
    auto v = cfg_.find_variable(name);
    if (!v) throw UnknownVariableError(name_pos, name);
    return DiffWord{*v, std::move(ops)};
  }

  std::string_view text_;
  const SessionConfig& cfg_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text,
                                   const SessionConfig& cfg) {
  return detail::PolyParser(text, cfg).parse();
}

inline std::string print_factor(const DiffWord& d, const SessionConfig& cfg) {
  std::string s;
  for (const auto& op : d.ops)
    s += "D" + std::to_string(cfg.op_labels[static_cast<std::size_t>(op.rank)]) + " ";
  s += "(" + cfg.var_names[static_cast<std::size_t>(d.var.rank)] + ")";
  return s;
}

inline std::string print_monomial(const Monomial& m, const SessionConfig& cfg) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (i) s += " * ";
    s += print_factor(m.letters[i], cfg);
  }
  return s;
}

/// Canonical form: terms in strictly decreasing monomial order, coefficients
/// in lowest terms, signs absorbed into the separators, "0" for the zero
/// polynomial. The output parses back to the same polynomial byte-exactly.
inline std::string print_polynomial(const Polynomial& f,
                                    const SessionConfig& cfg) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (m.is_one())
      out += to_string(mag);
    else if (mag == 1)
      out += print_monomial(m, cfg);
    else
      out += to_string(mag) + " * " + print_monomial(m, cfg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Session config files: line-oriented `key = value`, '#' comments.
//
//   vars = x y
//   operators = 1 2 3
//   alpha 1 2 3 = 1            # alpha(i=1, j=2, r=3), i.e. [D1,D2] ∋ 1*D3
//   limit_iterations = 1000
//   limit_rule_length = 10
//   limit_op_depth = 10
//   bound_length = 3
//   bound_op_depth = 3
//
// Unknown keys are rejected.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline unsigned long parse_count(const std::string& tok, std::size_t line_no,
                                 const char* what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line_no, std::string("invalid ") + what + " '" + tok + "'");
  }
}

}  // namespace detail

inline SessionConfig parse_config(std::istream& in) {
  SessionConfig cfg;
  struct AlphaEntry {
    unsigned long i, j, r;
    std::string value;
    std::size_t line;
  };
  std::vector<AlphaEntry> alphas;
  bool any_alpha = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::strip_comment(line);
    auto eq = body.find('=');
    auto lhs_tokens = detail::split_ws(eq == std::string::npos
                                           ? body
                                           : body.substr(0, eq));
    if (lhs_tokens.empty()) {
      if (eq != std::string::npos)
        throw ConfigError(line_no, "missing key before '='");
      continue;  // blank or comment-only line
    }
    if (eq == std::string::npos)
      throw ConfigError(line_no, "expected 'key = value'");
    auto rhs_tokens = detail::split_ws(body.substr(eq + 1));
    const std::string& key = lhs_tokens[0];

    if (key == "vars") {
      if (lhs_tokens.size() != 1)
        throw ConfigError(line_no, "unexpected tokens after 'vars'");
      if (!cfg.var_names.empty())
        throw ConfigError(line_no, "duplicate 'vars' line");
      for (const auto& name : rhs_tokens) {
        if (cfg.find_variable(name))
          throw ConfigError(line_no, "duplicate variable '" + name + "'");
        cfg.var_names.push_back(name);
      }
    } else if (key == "operators") {
      if (lhs_tokens.size() != 1)
        throw ConfigError(line_no, "unexpected tokens after 'operators'");
      if (!cfg.op_labels.empty())
        throw ConfigError(line_no, "duplicate 'operators' line");
      for (const auto& tok : rhs_tokens) {
        unsigned long label = detail::parse_count(tok, line_no, "operator index");
        if (cfg.find_operator(label))
          throw ConfigError(line_no, "duplicate operator index " + tok);
        cfg.op_labels.push_back(label);
      }
    } else if (key == "alpha") {
      if (lhs_tokens.size() != 4)
        throw ConfigError(line_no, "expected 'alpha i j r = c'");
      if (rhs_tokens.size() != 1)
        throw ConfigError(line_no, "expected a single rational value");
      alphas.push_back(
          {detail::parse_count(lhs_tokens[1], line_no, "operator index"),
           detail::parse_count(lhs_tokens[2], line_no, "operator index"),
           detail::parse_count(lhs_tokens[3], line_no, "operator index"),
           rhs_tokens[0], line_no});
      any_alpha = true;
    } else if (key == "limit_iterations" || key == "limit_rule_length" ||
               key == "limit_op_depth" || key == "bound_length" ||
               key == "bound_op_depth") {
      if (lhs_tokens.size() != 1 || rhs_tokens.size() != 1)
        throw ConfigError(line_no, "expected '" + key + " = N'");
      unsigned long v = detail::parse_count(rhs_tokens[0], line_no, "count");
      if (key == "limit_iterations") {
        if (v == 0) throw ConfigError(line_no, "limit must be positive");
        cfg.limits.max_iterations = v;
      } else if (key == "limit_rule_length") {
        if (v == 0) throw ConfigError(line_no, "limit must be positive");
        cfg.limits.max_rule_length = v;
      } else if (key == "limit_op_depth") {
        if (v == 0) throw ConfigError(line_no, "limit must be positive");
        cfg.limits.max_op_depth = v;
      } else if (key == "bound_length") {
        cfg.bounds.max_length = v;
      } else {
        cfg.bounds.max_op_depth = v;
      }
    } else {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
  }

  if (any_alpha) {
    LieStructure L(static_cast<int>(cfg.op_labels.size()));
    for (const auto& e : alphas) {
      auto i = cfg.find_operator(e.i);
      auto j = cfg.find_operator(e.j);
      auto r = cfg.find_operator(e.r);
      if (!i || !j || !r)
        throw ConfigError(e.line, "alpha uses an undeclared operator index");
      Rational c;
      try {
        c = Rational(e.value);
      } catch (const std::exception&) {
        throw ConfigError(e.line, "invalid rational '" + e.value + "'");
      }
      L.set_alpha(*i, *j, *r, std::move(c));
    }
    cfg.lie = std::move(L);
  }
  return cfg;
}

/// Rules files: one polynomial per line, '#' comments. Rules are
/// monic-normalized on load with a warning on the diagnostic stream; zero
/// polynomials are skipped with a warning.
inline std::vector<Polynomial> load_rules(std::istream& in,
                                          const SessionConfig& cfg,
                                          std::ostream* diag = nullptr) {
  std::vector<Polynomial> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::strip_comment(line);
    bool blank = true;
    for (char c : body)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (blank) continue;
    if (!body.empty() && body.back() == '\r') body.pop_back();
    Polynomial p;
    try {
      p = parse_polynomial(body, cfg);
    } catch (SyntaxError& e) {
      throw SyntaxError(e.position,
                        "rules line " + std::to_string(line_no) + ": " +
                            std::string(e.what()));
    }
    if (p.is_zero()) {
      if (diag)
        *diag << "warning: rules line " << line_no
              << ": zero polynomial skipped\n";
      continue;
    }
    if (!p.is_monic()) {
      if (diag)
        *diag << "warning: rules line " << line_no
              << ": rule normalized to monic\n";
      p = make_monic(p);
    }
    rules.push_back(std::move(p));
  }
  return rules;
}

}  // namespace diffalg
