// Command-line front end for the diffalg library: normal forms,
// compositions, basis checks, completion, irreducible-word enumeration,
// Lie structure verification and the linear-algebra cross-checks.
//
// Exit codes: 0 on success/PASS, 1 on FAIL or truncation, 2 on input or
// usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <diffalg/diffalg.hpp>

namespace {

using nlohmann::json;
using namespace diffalg;

SessionConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  return parse_config(in);
}

RewriteSystem read_rules(const std::string& path, const SessionConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rules file '" + path + "'");
  return RewriteSystem(load_rules(in, cfg, &std::cerr));
}

json composition_json(const Composition& c, const SessionConfig& cfg) {
  json j;
  j["kind"] = to_string(c.kind);
  j["f"] = c.f_index;
  j["g"] = c.g_index;
  j["w"] = print_monomial(c.overlap, cfg);
  j["value"] = print_polynomial(c.value, cfg);
  return j;
}

struct Options {
  std::string config_path;
  bool as_json = false;
};

int cmd_nf(const Options& opt, const std::string& rules_path,
           const std::string& poly_text) {
  SessionConfig cfg = read_config(opt.config_path);
  RewriteSystem S = read_rules(rules_path, cfg);
  Polynomial f = parse_polynomial(poly_text, cfg);
  Polynomial nf = reduce(f, S);
  if (opt.as_json) {
    json j;
    j["command"] = "nf";
    j["normal_form"] = print_polynomial(nf, cfg);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << print_polynomial(nf, cfg) << "\n";
  }
  return 0;
}

int cmd_compositions(const Options& opt, const std::string& rules_path) {
  SessionConfig cfg = read_config(opt.config_path);
  RewriteSystem S = read_rules(rules_path, cfg);
  auto comps = all_compositions(S);
  if (opt.as_json) {
    json j;
    j["command"] = "compositions";
    j["count"] = comps.size();
    j["compositions"] = json::array();
    for (const auto& c : comps) j["compositions"].push_back(composition_json(c, cfg));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : comps) {
      std::cout << to_string(c.kind) << " f=" << c.f_index
                << " g=" << c.g_index
                << " w: " << print_monomial(c.overlap, cfg)
                << " value: " << print_polynomial(c.value, cfg) << "\n";
    }
    std::cout << "# " << comps.size() << " compositions\n";
  }
  return 0;
}

int cmd_gsb_check(const Options& opt, const std::string& rules_path) {
  SessionConfig cfg = read_config(opt.config_path);
  RewriteSystem S = read_rules(rules_path, cfg);
  GsbCheck result = is_gsb(S);
  if (opt.as_json) {
    json j;
    j["command"] = "gsb-check";
    j["pass"] = result.ok;
    j["checked"] = result.checked;
    if (!result.ok) {
      json w = composition_json(*result.witness, cfg);
      w["remainder"] = print_polynomial(reduce(result.witness->value, S), cfg);
      j["witness"] = w;
    }
    std::cout << j.dump() << "\n";
    return result.ok ? 0 : 1;
  }
  if (result.ok) {
    std::cout << "PASS: all " << result.checked << " compositions trivial\n";
    return 0;
  }
  const Composition& c = *result.witness;
  std::cout << "FAIL: nontrivial composition\n";
  std::cout << "kind: " << to_string(c.kind) << "\n";
  std::cout << "f: " << print_polynomial(S.rule(c.f_index), cfg) << "\n";
  std::cout << "g: " << print_polynomial(S.rule(c.g_index), cfg) << "\n";
  std::cout << "w: " << print_monomial(c.overlap, cfg) << "\n";
  std::cout << "value: " << print_polynomial(c.value, cfg) << "\n";
  std::cout << "remainder: " << print_polynomial(reduce(c.value, S), cfg)
            << "\n";
  return 1;
}

int cmd_complete(const Options& opt, const std::string& rules_path,
                 std::optional<std::size_t> max_iter,
                 std::optional<std::size_t> max_len,
                 std::optional<std::size_t> max_depth) {
  SessionConfig cfg = read_config(opt.config_path);
  RewriteSystem S = read_rules(rules_path, cfg);
  CompletionLimits limits = cfg.limits;
  if (max_iter) limits.max_iterations = *max_iter;
  if (max_len) limits.max_rule_length = *max_len;
  if (max_depth) limits.max_op_depth = *max_depth;
  CompletionResult result = complete(S, limits);
  if (opt.as_json) {
    json j;
    j["command"] = "complete";
    j["status"] = to_string(result.status);
    j["iterations"] = result.log.size();
    j["added"] = json::array();
    for (const auto& r : result.added)
      j["added"].push_back(print_polynomial(r, cfg));
    j["basis"] = json::array();
    for (const auto& r : result.basis.rules())
      j["basis"].push_back(print_polynomial(r, cfg));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# status: " << to_string(result.status) << "\n";
    std::cout << "# iterations: " << result.log.size() << "\n";
    std::cout << "# added: " << result.added.size() << "\n";
    for (const auto& r : result.basis.rules())
      std::cout << print_polynomial(r, cfg) << "\n";
  }
  return result.status == CompletionStatus::closed ? 0 : 1;
}

int cmd_irr(const Options& opt, const std::string& rules_path,
            std::optional<std::size_t> max_len,
            std::optional<std::size_t> max_depth) {
  SessionConfig cfg = read_config(opt.config_path);
  RewriteSystem S = read_rules(rules_path, cfg);
  Bound bound = cfg.bounds;
  if (max_len) bound.max_length = *max_len;
  if (max_depth) bound.max_op_depth = *max_depth;
  auto irr = irr_enumerate(S, cfg.alphabet(), bound);
  if (opt.as_json) {
    json j;
    j["command"] = "irr";
    j["count"] = irr.size();
    j["monomials"] = json::array();
    for (const auto& m : irr) j["monomials"].push_back(print_monomial(m, cfg));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# count: " << irr.size() << "\n";
    for (const auto& m : irr) std::cout << print_monomial(m, cfg) << "\n";
  }
  return 0;
}

int cmd_lie_verify(const Options& opt, std::size_t depth) {
  SessionConfig cfg = read_config(opt.config_path);
  LieStructure L = cfg.lie_structure();
  LieValidation v = validate_lie(L);
  if (!v.ok) {
    // report witnesses with the declared operator labels
    auto label = [&](int rank) {
      return cfg.op_labels[static_cast<std::size_t>(rank)];
    };
    std::string where =
        v.failure == LieValidation::Failure::antisymmetry
            ? ("antisymmetry violated at (i=" + std::to_string(label(v.witness[0])) +
               ", j=" + std::to_string(label(v.witness[1])) +
               ", r=" + std::to_string(label(v.witness[2])) + ")")
            : ("Jacobi identity violated at (i=" + std::to_string(label(v.witness[0])) +
               ", j=" + std::to_string(label(v.witness[1])) +
               ", k=" + std::to_string(label(v.witness[2])) +
               ", t=" + std::to_string(label(v.witness[3])) + ")");
    if (opt.as_json) {
      json j;
      j["command"] = "lie-verify";
      j["pass"] = false;
      j["validation"] = where;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "FAIL: " << where << "\n";
    }
    return 1;
  }
  CommutatorCheck check =
      verify_commutator_system(L, static_cast<int>(cfg.var_names.size()), depth);
  if (opt.as_json) {
    json j;
    j["command"] = "lie-verify";
    j["pass"] = check.ok;
    j["depth"] = depth;
    j["compositions_checked"] = check.compositions_checked;
    if (!check.ok) {
      json w = composition_json(*check.witness, cfg);
      w["remainder"] = print_polynomial(check.witness_remainder, cfg);
      j["witness"] = w;
    }
    std::cout << j.dump() << "\n";
    return check.ok ? 0 : 1;
  }
  if (check.ok) {
    std::cout << "PASS: structure constants valid; commutator rules closed"
                 " under compositions at depth "
              << depth << "\n";
    std::cout << "checked: " << check.compositions_checked
              << " compositions\n";
    return 0;
  }
  std::cout << "FAIL: nontrivial composition\n";
  std::cout << "kind: " << to_string(check.witness->kind) << "\n";
  std::cout << "w: " << print_monomial(check.witness->overlap, cfg) << "\n";
  std::cout << "value: " << print_polynomial(check.witness->value, cfg) << "\n";
  std::cout << "remainder: " << print_polynomial(check.witness_remainder, cfg)
            << "\n";
  return 1;
}

int cmd_lie_nf(const Options& opt, const std::string& poly_text) {
  SessionConfig cfg = read_config(opt.config_path);
  LieStructure L = cfg.lie_structure();
  Polynomial f = parse_polynomial(poly_text, cfg);
  Polynomial nf =
      pbw_normal_form(f, L, static_cast<int>(cfg.var_names.size()));
  if (opt.as_json) {
    json j;
    j["command"] = "lie-nf";
    j["normal_form"] = print_polynomial(nf, cfg);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << print_polynomial(nf, cfg) << "\n";
  }
  return 0;
}

int cmd_oracle_check(const Options& opt, const std::string& rules_path,
                     std::optional<std::size_t> max_len,
                     std::optional<std::size_t> max_depth) {
  SessionConfig cfg = read_config(opt.config_path);
  RewriteSystem S = read_rules(rules_path, cfg);
  Bound bound = cfg.bounds;
  if (max_len) bound.max_length = *max_len;
  if (max_depth) bound.max_op_depth = *max_depth;
  SpanBasis span = build_span(S, cfg.alphabet(), bound);
  ReducibilityReport ii = check_leading_reducibility(S, span);
  BasisReport iii = check_irreducible_basis(S, span, cfg.alphabet());
  bool pass = ii.pass && iii.pass;
  if (opt.as_json) {
    json j;
    j["command"] = "oracle-check";
    j["pass"] = pass;
    j["leading_reducibility"] = json{{"pass", ii.pass}, {"rows", ii.rows}};
    if (ii.witness)
      j["leading_reducibility"]["witness"] = print_polynomial(*ii.witness, cfg);
    j["irreducible_basis"] =
        json{{"pass", iii.pass},
             {"monomials", iii.monomials},
             {"irreducible", iii.irreducible},
             {"rank", iii.rank}};
    if (iii.witness)
      j["irreducible_basis"]["witness"] = print_monomial(*iii.witness, cfg);
    std::cout << j.dump() << "\n";
    return pass ? 0 : 1;
  }
  std::cout << "leading-term reducibility: " << (ii.pass ? "PASS" : "FAIL")
            << " (rows: " << ii.rows << ")\n";
  if (ii.witness)
    std::cout << "witness: " << print_polynomial(*ii.witness, cfg) << "\n";
  std::cout << "irreducible-word basis: " << (iii.pass ? "PASS" : "FAIL")
            << " (monomials: " << iii.monomials
            << ", irreducible: " << iii.irreducible << ", rank: " << iii.rank
            << ")\n";
  if (iii.witness)
    std::cout << "witness: " << print_monomial(*iii.witness, cfg) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gröbner-Shirshov computations in free differential algebras"};
  app.require_subcommand(1);

  Options opt;
  std::string rules_path;
  std::string poly_text;
  std::optional<std::size_t> max_iter, max_len, max_depth;
  std::size_t lie_depth = 2;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "session config file")
        ->required();
    sub->add_flag("--json", opt.as_json, "machine-readable output");
  };

  CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
  add_common(nf);
  nf->add_option("--rules", rules_path, "rules file")->required();
  nf->add_option("poly", poly_text, "polynomial")->required();

  CLI::App* comps = app.add_subcommand("compositions", "list all compositions");
  add_common(comps);
  comps->add_option("--rules", rules_path, "rules file")->required();

  CLI::App* gsb = app.add_subcommand("gsb-check",
                                     "check closure under compositions");
  add_common(gsb);
  gsb->add_option("--rules", rules_path, "rules file")->required();

  CLI::App* comp = app.add_subcommand("complete", "saturate with compositions");
  add_common(comp);
  comp->add_option("--rules", rules_path, "rules file")->required();
  comp->add_option("--max-iter", max_iter, "iteration limit");
  comp->add_option("--max-len", max_len, "new-rule leading length limit");
  comp->add_option("--max-depth", max_depth, "new-rule operator depth limit");

  CLI::App* irr = app.add_subcommand("irr", "enumerate irreducible words");
  add_common(irr);
  irr->add_option("--rules", rules_path, "rules file")->required();
  irr->add_option("--max-len", max_len, "max word length");
  irr->add_option("--max-depth", max_depth, "max operators per letter");

  CLI::App* lie_verify = app.add_subcommand(
      "lie-verify", "validate structure constants and check closure");
  add_common(lie_verify);
  lie_verify->add_option("--depth", lie_depth,
                         "tail depth of the checked truncation");

  CLI::App* lie_nf =
      app.add_subcommand("lie-nf", "normal form modulo the commutator rules");
  add_common(lie_nf);
  lie_nf->add_option("poly", poly_text, "polynomial")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "linear-algebra cross-check of the basis property");
  add_common(oracle);
  oracle->add_option("--rules", rules_path, "rules file")->required();
  oracle->add_option("--max-len", max_len, "bound: max word length");
  oracle->add_option("--max-depth", max_depth, "bound: max operators per letter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(nf)) return cmd_nf(opt, rules_path, poly_text);
    if (app.got_subcommand(comps)) return cmd_compositions(opt, rules_path);
    if (app.got_subcommand(gsb)) return cmd_gsb_check(opt, rules_path);
    if (app.got_subcommand(comp))
      return cmd_complete(opt, rules_path, max_iter, max_len, max_depth);
    if (app.got_subcommand(irr))
      return cmd_irr(opt, rules_path, max_len, max_depth);
    if (app.got_subcommand(lie_verify)) return cmd_lie_verify(opt, lie_depth);
    if (app.got_subcommand(lie_nf)) return cmd_lie_nf(opt, poly_text);
    if (app.got_subcommand(oracle))
      return cmd_oracle_check(opt, rules_path, max_len, max_depth);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
