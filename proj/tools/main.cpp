// Command line front end.  Exit codes: 0 on success, 1 when a computation
// reports a negative outcome (no solution, failed verification), 2 on
// malformed input or unusable options.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symord/capacity.hpp"
#include "symord/errors.hpp"
#include "symord/io.hpp"
#include "symord/mobius.hpp"
#include "symord/poset.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"
#include "symord/verify.hpp"

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw symord::ParseError("cannot open " + path);
  return in;
}

symord::Scale scale_for(const std::vector<int>& values, std::optional<int> k) {
  if (k) return symord::Scale(*k);
  int need = 1;
  for (int v : values) need = std::max(need, std::abs(v));
  return symord::Scale(need);
}

struct RuleArgs {
  std::string seq;
  std::string rule = "splitting";
  std::optional<int> scale;
};

struct EvalArgs {
  std::string op;
  std::string args;
  std::optional<int> scale;
};

struct FunctionArgs {
  std::string poset_path;
  std::string function_path;
  std::string rule = "splitting";
  std::optional<int> scale;
};

struct CapacityMobiusArgs {
  std::string capacity_path;
  bool evenodd = false;
};

struct SugenoArgs {
  std::string capacity_path;
  std::string profile;
  std::string rule = "splitting";
  bool symmetric = false;
};

int run_rule(const RuleArgs& a) {
  symord::Sequence s = symord::parse_sequence(a.seq, a.scale);
  symord::RuleOutcome out = symord::apply_rule(symord::parse_rule(a.rule), s);
  std::cout << "result: " << out.result.value() << "\n";
  std::cout << "deleted:";
  for (std::size_t i : out.deleted) std::cout << ' ' << i;
  std::cout << "\n";
  return 0;
}

int run_eval(const EvalArgs& a) {
  std::vector<int> raw = symord::parse_int_csv(a.args);
  symord::Scale s = scale_for(raw, a.scale);
  std::vector<symord::SymLevel> v;
  v.reserve(raw.size());
  for (int x : raw) v.push_back(s.level(x));

  auto want = [&](std::size_t n) {
    if (v.size() != n)
      throw symord::ParseError(a.op + ": wants " + std::to_string(n) + " argument" +
                               (n == 1 ? "" : "s") + ", got " + std::to_string(v.size()));
  };

  symord::SymLevel out;
  if (a.op == "max") {
    want(2);
    out = symord::sym_max(v[0], v[1]);
  } else if (a.op == "min") {
    want(2);
    out = symord::sym_min(v[0], v[1]);
  } else if (a.op == "neg") {
    want(1);
    out = symord::negate(v[0]);
  } else if (a.op == "abs") {
    want(1);
    out = symord::abs_level(v[0]);
  } else if (a.op == "sign") {
    want(1);
    out = symord::sign_level(v[0], s);
  } else if (a.op == "conj") {
    want(1);
    out = symord::conjugate(v[0], s);
  } else if (a.op == "weber") {
    want(2);
    out = symord::weber_diff(v[0], v[1]);
  } else {
    throw symord::ParseError("unknown op: " + a.op +
                             " (want max, min, neg, abs, sign, conj or weber)");
  }
  std::cout << out.value() << "\n";
  return 0;
}

int run_mobius(const FunctionArgs& a) {
  auto poset_in = open_file(a.poset_path);
  symord::Poset::Ptr p = symord::parse_poset(poset_in);
  auto fn_in = open_file(a.function_path);
  symord::LFunction g = symord::parse_function(fn_in, p, a.scale);
  symord::Rule r = symord::parse_rule(a.rule);

  symord::MobiusResult res = symord::canonical_mobius(g, r);
  if (!res.abs_isotone) std::cerr << "warning: |g| is not isotone\n";
  if (symord::eval_primitive(res.transform, r).values != g.values) {
    std::cout << "no solution\n";
    return 1;
  }
  std::cout << symord::format_function(res.transform);
  return 0;
}

int run_primitive(const FunctionArgs& a) {
  auto poset_in = open_file(a.poset_path);
  symord::Poset::Ptr p = symord::parse_poset(poset_in);
  auto fn_in = open_file(a.function_path);
  symord::LFunction f = symord::parse_function(fn_in, p, a.scale);
  std::cout << symord::format_function(symord::eval_primitive(f, symord::parse_rule(a.rule)));
  return 0;
}

int run_capacity_mobius(const CapacityMobiusArgs& a) {
  auto in = open_file(a.capacity_path);
  symord::Capacity v = symord::parse_capacity(in);
  std::vector<symord::SymLevel> m;
  if (a.evenodd) {
    m = symord::capacity_mobius_evenodd(v);
  } else {
    auto bridge = symord::capacity_as_function(v);
    m = symord::function_as_table(
        symord::canonical_mobius(bridge.second, symord::Rule::Splitting).transform, v.n);
  }
  for (unsigned mask = 0; mask <= v.full(); ++mask)
    std::cout << symord::subset_name(mask, v.n) << ' ' << m[mask].value() << "\n";
  return 0;
}

int run_sugeno(const SugenoArgs& a) {
  auto in = open_file(a.capacity_path);
  symord::Capacity v = symord::parse_capacity(in);
  std::vector<int> raw = symord::parse_int_csv(a.profile);
  if (static_cast<int>(raw.size()) != v.n)
    throw symord::ParseError("profile: wants " + std::to_string(v.n) + " values, got " +
                             std::to_string(raw.size()));
  std::vector<symord::SymLevel> f;
  f.reserve(raw.size());
  for (int x : raw) f.push_back(v.scale.level(x));

  symord::SymLevel out = a.symmetric
                             ? symord::symmetric_sugeno(v, f, symord::parse_rule(a.rule))
                             : symord::sugeno(v, f);
  std::cout << out.value() << "\n";
  return 0;
}

int run_verify(const std::string& suite) {
  std::vector<symord::Check> checks = symord::run_suite(suite);
  long long failed = 0;
  for (const symord::Check& c : checks) {
    if (c.pass) {
      std::cout << "ok " << c.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << c.name << " (" << c.detail << ")\n";
    }
  }
  std::cout << "passed: " << (checks.size() - failed) << " failed: " << failed << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric ordered structures over a finite scale"};
  app.require_subcommand(1);
  int exit_code = 0;

  RuleArgs rule_args;
  auto* rule_cmd = app.add_subcommand("rule", "apply a computation rule to a sequence");
  rule_cmd->add_option("--seq", rule_args.seq, "comma-separated signed levels")->required();
  rule_cmd->add_option("--rule", rule_args.rule,
                       "splitting|weak|strong|optimistic|pessimistic");
  rule_cmd->add_option("--scale", rule_args.scale, "scale size k (default: fit the data)");
  rule_cmd->callback([&] { exit_code = run_rule(rule_args); });

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one scale operation");
  eval_cmd->add_option("--op", eval_args.op, "max|min|neg|abs|sign|conj|weber")->required();
  eval_cmd->add_option("--args", eval_args.args, "comma-separated signed levels")->required();
  eval_cmd->add_option("--scale", eval_args.scale, "scale size k (default: fit the data)");
  eval_cmd->callback([&] { exit_code = run_eval(eval_args); });

  FunctionArgs mobius_args;
  auto* mobius_cmd =
      app.add_subcommand("mobius", "transform of a function on a poset, with verification");
  mobius_cmd->add_option("--poset", mobius_args.poset_path, "poset file")->required();
  mobius_cmd->add_option("--function", mobius_args.function_path, "function file")->required();
  mobius_cmd->add_option("--rule", mobius_args.rule,
                         "splitting|weak|strong|optimistic|pessimistic");
  mobius_cmd->add_option("--scale", mobius_args.scale, "scale size k (default: fit the data)");
  mobius_cmd->callback([&] { exit_code = run_mobius(mobius_args); });

  FunctionArgs primitive_args;
  auto* primitive_cmd =
      app.add_subcommand("primitive", "running primitive of a function on a poset");
  primitive_cmd->add_option("--poset", primitive_args.poset_path, "poset file")->required();
  primitive_cmd->add_option("--function", primitive_args.function_path, "function file")
      ->required();
  primitive_cmd->add_option("--rule", primitive_args.rule,
                            "splitting|weak|strong|optimistic|pessimistic");
  primitive_cmd->add_option("--scale", primitive_args.scale,
                            "scale size k (default: fit the data)");
  primitive_cmd->callback([&] { exit_code = run_primitive(primitive_args); });

  CapacityMobiusArgs capmob_args;
  auto* capmob_cmd = app.add_subcommand("capacity-mobius", "transform of a capacity");
  capmob_cmd->add_option("--capacity", capmob_args.capacity_path, "capacity file")->required();
  capmob_cmd->add_flag("--evenodd", capmob_args.evenodd,
                       "use the alternating form instead of the cover form");
  capmob_cmd->callback([&] { exit_code = run_capacity_mobius(capmob_args); });

  SugenoArgs sugeno_args;
  auto* sugeno_cmd = app.add_subcommand("sugeno", "weighted lattice aggregation of a profile");
  sugeno_cmd->add_option("--capacity", sugeno_args.capacity_path, "capacity file")->required();
  sugeno_cmd->add_option("--profile", sugeno_args.profile, "comma-separated levels, one per criterion")
      ->required();
  sugeno_cmd->add_flag("--symmetric", sugeno_args.symmetric,
                       "symmetric extension, profiles may be negative");
  sugeno_cmd->add_option("--rule", sugeno_args.rule,
                         "splitting|weak|strong|optimistic|pessimistic");
  sugeno_cmd->callback([&] { exit_code = run_sugeno(sugeno_args); });

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
  verify_cmd->add_option("--suite", suite, "algebra|rules|mobius|capacity|all");
  verify_cmd->callback([&] { exit_code = run_verify(suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
