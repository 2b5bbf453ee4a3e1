#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multisym/basis.hpp"
#include "multisym/eval.hpp"
#include "multisym/expr.hpp"
#include "multisym/margins.hpp"

namespace {

using namespace multisym;

struct EvalArgs {
  std::string expr;
  int n = 2;
  int d = 0;  // 0 = infer
  int order = -1;
  int sign = 1;
  std::string format = "text";
  bool verify = false;
};

EvalConfig to_config(const EvalArgs& args) {
  EvalConfig cfg;
  cfg.n = args.n;
  if (args.d > 0) cfg.d = args.d;
  if (args.order >= 0) cfg.order = args.order;
  cfg.sign = args.sign;
  cfg.verify = args.verify;
  return cfg;
}

int run_eval(const EvalArgs& args) {
  ParseResult parsed = parse(args.expr);
  EvalResult result = evaluate(parsed, to_config(args));
  if (args.format == "json")
    std::cout << render_json(result, args.expr) << '\n';
  else
    std::cout << render_text(result, args.expr);
  if (result.oracle_match && !*result.oracle_match) return 2;
  return 0;
}

int run_enum(const std::string& kind, const std::vector<int>& alpha,
             const std::vector<int>& beta, int n, std::optional<int> m,
             std::optional<int> kmax) {
  if (kind == "L") {
    for (const MarginMatrix& g : enumerate_L(alpha, beta, n))
      std::cout << g.to_string() << '\n';
    return 0;
  }
  if (!m) {
    std::cerr << "error: enum Q requires --m\n";
    return 1;
  }
  const int k_bound = kmax ? *kmax : *m;
  for (const CubicalMatrix& g : enumerate_Q(alpha, beta, n, *m, k_bound))
    std::cout << g.to_string() << '\n';
  return 0;
}

int run_decompose(const EvalArgs& args) {
  ParseResult parsed = parse(args.expr);
  EvalResult result = evaluate(parsed, to_config(args));
  const NameStyle style =
      result.mode == VarMode::Phase ? NameStyle::Phase : NameStyle::General;
  if (result.expansion.is_zero()) {
    std::cout << "0\n";
    return 0;
  }
  for (const auto& [m, p] : result.expansion.coefficients()) {
    std::cout << "hbar^" << m << ":\n";
    for (const auto& [alpha, coeff] : decompose(p, result.n, result.d))
      std::cout << "  " << alpha.to_string(style) << " -> " << coeff << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-symmetric functions: classical and quantum products"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate an expression over e/h/p symbols");
  eval_cmd->add_option("--n", eval_args.n, "Number of points")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--d", eval_args.d, "Coordinate dimension (default: inferred)");
  eval_cmd->add_option("--order", eval_args.order,
                       "Series truncation order (degrees >= order dropped)");
  eval_cmd->add_option("--sign", eval_args.sign, "Poisson sign convention {x,y}")
      ->check(CLI::IsMember({1, -1}));
  eval_cmd->add_option("--format", eval_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_flag("--verify", eval_args.verify,
                     "Cross-check the symbolic result against direct expansion");
  eval_cmd->add_option("expr", eval_args.expr, "Expression")->required();

  std::string enum_kind;
  std::vector<int> alpha, beta;
  int enum_n = 1;
  int enum_m = -1, enum_kmax = -1;
  CLI::App* enum_cmd =
      app.add_subcommand("enum", "Dump margin (L) or cubical (Q) matrices");
  enum_cmd->add_option("kind", enum_kind, "L or Q")
      ->required()
      ->check(CLI::IsMember({"L", "Q"}));
  enum_cmd->add_option("--alpha", alpha, "Row margins, comma separated")
      ->required()
      ->delimiter(',');
  enum_cmd->add_option("--beta", beta, "Column margins, comma separated")
      ->required()
      ->delimiter(',');
  enum_cmd->add_option("--n", enum_n, "Number of points")
      ->required()
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--m", enum_m, "hbar weight (Q only)");
  enum_cmd->add_option("--kmax", enum_kmax, "Largest slice index (Q only, default m)");

  EvalArgs dec_args;
  CLI::App* dec_cmd = app.add_subcommand(
      "decompose", "Coefficients of an invariant expression in the e-basis");
  dec_cmd->add_option("--n", dec_args.n, "Number of points")->check(CLI::PositiveNumber);
  dec_cmd->add_option("--d", dec_args.d, "Coordinate dimension (default: inferred)");
  dec_cmd->add_option("expr", dec_args.expr, "Expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (enum_cmd->parsed())
      return run_enum(enum_kind, alpha, beta, enum_n,
                      enum_m >= 0 ? std::optional<int>(enum_m) : std::nullopt,
                      enum_kmax >= 0 ? std::optional<int>(enum_kmax) : std::nullopt);
    if (dec_cmd->parsed()) return run_decompose(dec_args);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
