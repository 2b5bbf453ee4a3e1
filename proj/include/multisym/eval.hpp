#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "multisym/esym.hpp"
#include "multisym/expr.hpp"
#include "multisym/hbar_series.hpp"

namespace multisym {

struct EvalConfig {
  int n = 2;
  /// Coordinate dimension; inferred from the expression when absent (2 in
  /// phase mode, otherwise the largest y-index used).
  std::optional<int> d;
  /// Series truncation order: hbar degrees >= order are discarded. Unbounded
  /// when absent (the Weyl star product of polynomials is finite).
  std::optional<int> order;
  /// Poisson convention {x,y} = sign; affects poisson brackets only.
  int sign = +1;
  /// Check the symbolic presentation against the direct expansion.
  bool verify = false;
};

struct EvalError : std::runtime_error {
  EvalError(Span s, const std::string& msg)
      : std::runtime_error(std::to_string(s.line) + ":" + std::to_string(s.col) +
                           ": " + msg),
        span(s) {}
  Span span;
};

/// Evaluation result: products of symbols evaluate along two independent
/// routes. The symbolic route applies the enumeration products pairwise and keeps
/// the e_gamma presentation (absent when a node without a symbol form, such
/// as h[...], participates); the expansion route uses plain polynomial and
/// star arithmetic. `oracle_match` compares the two when verification is on.
struct EvalResult {
  int n = 0;
  int d = 0;
  std::optional<int> order;
  int sign = +1;
  VarMode mode = VarMode::None;
  std::optional<ESum> esum;
  HbarSeries expansion;
  std::optional<bool> oracle_match;
};

EvalResult evaluate(const ParseResult& parsed, const EvalConfig& cfg);

std::string render_text(const EvalResult& r, std::string_view input);
std::string render_json(const EvalResult& r, std::string_view input);

}  // namespace multisym
