#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multisym/polynomial.hpp"

namespace multisym {

struct Span {
  int line = 1;
  int col = 1;
};

/// Which variable spelling an expression uses: indexed abstract variables
/// y1..yd (General) or the two phase coordinates x, y (Phase). Mixing both in
/// one expression is rejected at parse time.
enum class VarMode { None, General, Phase };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax: symbols, hbar, rational literals and the four operators.
/// Star ("@") is the quantum product, "*" the classical one; expressions may
/// not mix the two in one term without parentheses. "^" binds tightest.
struct Expr {
  enum class Kind { ESym, HSym, PSum, Hbar, Number, Add, Sub, Mul, Star, Pow };

  Kind kind;
  Span span;

  std::vector<int> index;        // ESym, HSym
  std::vector<Polynomial> args;  // ESym arguments, PSum argument (single)
  Rational number;               // Number (nonnegative by the grammar)
  ExprPtr lhs, rhs;              // binary nodes and Pow base
  int exponent = 0;              // Pow
};

struct ParseError : std::runtime_error {
  ParseError(Span s, const std::string& msg)
      : std::runtime_error(std::to_string(s.line) + ":" + std::to_string(s.col) +
                           ": " + msg),
        span(s) {}
  Span span;
};

struct ParseResult {
  ExprPtr expr;
  VarMode mode = VarMode::None;
  /// Largest abstract coordinate index used (2 in phase mode).
  int max_coord = 0;
};

ParseResult parse(std::string_view src);

/// Standalone polynomial in the argument sublanguage ("y1*y2 + 3", or
/// "x^2*y" in phase mode). mode/max_coord report the spelling encountered.
Polynomial parse_polynomial(std::string_view src, VarMode& mode, int& max_coord);

/// Canonical reparseable rendering; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e, NameStyle style = NameStyle::General);

/// Structural equality ignoring source spans.
bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace multisym
