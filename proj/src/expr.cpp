#include "multisym/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace multisym {

namespace {

struct Token {
  enum class Kind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    At,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End
  };
  Kind kind;
  Span span;
  std::string text;  // Ident
  Int value;         // Number
};

const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::Number: return "number";
    case Token::Kind::Ident: return "identifier";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::At: return "'@'";
    case Token::Kind::Caret: return "'^'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::LBracket: return "'['";
    case Token::Kind::RBracket: return "']'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto bump = [&](size_t count) {
    for (size_t t = 0; t < count; ++t, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    const Span here{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      Token t{Token::Kind::Number, here, std::string(src.substr(i, j - i)), 0};
      t.value = Int(t.text);
      bump(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Ident, here, std::string(src.substr(i, j - i)), 0});
      bump(j - i);
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '@': kind = Token::Kind::At; break;
      case '^': kind = Token::Kind::Caret; break;
      case '/': kind = Token::Kind::Slash; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      case '[': kind = Token::Kind::LBracket; break;
      case ']': kind = Token::Kind::RBracket; break;
      case ',': kind = Token::Kind::Comma; break;
      default:
        throw ParseError(here, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, here, std::string(1, c), 0});
    bump(1);
  }
  out.push_back({Token::Kind::End, {line, col}, "", 0});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ParseResult parse_expression() {
    ExprPtr e = expr();
    expect(Token::Kind::End, "operator or end of input");
    return {e, mode_, max_coord_};
  }

  Polynomial parse_poly_only() {
    Polynomial p = poly();
    expect(Token::Kind::End, "operator or end of input");
    return p;
  }

  VarMode mode() const { return mode_; }
  int max_coord() const { return max_coord_; }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at(Token::Kind k) const { return peek().kind == k; }

  const Token& expect(Token::Kind k, const std::string& what) {
    if (!at(k))
      throw ParseError(peek().span, "expected " + what + ", got " +
                                        token_name(peek().kind));
    return advance();
  }

  int expect_nat(const std::string& what) {
    const Token& t = expect(Token::Kind::Number, what);
    if (t.value > 1000000) throw ParseError(t.span, what + " is out of range");
    return static_cast<int>(t.value);
  }

  static ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      const Token& op = advance();
      ExprPtr rhs = term();
      Expr node;
      node.kind = op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      node.span = op.span;
      node.lhs = lhs;
      node.rhs = rhs;
      lhs = make(std::move(node));
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    std::optional<Token::Kind> seen;
    while (at(Token::Kind::Star) || at(Token::Kind::At)) {
      const Token& op = advance();
      if (seen && *seen != op.kind)
        throw ParseError(op.span,
                         "cannot mix '*' and '@' in one term without parentheses");
      seen = op.kind;
      ExprPtr rhs = factor();
      Expr node;
      node.kind = op.kind == Token::Kind::Star ? Expr::Kind::Mul : Expr::Kind::Star;
      node.span = op.span;
      node.lhs = lhs;
      node.rhs = rhs;
      lhs = make(std::move(node));
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (at(Token::Kind::Caret)) {
      const Token& op = advance();
      Expr node;
      node.kind = Expr::Kind::Pow;
      node.span = op.span;
      node.lhs = base;
      node.exponent = expect_nat("exponent");
      return make(std::move(node));
    }
    return base;
  }

  ExprPtr atom() {
    if (at(Token::Kind::LParen)) {
      advance();
      ExprPtr inner = expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (at(Token::Kind::Number)) {
      const Token& t = advance();
      Expr node;
      node.kind = Expr::Kind::Number;
      node.span = t.span;
      Int num = t.value;
      Int den = 1;
      if (at(Token::Kind::Slash)) {
        advance();
        const Token& d = expect(Token::Kind::Number, "denominator");
        den = d.value;
        if (den == 0) throw ParseError(d.span, "zero denominator");
      }
      node.number = Rational(num, den);
      return make(std::move(node));
    }
    if (at(Token::Kind::Ident)) {
      const Token& t = advance();
      if (t.text == "hbar") {
        Expr node;
        node.kind = Expr::Kind::Hbar;
        node.span = t.span;
        return make(std::move(node));
      }
      if (t.text == "e") {
        Expr node;
        node.kind = Expr::Kind::ESym;
        node.span = t.span;
        node.index = index_list();
        expect(Token::Kind::LParen, "'(' (e-symbols take argument polynomials)");
        node.args.push_back(poly());
        while (at(Token::Kind::Comma)) {
          advance();
          node.args.push_back(poly());
        }
        expect(Token::Kind::RParen, "')' or ','");
        if (node.args.size() != node.index.size())
          throw ParseError(node.span,
                           "e-symbol arity mismatch: " +
                               std::to_string(node.index.size()) + " index parts vs " +
                               std::to_string(node.args.size()) + " arguments");
        return make(std::move(node));
      }
      if (t.text == "h") {
        Expr node;
        node.kind = Expr::Kind::HSym;
        node.span = t.span;
        node.index = index_list();
        return make(std::move(node));
      }
      if (t.text == "p") {
        Expr node;
        node.kind = Expr::Kind::PSum;
        node.span = t.span;
        expect(Token::Kind::LParen, "'('");
        node.args.push_back(poly());
        expect(Token::Kind::RParen, "')'");
        return make(std::move(node));
      }
      throw ParseError(t.span, "unexpected identifier '" + t.text +
                                   "'; expected e[...], h[...], p(...), hbar, a "
                                   "number, or '('");
    }
    throw ParseError(peek().span,
                     std::string("expected e[...], h[...], p(...), hbar, a number, "
                                 "or '(', got ") +
                         token_name(peek().kind));
  }

  std::vector<int> index_list() {
    expect(Token::Kind::LBracket, "'['");
    std::vector<int> out;
    out.push_back(expect_nat("index part"));
    while (at(Token::Kind::Comma)) {
      advance();
      out.push_back(expect_nat("index part"));
    }
    expect(Token::Kind::RBracket, "']' or ','");
    return out;
  }

  // ---- polynomial sublanguage --------------------------------------------

  Polynomial poly() {
    bool negate = false;
    if (at(Token::Kind::Minus)) {
      advance();
      negate = true;
    }
    Polynomial acc = poly_term();
    if (negate) acc = -acc;
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      const bool minus = advance().kind == Token::Kind::Minus;
      Polynomial t = poly_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial poly_term() {
    Polynomial acc = poly_factor();
    while (at(Token::Kind::Star)) {
      advance();
      acc *= poly_factor();
    }
    return acc;
  }

  Polynomial poly_factor() {
    Polynomial base = poly_atom();
    if (at(Token::Kind::Caret)) {
      advance();
      return base.pow(expect_nat("exponent"));
    }
    return base;
  }

  Polynomial poly_atom() {
    if (at(Token::Kind::LParen)) {
      advance();
      Polynomial inner = poly();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (at(Token::Kind::Number)) {
      const Token& t = advance();
      return Polynomial::constant(Rational(t.value));
    }
    if (at(Token::Kind::Ident)) {
      const Token& t = advance();
      return variable_for(t);
    }
    throw ParseError(peek().span,
                     std::string("expected a variable, number, or '(', got ") +
                         token_name(peek().kind));
  }

  Polynomial variable_for(const Token& t) {
    if (t.text == "x" || t.text == "y") {
      note_mode(VarMode::Phase, t.span);
      max_coord_ = std::max(max_coord_, 2);
      return Polynomial::variable(VarId::abstract(t.text == "x" ? 1 : 2));
    }
    if (t.text.size() >= 2 && t.text[0] == 'y' &&
        std::isdigit(static_cast<unsigned char>(t.text[1]))) {
      if (t.text.size() > 7) throw ParseError(t.span, "coordinate index too large");
      const int j = std::stoi(t.text.substr(1));
      if (j < 1) throw ParseError(t.span, "coordinate index must be >= 1");
      note_mode(VarMode::General, t.span);
      max_coord_ = std::max(max_coord_, j);
      return Polynomial::variable(VarId::abstract(j));
    }
    throw ParseError(t.span, "unknown variable '" + t.text +
                                 "'; use y1..yd, or x and y in phase mode");
  }

  void note_mode(VarMode m, Span where) {
    if (mode_ == VarMode::None) {
      mode_ = m;
    } else if (mode_ != m) {
      throw ParseError(where,
                       "cannot mix phase variables (x, y) with indexed variables "
                       "(y1, y2, ...) in one expression");
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  VarMode mode_ = VarMode::None;
  int max_coord_ = 0;
};

int level_of(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Star: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
  }
}

bool is_term_op(Expr::Kind k) {
  return k == Expr::Kind::Mul || k == Expr::Kind::Star;
}

void print_rec(const Expr& e, NameStyle style, std::ostringstream& out);

void print_child(const Expr& child, const Expr& parent, bool right, NameStyle style,
                 std::ostringstream& out) {
  const int pl = level_of(parent.kind);
  const int cl = level_of(child.kind);
  bool parens = cl < pl;
  // Right operands at the same level need parentheses to keep the shape, and
  // '*' / '@' may not meet in one term.
  if (!parens && cl == pl && right) parens = true;
  // '^' applies to atoms only, so a Pow base that is itself compound (Pow
  // included) must be wrapped.
  if (!parens && parent.kind == Expr::Kind::Pow && cl < 4) parens = true;
  if (!parens && is_term_op(parent.kind) && is_term_op(child.kind) &&
      parent.kind != child.kind)
    parens = true;
  if (parens) out << '(';
  print_rec(child, style, out);
  if (parens) out << ')';
}

void print_rec(const Expr& e, NameStyle style, std::ostringstream& out) {
  switch (e.kind) {
    case Expr::Kind::Number: {
      out << e.number;
      return;
    }
    case Expr::Kind::Hbar:
      out << "hbar";
      return;
    case Expr::Kind::ESym: {
      out << "e[";
      for (size_t i = 0; i < e.index.size(); ++i) {
        if (i) out << ',';
        out << e.index[i];
      }
      out << "](";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << ", ";
        out << e.args[i].to_string(style);
      }
      out << ')';
      return;
    }
    case Expr::Kind::HSym: {
      out << "h[";
      for (size_t i = 0; i < e.index.size(); ++i) {
        if (i) out << ',';
        out << e.index[i];
      }
      out << ']';
      return;
    }
    case Expr::Kind::PSum:
      out << "p(" << e.args[0].to_string(style) << ')';
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Star: {
      print_child(*e.lhs, e, false, style, out);
      switch (e.kind) {
        case Expr::Kind::Add: out << " + "; break;
        case Expr::Kind::Sub: out << " - "; break;
        case Expr::Kind::Mul: out << " * "; break;
        default: out << " @ "; break;
      }
      print_child(*e.rhs, e, true, style, out);
      return;
    }
    case Expr::Kind::Pow: {
      print_child(*e.lhs, e, false, style, out);
      out << '^' << e.exponent;
      return;
    }
  }
}

}  // namespace

ParseResult parse(std::string_view src) {
  Parser parser(src);
  return parser.parse_expression();
}

Polynomial parse_polynomial(std::string_view src, VarMode& mode, int& max_coord) {
  Parser parser(src);
  Polynomial p = parser.parse_poly_only();
  mode = parser.mode();
  max_coord = parser.max_coord();
  return p;
}

std::string print(const Expr& e, NameStyle style) {
  std::ostringstream out;
  print_rec(e, style, out);
  return out.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.index != b.index || a.args != b.args || a.number != b.number ||
      a.exponent != b.exponent)
    return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) ||
      static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
    return false;
  if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

}  // namespace multisym
