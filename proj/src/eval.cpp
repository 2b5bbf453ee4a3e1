#include "multisym/eval.hpp"

#include <sstream>

#include "json.hpp"
#include "multisym/weyl.hpp"

namespace multisym {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Value {
  std::optional<ESum> sym;
  HbarSeries series;
};

template <typename F>
auto guard(Span s, F&& f) {
  try {
    return f();
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& ex) {
    throw EvalError(s, ex.what());
  }
}

class Evaluator {
 public:
  Evaluator(int n, int d, std::optional<int> order, int sign, VarMode mode)
      : n_(n), d_(d), order_(order), mode_(mode), ctx_{n, sign} {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number: {
        ESum sum;
        sum.add(ESymbol{{}, {}, e.number, 0});
        return {sum, HbarSeries(Polynomial::constant(e.number), order_)};
      }
      case Expr::Kind::Hbar: {
        ESum sum;
        sum.add(ESymbol{{}, {}, 1, 1});
        return {sum, HbarSeries::hbar(1, order_)};
      }
      case Expr::Kind::ESym: {
        for (const Polynomial& arg : e.args) {
          if (arg.max_coord_index() > d_)
            throw EvalError(e.span, "argument uses a coordinate beyond d = " +
                                        std::to_string(d_));
        }
        Polynomial expanded =
            guard(e.span, [&] { return expand_vaccarino(e.args, e.index, n_); });
        ESum sum;
        sum.add(ESymbol{e.index, e.args, 1, 0});
        return {sum, HbarSeries(expanded, order_)};
      }
      case Expr::Kind::HSym: {
        if (static_cast<int>(e.index.size()) != d_)
          throw EvalError(e.span, "h-symbol index must have d = " +
                                      std::to_string(d_) + " parts");
        Polynomial expanded =
            guard(e.span, [&] { return expand_homogeneous(e.index, n_, d_); });
        return {std::nullopt, HbarSeries(expanded, order_)};
      }
      case Expr::Kind::PSum: {
        const Polynomial& arg = e.args[0];
        if (arg.terms().size() != 1)
          throw EvalError(e.span, "power sum argument must be a monomial");
        if (arg.max_coord_index() > d_)
          throw EvalError(e.span, "argument uses a coordinate beyond d = " +
                                      std::to_string(d_));
        const Monomial& mono = arg.terms()[0].first;
        const Rational& scale = arg.terms()[0].second;
        Polynomial expanded =
            guard(e.span, [&] { return power_sum(mono, n_) * scale; });
        ESum sum;
        sum.add(ESymbol{{1}, {Polynomial::term(mono, 1)}, scale, 0});
        return {sum, HbarSeries(expanded, order_)};
      }
      case Expr::Kind::Add:
      case Expr::Kind::Sub: {
        Value l = eval(*e.lhs);
        Value r = eval(*e.rhs);
        const bool minus = e.kind == Expr::Kind::Sub;
        Value out;
        out.series = minus ? l.series - r.series : l.series + r.series;
        if (l.sym && r.sym) {
          ESum sum = *l.sym;
          sum.add(minus ? *r.sym * Rational(-1) : *r.sym);
          out.sym = sum;
        }
        return out;
      }
      case Expr::Kind::Mul: {
        Value l = eval(*e.lhs);
        Value r = eval(*e.rhs);
        return multiply(l, r, e.span);
      }
      case Expr::Kind::Star: {
        if (d_ != 2 || mode_ == VarMode::General)
          throw EvalError(e.span,
                          "'@' requires phase mode: d = 2 with variables x and y");
        Value l = eval(*e.lhs);
        Value r = eval(*e.rhs);
        Value out;
        out.series =
            guard(e.span, [&] { return star(l.series, r.series, ctx_, order_); });
        out.sym = star_sym(l.sym, r.sym, e.span);
        return out;
      }
      case Expr::Kind::Pow: {
        Value acc;
        ESum one;
        one.add(ESymbol{{}, {}, 1, 0});
        acc.sym = one;
        acc.series = HbarSeries(Polynomial::constant(1), order_);
        Value base = eval(*e.lhs);
        for (int i = 0; i < e.exponent; ++i) acc = multiply(acc, base, e.span);
        return acc;
      }
    }
    throw EvalError(e.span, "unreachable expression kind");
  }

 private:
  Value multiply(const Value& l, const Value& r, Span s) {
    Value out;
    out.series = l.series * r.series;
    out.sym = mul_sym(l.sym, r.sym, s);
    return out;
  }

  std::optional<ESum> mul_sym(const std::optional<ESum>& A,
                              const std::optional<ESum>& B, Span s) {
    if (!A || !B) return std::nullopt;
    ESum out;
    for (const ESymbol& sa : A->terms()) {
      for (const ESymbol& sb : B->terms()) {
        if (sa.index.empty() || sb.index.empty()) {
          ESymbol merged = sa.index.empty() ? sb : sa;
          const ESymbol& scalar = sa.index.empty() ? sa : sb;
          merged.coeff *= scalar.coeff;
          merged.hbar += scalar.hbar;
          out.add(merged);
          continue;
        }
        ESum prod = guard(s, [&] {
          return classical_product(sa.args, sa.index, sb.args, sb.index, n_);
        });
        out.add((prod * (sa.coeff * sb.coeff)).shifted(sa.hbar + sb.hbar));
      }
    }
    return out;
  }

  std::optional<ESum> star_sym(const std::optional<ESum>& A,
                               const std::optional<ESum>& B, Span s) {
    if (!A || !B) return std::nullopt;
    ESum out;
    for (const ESymbol& sa : A->terms()) {
      for (const ESymbol& sb : B->terms()) {
        if (sa.index.empty() || sb.index.empty()) {
          // Constants are central: star with a scalar is plain scaling.
          ESymbol merged = sa.index.empty() ? sb : sa;
          const ESymbol& scalar = sa.index.empty() ? sa : sb;
          merged.coeff *= scalar.coeff;
          merged.hbar += scalar.hbar;
          out.add(merged);
          continue;
        }
        std::optional<int> cap;
        if (order_) {
          const int c = *order_ - 1 - sa.hbar - sb.hbar;
          if (c < 0) continue;
          cap = c;
        }
        ESum prod = guard(s, [&] {
          return quantum_product(sa.args, sa.index, sb.args, sb.index, ctx_, cap);
        });
        out.add((prod * (sa.coeff * sb.coeff)).shifted(sa.hbar + sb.hbar));
      }
    }
    return out;
  }

  int n_, d_;
  std::optional<int> order_;
  VarMode mode_;
  PhaseContext ctx_;
};

NameStyle style_of(VarMode mode) {
  return mode == VarMode::Phase ? NameStyle::Phase : NameStyle::General;
}

ordered_json rational_json(const Rational& r) {
  std::ostringstream num, den;
  num << numerator(r);
  den << denominator(r);
  return ordered_json{{"num", num.str()}, {"den", den.str()}};
}

ordered_json poly_json(const Polynomial& p, NameStyle style) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json mono = ordered_json::object();
    for (const auto& [v, e] : m.factors()) mono[var_name(v, style)] = e;
    terms.push_back(ordered_json{{"coeff", rational_json(c)}, {"monomial", mono}});
  }
  return terms;
}

}  // namespace

EvalResult evaluate(const ParseResult& parsed, const EvalConfig& cfg) {
  const Span origin = parsed.expr ? parsed.expr->span : Span{1, 1};
  if (cfg.n < 1) throw EvalError(origin, "n must be >= 1");
  int d;
  if (cfg.d) {
    d = *cfg.d;
    if (d < 1) throw EvalError(origin, "d must be >= 1");
    if (parsed.mode == VarMode::Phase && d != 2)
      throw EvalError(origin, "phase variables x, y require d = 2");
    if (parsed.mode == VarMode::General && d < parsed.max_coord)
      throw EvalError(origin, "expression uses y" + std::to_string(parsed.max_coord) +
                                  " but d = " + std::to_string(d));
  } else {
    d = parsed.mode == VarMode::Phase ? 2 : std::max(parsed.max_coord, 1);
  }
  if (cfg.order && *cfg.order < 0) throw EvalError(origin, "order must be >= 0");
  if (cfg.sign != 1 && cfg.sign != -1)
    throw EvalError(origin, "sign must be +1 or -1");

  Evaluator evaluator(cfg.n, d, cfg.order, cfg.sign, parsed.mode);
  Value value = evaluator.eval(*parsed.expr);

  EvalResult out;
  out.n = cfg.n;
  out.d = d;
  out.order = cfg.order;
  out.sign = cfg.sign;
  out.mode = parsed.mode;
  out.expansion = value.series;
  if (value.sym) {
    ESum collected = value.sym->collected();
    if (cfg.order) {
      ESum trimmed;
      for (const ESymbol& s : collected.terms())
        if (s.hbar < *cfg.order) trimmed.add(s);
      collected = trimmed;
    }
    out.esum = collected;
    if (cfg.verify)
      out.oracle_match = (collected.expand(cfg.n).truncated(cfg.order) ==
                          value.series);
  }
  return out;
}

std::string render_text(const EvalResult& r, std::string_view input) {
  const NameStyle style = style_of(r.mode);
  std::ostringstream out;
  out << "input: " << input << '\n';
  out << "n=" << r.n << " d=" << r.d << " order=";
  if (r.order)
    out << *r.order;
  else
    out << "unbounded";
  out << " sign=" << (r.sign > 0 ? "+1" : "-1") << '\n';
  if (r.esum)
    out << "esum: " << r.esum->to_string(style) << '\n';
  else
    out << "esum: (not available for this expression)\n";
  out << "expansion:\n";
  if (r.expansion.is_zero()) {
    out << "  0\n";
  } else {
    for (const auto& [m, p] : r.expansion.coefficients())
      out << "  hbar^" << m << ": " << p.to_string(style) << '\n';
  }
  if (r.oracle_match)
    out << "oracle: " << (*r.oracle_match ? "match" : "MISMATCH") << '\n';
  return out.str();
}

std::string render_json(const EvalResult& r, std::string_view input) {
  const NameStyle style = style_of(r.mode);
  ordered_json doc;
  doc["input"] = std::string(input);
  doc["n"] = r.n;
  doc["d"] = r.d;
  doc["order"] = r.order ? *r.order : -1;
  if (r.esum) {
    ordered_json arr = ordered_json::array();
    for (const ESymbol& s : r.esum->terms()) {
      ordered_json entry;
      entry["coeff"] = rational_json(s.coeff);
      entry["hbar"] = s.hbar;
      entry["index"] = s.index;
      ordered_json args = ordered_json::array();
      for (const Polynomial& arg : s.args) args.push_back(poly_json(arg, style));
      entry["args"] = args;
      arr.push_back(entry);
    }
    doc["esum"] = arr;
  } else {
    doc["esum"] = nullptr;
  }
  ordered_json expansion = ordered_json::array();
  for (const auto& [m, p] : r.expansion.coefficients())
    expansion.push_back(ordered_json{{"hbar", m}, {"terms", poly_json(p, style)}});
  doc["expansion"] = expansion;
  if (r.oracle_match)
    doc["oracle_match"] = *r.oracle_match;
  else
    doc["oracle_match"] = nullptr;
  return doc.dump(2);
}

}  // namespace multisym
