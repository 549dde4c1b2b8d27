#include "surreal/expr.hpp"

#include <optional>
#include <stdexcept>

#include "surreal/genealogy.hpp"

namespace surreal {

namespace {

enum class Tok {
  Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, Bar,
  Lt, Le, Eq, Ne, Ge, Gt, FormOpen, FormClose, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based byte column
};

bool isIdentStart(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool isIdentChar(char c) { return isIdentStart(c) || (c >= '0' && c <= '9'); }
bool isDigit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void syntaxError(std::size_t column, const std::string& what) {
  throw SyntaxError("syntax error at column " + std::to_string(column) + ": " + what);
}

std::vector<Token> lex(std::string_view in) {
  // Multi-byte glyphs accepted as alternatives to the ASCII operators.
  static const std::pair<std::string_view, Tok> kGlyphs[] = {
      {"⟨", Tok::FormOpen}, {"⟩", Tok::FormClose}, {"≤", Tok::Le}, {"≥", Tok::Ge}, {"≠", Tok::Ne},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    const std::size_t col = i + 1;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (isDigit(c)) {
      std::size_t j = i;
      while (j < in.size() && isDigit(in[j])) ++j;
      out.push_back({Tok::Number, std::string(in.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (isIdentStart(c)) {
      std::size_t j = i;
      while (j < in.size() && isIdentChar(in[j])) ++j;
      out.push_back({Tok::Ident, std::string(in.substr(i, j - i)), col});
      i = j;
      continue;
    }
    auto two = in.substr(i, 2);
    if (two == "<=") { out.push_back({Tok::Le, "<=", col}); i += 2; continue; }
    if (two == ">=") { out.push_back({Tok::Ge, ">=", col}); i += 2; continue; }
    if (two == "!=") { out.push_back({Tok::Ne, "!=", col}); i += 2; continue; }
    bool glyph = false;
    for (const auto& [text, kind] : kGlyphs) {
      if (in.substr(i, text.size()) == text) {
        out.push_back({kind, std::string(text), col});
        i += text.size();
        glyph = true;
        break;
      }
    }
    if (glyph) continue;
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '|': kind = Tok::Bar; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      case '=': kind = Tok::Eq; break;
      default: syntaxError(col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", in.size() + 1});
  return out;
}

std::optional<CompareOp> relational(Tok t) {
  switch (t) {
    case Tok::Lt: return CompareOp::Lt;
    case Tok::Le: return CompareOp::Le;
    case Tok::Eq: return CompareOp::Eq;
    case Tok::Ne: return CompareOp::Ne;
    case Tok::Ge: return CompareOp::Ge;
    case Tok::Gt: return CompareOp::Gt;
    default: return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Ast statement() {
    Ast result;
    if (peek().kind == Tok::Ident && toks_[pos_ + 1].kind == Tok::Eq) {
      const Token id = next();
      if (isReserved(id.text)) syntaxError(id.column, "'" + id.text + "' is reserved");
      next();
      result = Ast::let(id.text, expr());
    } else {
      result = expr();
    }
    if (peek().kind == Tok::Slash) throw SyntaxError("unknown operator /");
    if (peek().kind != Tok::End) syntaxError(peek().column, "unexpected '" + peek().text + "'");
    return result;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      if (peek().kind == Tok::Slash) throw SyntaxError("unknown operator /");
      syntaxError(peek().column, std::string("expected ") + what);
    }
    ++pos_;
  }

  Ast expr() {
    Ast lhs = additive();
    if (auto op = relational(peek().kind)) {
      next();
      Ast rhs = additive();
      if (relational(peek().kind)) syntaxError(peek().column, "comparisons do not chain");
      return Ast::compare(*op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Ast additive() {
    Ast lhs = multiplicative();
    for (;;) {
      if (peek().kind == Tok::Plus) {
        next();
        lhs = Ast::binary(Ast::Kind::Add, std::move(lhs), multiplicative());
      } else if (peek().kind == Tok::Minus) {
        next();
        lhs = Ast::binary(Ast::Kind::Sub, std::move(lhs), multiplicative());
      } else {
        return lhs;
      }
    }
  }

  Ast multiplicative() {
    Ast lhs = unary();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        lhs = Ast::binary(Ast::Kind::Mul, std::move(lhs), unary());
      } else if (peek().kind == Tok::Slash) {
        throw SyntaxError("unknown operator /");
      } else {
        return lhs;
      }
    }
  }

  Ast unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return Ast::neg(unary());
    }
    return atom();
  }

  Ast atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number: return number();
      case Tok::Ident:
        next();
        if (isReserved(t.text)) syntaxError(t.column, "'" + t.text + "' is reserved");
        return Ast::var(t.text);
      case Tok::LParen: {
        next();
        Ast inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Lt:
      case Tok::FormOpen: return formLiteral();
      case Tok::Slash: throw SyntaxError("unknown operator /");
      case Tok::End: syntaxError(t.column, "unexpected end of input");
      default: syntaxError(t.column, "expected expression, found '" + t.text + "'");
    }
  }

  Ast number() {
    const Token num = next();
    if (peek().kind != Tok::Slash) return Ast::dyadic(Dyadic::parse(num.text));
    next();
    if (peek().kind != Tok::Number) throw SyntaxError("unknown operator /");
    const Token den = next();
    try {
      return Ast::dyadic(Dyadic::parse(num.text + "/" + den.text));
    } catch (const std::invalid_argument&) {
      throw SyntaxError("denominator must be a power of two");
    }
  }

  std::vector<Ast> options(bool rightSide) {
    std::vector<Ast> opts;
    auto closes = [&] {
      const Tok k = peek().kind;
      return rightSide ? (k == Tok::Gt || k == Tok::FormClose || k == Tok::Ge) : k == Tok::Bar;
    };
    if (closes()) return opts;
    opts.push_back(additive());
    while (peek().kind == Tok::Comma) {
      next();
      opts.push_back(additive());
    }
    return opts;
  }

  Ast formLiteral() {
    next();  // '<' or '⟨'
    std::vector<Ast> left = options(false);
    expect(Tok::Bar, "'|'");
    std::vector<Ast> right = options(true);
    Token& close = toks_[pos_];
    if (close.kind == Tok::Ge) {
      // "<a|b>=c": the '>' closes the form and the '=' is left for the caller.
      close = {Tok::Eq, "=", close.column + 1};
    } else if (close.kind == Tok::Gt || close.kind == Tok::FormClose) {
      ++pos_;
    } else {
      expect(Tok::Gt, "'>'");
    }
    return Ast::form(std::move(left), std::move(right));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Precedence levels used by render: relational < additive < multiplicative < unary < atom.
int precedence(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Let: return 0;
    case Ast::Kind::Compare: return 1;
    case Ast::Kind::Add:
    case Ast::Kind::Sub: return 2;
    case Ast::Kind::Mul: return 3;
    case Ast::Kind::Neg: return 4;
    default: return 5;
  }
}

std::string renderAt(const Ast& a, int minPrec) {
  std::string s = render(a);
  return precedence(a) < minPrec ? "(" + s + ")" : s;
}

const CanonicalNode* asSurreal(const Value& v) {
  if (const auto* node = std::get_if<const CanonicalNode*>(&v)) return *node;
  throw EvalError("expected a surreal, got a boolean");
}

}  // namespace

const char* toString(CompareOp op) {
  switch (op) {
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Ge: return ">=";
    case CompareOp::Gt: return ">";
  }
  return "?";
}

Ast Ast::dyadic(Dyadic d) {
  Ast a;
  a.kind = Kind::DyadicLiteral;
  a.literal = std::move(d);
  return a;
}

Ast Ast::form(std::vector<Ast> l, std::vector<Ast> r) {
  Ast a;
  a.kind = Kind::FormLiteral;
  a.left = std::move(l);
  a.right = std::move(r);
  return a;
}

Ast Ast::var(std::string n) {
  Ast a;
  a.kind = Kind::Var;
  a.name = std::move(n);
  return a;
}

Ast Ast::neg(Ast x) {
  Ast a;
  a.kind = Kind::Neg;
  a.args.push_back(std::move(x));
  return a;
}

Ast Ast::binary(Kind k, Ast x, Ast y) {
  Ast a;
  a.kind = k;
  a.args.push_back(std::move(x));
  a.args.push_back(std::move(y));
  return a;
}

Ast Ast::compare(CompareOp op, Ast x, Ast y) {
  Ast a = binary(Kind::Compare, std::move(x), std::move(y));
  a.op = op;
  return a;
}

Ast Ast::let(std::string n, Ast value) {
  Ast a;
  a.kind = Kind::Let;
  a.name = std::move(n);
  a.args.push_back(std::move(value));
  return a;
}

bool isIdentifier(std::string_view s) {
  if (s.empty() || !isIdentStart(s.front())) return false;
  for (char c : s)
    if (!isIdentChar(c)) return false;
  return true;
}

bool isReserved(std::string_view s) { return s == "true" || s == "false"; }

Ast parse(std::string_view input) { return Parser(lex(input)).statement(); }

std::string render(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::DyadicLiteral: {
      std::string s = a.literal.toString();
      return a.literal.sign() < 0 ? "(" + s + ")" : s;
    }
    case Ast::Kind::FormLiteral: {
      std::string s = "<";
      for (std::size_t i = 0; i < a.left.size(); ++i) s += (i ? "," : "") + renderAt(a.left[i], 2);
      s += '|';
      for (std::size_t i = 0; i < a.right.size(); ++i) s += (i ? "," : "") + renderAt(a.right[i], 2);
      return s + '>';
    }
    case Ast::Kind::Var: return a.name;
    case Ast::Kind::Neg: return "-" + renderAt(a.args[0], 4);
    case Ast::Kind::Add: return renderAt(a.args[0], 2) + " + " + renderAt(a.args[1], 3);
    case Ast::Kind::Sub: return renderAt(a.args[0], 2) + " - " + renderAt(a.args[1], 3);
    case Ast::Kind::Mul: return renderAt(a.args[0], 3) + " * " + renderAt(a.args[1], 4);
    case Ast::Kind::Compare: {
      // "x = 4" would read back as a binding
      const bool bare = a.op == CompareOp::Eq && a.args[0].kind == Ast::Kind::Var;
      const std::string lhs = bare ? "(" + a.args[0].name + ")" : renderAt(a.args[0], 2);
      return lhs + " " + toString(a.op) + " " + renderAt(a.args[1], 2);
    }
    case Ast::Kind::Let: return a.name + " = " + render(a.args[0]);
  }
  return {};
}

Value eval(const Ast& a, Engine& engine, Env& env) {
  auto surrealOf = [&](const Ast& sub) { return asSurreal(eval(sub, engine, env)); };
  switch (a.kind) {
    case Ast::Kind::DyadicLiteral: return engine.tree().fromDyadic(a.literal);
    case Ast::Kind::FormLiteral: {
      Form f;
      for (const Ast& o : a.left) f.left.push_back(surrealOf(o));
      for (const Ast& o : a.right) f.right.push_back(surrealOf(o));
      if (!engine.order().isNumber(f)) throw EvalError("form is not a number");
      return engine.tree().canonical(f, engine.order());
    }
    case Ast::Kind::Var: {
      auto it = env.find(a.name);
      if (it == env.end()) throw EvalError("unbound variable " + a.name);
      return it->second;
    }
    case Ast::Kind::Neg: return engine.negate(surrealOf(a.args[0]));
    case Ast::Kind::Add: return engine.add(surrealOf(a.args[0]), surrealOf(a.args[1]));
    case Ast::Kind::Sub: return engine.sub(surrealOf(a.args[0]), surrealOf(a.args[1]));
    case Ast::Kind::Mul: return engine.mul(surrealOf(a.args[0]), surrealOf(a.args[1]));
    case Ast::Kind::Compare: {
      const CanonicalNode* x = surrealOf(a.args[0]);
      const CanonicalNode* y = surrealOf(a.args[1]);
      const Ordering c = engine.order().cmp(x, y);
      switch (a.op) {
        case CompareOp::Lt: return c == Ordering::Less;
        case CompareOp::Le: return c != Ordering::Greater;
        case CompareOp::Eq: return c == Ordering::Equal;
        case CompareOp::Ne: return c != Ordering::Equal;
        case CompareOp::Ge: return c != Ordering::Less;
        case CompareOp::Gt: return c == Ordering::Greater;
      }
      return false;
    }
    case Ast::Kind::Let: {
      Value v = eval(a.args[0], engine, env);
      env.insert_or_assign(a.name, v);
      return v;
    }
  }
  throw EvalError("unsupported expression");
}

std::string format(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return describe(std::get<const CanonicalNode*>(v));
}

}  // namespace surreal
