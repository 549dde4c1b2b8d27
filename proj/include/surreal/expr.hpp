#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surreal/arithmetic.hpp"
#include "surreal/dyadic.hpp"
#include "surreal/form.hpp"

namespace surreal {

class SyntaxError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

enum class CompareOp { Lt, Le, Eq, Ne, Ge, Gt };

const char* toString(CompareOp op);

/// Calculator syntax tree. Options of a form literal live in `left`/`right`,
/// operands of every other kind in `args`.
struct Ast {
  enum class Kind { DyadicLiteral, FormLiteral, Var, Neg, Add, Sub, Mul, Compare, Let };

  Kind kind = Kind::DyadicLiteral;
  Dyadic literal;
  std::string name;
  CompareOp op = CompareOp::Eq;
  std::vector<Ast> left;
  std::vector<Ast> right;
  std::vector<Ast> args;

  friend bool operator==(const Ast&, const Ast&) = default;

  static Ast dyadic(Dyadic d);
  static Ast form(std::vector<Ast> left, std::vector<Ast> right);
  static Ast var(std::string name);
  static Ast neg(Ast a);
  static Ast binary(Kind k, Ast a, Ast b);
  static Ast compare(CompareOp op, Ast a, Ast b);
  static Ast let(std::string name, Ast value);
};

/// Parses one statement:
///
///   stmt    := IDENT '=' expr | expr
///   expr    := add (REL add)?
///   add     := mul (('+'|'-') mul)*
///   mul     := unary ('*' unary)*
///   unary   := '-' unary | atom
///   atom    := NUMBER | IDENT | '(' expr ')' | '<' opts '|' opts '>'
///   opts    := (add (',' add)*)?
///   NUMBER  := digits | digits '/' digits   (denominator a power of two)
///
/// REL is one of < <= = != >= > (also ≤ ≠ ≥); ⟨ ⟩ may replace < > around forms.
Ast parse(std::string_view input);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string render(const Ast& a);

bool isIdentifier(std::string_view s);
bool isReserved(std::string_view s);

using Value = std::variant<const CanonicalNode*, bool>;
using Env = std::map<std::string, Value, std::less<>>;

/// Evaluates against an engine; Let updates env (last write wins).
Value eval(const Ast& a, Engine& engine, Env& env);

/// "1/2 = ⟨0|1⟩ (gen 2)" for surreals, "true"/"false" for booleans.
std::string format(const Value& v);

}  // namespace surreal
