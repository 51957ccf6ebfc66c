#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gw/grading.hpp"
#include "gw/mode.hpp"
#include "gw/state.hpp"

namespace gw::cli {

// Field expressions:
//   expr     := term (('+'|'-') term)*
//   term     := rational? atom
//   atom     := ('b'|'c'|'beta'|'gamma') ('[' int ']')?
//             | 'D' '(' int ',' expr ')'  | 'W' '(' expr (',' expr)+ ')'
//             | 'C' '(' int ',' expr ',' expr ')'
//             | 'LS' '(' rational ')' | 'LE' '(' rational ')'
//             | 'J' | 'x' | 'y' | '1' | '(' expr ')'
//   rational := int ('/' posint)?

struct Expr;

struct Atom {
  enum class Tag { generator, derivative, wick, circle, virasoro_s, virasoro_e, current, x, y, one, group };

  Tag tag = Tag::one;
  GenKind kind = GenKind::b;  // generator
  int flavor = 0;             // generator
  int order = 0;              // derivative order, circle index
  Scalar lambda;              // LS / LE parameter
  std::vector<Expr> args;

  friend bool operator==(const Atom&, const Atom&);
};

struct Term {
  Scalar coeff = 1;
  Atom atom;

  friend bool operator==(const Term&, const Term&);
};

struct Expr {
  std::vector<Term> terms;

  friend bool operator==(const Expr&, const Expr&);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError with a 1-based line/column.
Expr parse(std::string_view text);

/// Text that parses back to the same Expr.
std::string print(const Expr& e);

/// Evaluates atoms with the ghost / Weil constructors and combinators with
/// the vertex engine. J uses the scheme's lambda_s. Throws EvalError.
State eval(const Expr& e, const GradingScheme& scheme);

}  // namespace gw::cli
