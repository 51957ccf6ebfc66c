#include "gw/cli/expr.hpp"

#include <cctype>
#include <optional>

#include "gw/brst.hpp"
#include "gw/ghosts.hpp"
#include "gw/vertex.hpp"

namespace gw::cli {

bool operator==(const Atom& a, const Atom& b) {
  return a.tag == b.tag && a.kind == b.kind && a.flavor == b.flavor && a.order == b.order &&
         a.lambda == b.lambda && a.args == b.args;
}
bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.atom == b.atom; }
bool operator==(const Expr& a, const Expr& b) { return a.terms == b.terms; }

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance();
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      t.kind = Token::Kind::ident;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        t.text += text[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      t.kind = Token::Kind::integer;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        t.text += text[i];
        advance();
      }
    } else if (std::string_view("+-/()[],").find(ch) != std::string_view::npos) {
      t.kind = Token::Kind::symbol;
      t.text = std::string(1, ch);
      advance();
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", line, column);
    }
    tokens.push_back(std::move(t));
  }
  tokens.push_back(Token{Token::Kind::end, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = parse_expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool is_symbol(const Token& t, char ch) const {
    return t.kind == Token::Kind::symbol && t.text.size() == 1 && t.text[0] == ch;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column);
  }
  void expect(char ch) {
    if (!is_symbol(peek(), ch)) fail(std::string("expected '") + ch + "'");
    next();
  }

  Expr parse_expr() {
    Expr e;
    int sign = 1;
    if (is_symbol(peek(), '-') || is_symbol(peek(), '+')) sign = next().text == "-" ? -1 : 1;
    e.terms.push_back(parse_term(sign));
    while (is_symbol(peek(), '+') || is_symbol(peek(), '-')) {
      sign = next().text == "-" ? -1 : 1;
      e.terms.push_back(parse_term(sign));
    }
    return e;
  }

  bool starts_atom(const Token& t) const {
    return t.kind == Token::Kind::ident || is_symbol(t, '(') ||
           (t.kind == Token::Kind::integer && t.text == "1");
  }

  Term parse_term(int sign) {
    Term t;
    if (is_symbol(peek(), '-') && peek(1).kind != Token::Kind::integer) {
      next();
      sign = -sign;
    }
    if (peek().kind == Token::Kind::integer || is_symbol(peek(), '-')) {
      // A leading number is a coefficient unless it is the bare atom 1.
      const bool bare_one = peek().text == "1" && !is_symbol(peek(1), '/') && !starts_atom(peek(1));
      if (!bare_one) {
        t.coeff = parse_rational();
        if (!starts_atom(peek())) fail("expected a field after the coefficient");
      }
    }
    t.coeff *= sign;
    t.atom = parse_atom();
    return t;
  }

  long parse_int() {
    int sign = 1;
    if (is_symbol(peek(), '-')) {
      next();
      sign = -1;
    }
    if (peek().kind != Token::Kind::integer) fail("expected an integer");
    const Token& t = next();
    try {
      return sign * std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", t.line, t.column);
    }
  }

  Scalar parse_rational() {
    int sign = 1;
    if (is_symbol(peek(), '-')) {
      next();
      sign = -1;
    }
    if (peek().kind != Token::Kind::integer) fail("expected a rational number");
    std::string text = next().text;
    if (is_symbol(peek(), '/')) {
      next();
      if (peek().kind != Token::Kind::integer) fail("expected a positive denominator");
      const Token& den = next();
      if (den.text.find_first_not_of('0') == std::string::npos) {
        throw ParseError("zero denominator", den.line, den.column);
      }
      text += "/" + den.text;
    }
    return sign * parse_scalar(text);
  }

  Atom parse_atom() {
    Atom a;
    const Token& t = peek();
    if (t.kind == Token::Kind::integer && t.text == "1") {
      next();
      a.tag = Atom::Tag::one;
      return a;
    }
    if (is_symbol(t, '(')) {
      next();
      a.tag = Atom::Tag::group;
      a.args.push_back(parse_expr());
      expect(')');
      return a;
    }
    if (t.kind != Token::Kind::ident) fail("expected a field");
    const std::string name = next().text;
    if (name == "b" || name == "c" || name == "beta" || name == "gamma") {
      a.tag = Atom::Tag::generator;
      a.kind = parse_kind(name);
      if (is_symbol(peek(), '[')) {
        next();
        const long f = parse_int();
        if (f < 0) fail("negative flavor");
        a.flavor = static_cast<int>(f);
        expect(']');
      }
    } else if (name == "D") {
      a.tag = Atom::Tag::derivative;
      expect('(');
      const long k = parse_int();
      if (k < 0) fail("negative derivative order");
      a.order = static_cast<int>(k);
      expect(',');
      a.args.push_back(parse_expr());
      expect(')');
    } else if (name == "W") {
      a.tag = Atom::Tag::wick;
      expect('(');
      a.args.push_back(parse_expr());
      expect(',');
      a.args.push_back(parse_expr());
      while (is_symbol(peek(), ',')) {
        next();
        a.args.push_back(parse_expr());
      }
      expect(')');
    } else if (name == "C") {
      a.tag = Atom::Tag::circle;
      expect('(');
      a.order = static_cast<int>(parse_int());
      expect(',');
      a.args.push_back(parse_expr());
      expect(',');
      a.args.push_back(parse_expr());
      expect(')');
    } else if (name == "LS" || name == "LE") {
      a.tag = name == "LS" ? Atom::Tag::virasoro_s : Atom::Tag::virasoro_e;
      expect('(');
      a.lambda = parse_rational();
      expect(')');
    } else if (name == "J") {
      a.tag = Atom::Tag::current;
    } else if (name == "x") {
      a.tag = Atom::Tag::x;
    } else if (name == "y") {
      a.tag = Atom::Tag::y;
    } else {
      throw ParseError("unknown field '" + name + "'", t.line, t.column);
    }
    return a;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string print_atom(const Atom& a) {
  auto joined = [&](std::string head) {
    for (const auto& arg : a.args) head += ", " + print(arg);
    return head + ")";
  };
  switch (a.tag) {
    case Atom::Tag::generator: {
      std::string out(kind_name(a.kind));
      if (a.flavor != 0) out += "[" + std::to_string(a.flavor) + "]";
      return out;
    }
    case Atom::Tag::derivative: return joined("D(" + std::to_string(a.order));
    case Atom::Tag::wick: {
      std::string out = "W(" + print(a.args.front());
      for (std::size_t i = 1; i < a.args.size(); ++i) out += ", " + print(a.args[i]);
      return out + ")";
    }
    case Atom::Tag::circle: return joined("C(" + std::to_string(a.order));
    case Atom::Tag::virasoro_s: return "LS(" + to_string(a.lambda) + ")";
    case Atom::Tag::virasoro_e: return "LE(" + to_string(a.lambda) + ")";
    case Atom::Tag::current: return "J";
    case Atom::Tag::x: return "x";
    case Atom::Tag::y: return "y";
    case Atom::Tag::one: return "1";
    case Atom::Tag::group: return "(" + print(a.args.front()) + ")";
  }
  return "";
}

State eval_atom(const Atom& a, const GradingScheme& scheme) {
  switch (a.tag) {
    case Atom::Tag::generator:
      if (a.flavor >= scheme.flavors) {
        throw EvalError("flavor " + std::to_string(a.flavor) + " not below d = " + std::to_string(scheme.flavors));
      }
      return generator(a.kind, a.flavor, scheme.flavors);
    case Atom::Tag::derivative: return derive(eval(a.args.front(), scheme), a.order);
    case Atom::Tag::wick: {
      std::vector<State> factors;
      for (const auto& arg : a.args) factors.push_back(eval(arg, scheme));
      return iterated_wick(factors);
    }
    case Atom::Tag::circle: return circle(eval(a.args[0], scheme), a.order, eval(a.args[1], scheme));
    case Atom::Tag::virasoro_s: return virasoro_s(a.lambda).state;
    case Atom::Tag::virasoro_e: return virasoro_e(a.lambda).state;
    case Atom::Tag::current: return brst_context(scheme.lambda_s).current;
    case Atom::Tag::x: return class_x();
    case Atom::Tag::y: return class_y();
    case Atom::Tag::one: return State::vacuum();
    case Atom::Tag::group: return eval(a.args.front(), scheme);
  }
  return {};
}

}  // namespace

Expr parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  for (const auto& t : e.terms) {
    const bool negative = sgn(t.coeff) < 0;
    const Scalar mag = abs(t.coeff);
    if (out.empty()) {
      if (negative) out += mag == 1 ? "-" : "-" + to_string(mag) + " ";
      else if (mag != 1) out += to_string(mag) + " ";
    } else {
      out += negative ? " - " : " + ";
      if (mag != 1) out += to_string(mag) + " ";
    }
    out += print_atom(t.atom);
  }
  return out;
}

State eval(const Expr& e, const GradingScheme& scheme) {
  State out;
  for (const auto& t : e.terms) out.add_scaled(eval_atom(t.atom, scheme), t.coeff);
  return out;
}

}  // namespace gw::cli
