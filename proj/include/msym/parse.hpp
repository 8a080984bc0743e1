#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "msym/genmat.hpp"
#include "msym/poly.hpp"

namespace msym {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, unsigned line, unsigned column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_, column_;
};

// commutative: atoms are integers, y<k> and x[<i>,<k>].
// word: atoms are integers and z<k>; '*' concatenates, '^' repeats.
enum class ParseMode { commutative, word };

struct AstExpr;

struct AstAtom {
  enum class Kind { integer, variable, paren };
  Kind kind = Kind::integer;
  mpz_class int_value = 0;
  char var_kind = 0;  // 'y', 'x' or 'z'
  unsigned idx1 = 0, idx2 = 0;
  std::shared_ptr<const AstExpr> inner;
};

struct AstFactor {
  AstAtom atom;
  unsigned exponent = 1;
};

struct AstTerm {
  std::vector<AstFactor> factors;
};

struct AstExpr {
  std::vector<std::pair<int, AstTerm>> terms;  // sign is +1 or -1
};

bool ast_equal(const AstExpr& a, const AstExpr& b);

inline bool ast_equal(const AstAtom& a, const AstAtom& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AstAtom::Kind::integer:
      return a.int_value == b.int_value;
    case AstAtom::Kind::variable:
      return a.var_kind == b.var_kind && a.idx1 == b.idx1 && a.idx2 == b.idx2;
    case AstAtom::Kind::paren:
      return ast_equal(*a.inner, *b.inner);
  }
  return false;
}

inline bool ast_equal(const AstFactor& a, const AstFactor& b) {
  return a.exponent == b.exponent && ast_equal(a.atom, b.atom);
}

inline bool ast_equal(const AstTerm& a, const AstTerm& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (!ast_equal(a.factors[i], b.factors[i])) return false;
  return true;
}

inline bool ast_equal(const AstExpr& a, const AstExpr& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].first != b.terms[i].first ||
        !ast_equal(a.terms[i].second, b.terms[i].second))
      return false;
  return true;
}

namespace detail {

struct Token {
  enum class Kind {
    number,
    name,
    plus,
    minus,
    star,
    caret,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    end
  };
  Kind kind;
  std::string text;
  mpz_class value;
  unsigned line, col;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      t.kind = Token::Kind::number;
      t.text = s.substr(i, j - i);
      t.value = mpz_class(t.text, 10);
      col += static_cast<unsigned>(j - i);
      i = j;
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::size_t j = i;
      while (j < s.size() &&
             ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= 'A' && s[j] <= 'Z')))
        ++j;
      t.kind = Token::Kind::name;
      t.text = s.substr(i, j - i);
      col += static_cast<unsigned>(j - i);
      i = j;
    } else {
      switch (c) {
        case '+': t.kind = Token::Kind::plus; break;
        case '-': t.kind = Token::Kind::minus; break;
        case '*': t.kind = Token::Kind::star; break;
        case '^': t.kind = Token::Kind::caret; break;
        case '(': t.kind = Token::Kind::lparen; break;
        case ')': t.kind = Token::Kind::rparen; break;
        case '[': t.kind = Token::Kind::lbracket; break;
        case ']': t.kind = Token::Kind::rbracket; break;
        case ',': t.kind = Token::Kind::comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, col);
      }
      t.text = std::string(1, c);
      ++col;
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::end;
  end.text = "end of input";
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, ParseMode mode, const Context& ctx)
      : toks_(std::move(tokens)), ctx_(ctx), mode_(mode) {}

  AstExpr parse_all() {
    AstExpr e = parse_expr();
    if (peek().kind != Token::Kind::end) fail("unexpected trailing input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + " (found '" + t.text + "')", t.line, t.col);
  }

  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect(Token::Kind k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  AstExpr parse_expr() {
    AstExpr e;
    int sign = 1;
    if (accept(Token::Kind::minus))
      sign = -1;
    else
      accept(Token::Kind::plus);
    e.terms.push_back({sign, parse_term()});
    for (;;) {
      if (accept(Token::Kind::plus))
        sign = 1;
      else if (accept(Token::Kind::minus))
        sign = -1;
      else
        break;
      e.terms.push_back({sign, parse_term()});
    }
    return e;
  }

  AstTerm parse_term() {
    AstTerm t;
    t.factors.push_back(parse_factor());
    while (accept(Token::Kind::star)) t.factors.push_back(parse_factor());
    return t;
  }

  AstFactor parse_factor() {
    AstFactor f;
    f.atom = parse_atom();
    if (accept(Token::Kind::caret)) {
      if (peek().kind != Token::Kind::number) fail("expected exponent");
      const Token& t = advance();
      if (!t.value.fits_uint_p())
        throw ParseError("exponent too large", t.line, t.col);
      f.exponent = static_cast<unsigned>(t.value.get_ui());
    }
    return f;
  }

  unsigned parse_index(const char* what) {
    if (peek().kind != Token::Kind::number)
      fail(std::string("expected ") + what);
    const Token& t = advance();
    if (!t.value.fits_uint_p())
      throw ParseError(std::string(what) + " too large", t.line, t.col);
    return static_cast<unsigned>(t.value.get_ui());
  }

  AstAtom parse_atom() {
    AstAtom a;
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      a.kind = AstAtom::Kind::integer;
      a.int_value = advance().value;
      return a;
    }
    if (t.kind == Token::Kind::lparen) {
      advance();
      auto inner = std::make_shared<AstExpr>(parse_expr());
      expect(Token::Kind::rparen, "')'");
      a.kind = AstAtom::Kind::paren;
      a.inner = std::move(inner);
      return a;
    }
    if (t.kind == Token::Kind::name) {
      const Token name = advance();
      a.kind = AstAtom::Kind::variable;
      if (name.text == "y" || name.text == "z") {
        a.var_kind = name.text[0];
        if (a.var_kind == 'z' && mode_ != ParseMode::word)
          throw ParseError("z variables are only valid in word mode",
                           name.line, name.col);
        if (a.var_kind == 'y' && mode_ != ParseMode::commutative)
          throw ParseError("y variables are not valid in word mode",
                           name.line, name.col);
        a.idx1 = parse_index("variable index");
        if (a.idx1 < 1 || a.idx1 > ctx_.m)
          throw ParseError("index of " + name.text +
                               std::to_string(a.idx1) + " out of range",
                           name.line, name.col);
        return a;
      }
      if (name.text == "x") {
        if (mode_ != ParseMode::commutative)
          throw ParseError("x variables are not valid in word mode",
                           name.line, name.col);
        a.var_kind = 'x';
        expect(Token::Kind::lbracket, "'['");
        a.idx1 = parse_index("row index");
        expect(Token::Kind::comma, "','");
        a.idx2 = parse_index("matrix index");
        expect(Token::Kind::rbracket, "']'");
        if (a.idx1 < 1 || a.idx1 > ctx_.n || a.idx2 < 1 || a.idx2 > ctx_.m)
          throw ParseError("index of x[" + std::to_string(a.idx1) + "," +
                               std::to_string(a.idx2) + "] out of range",
                           name.line, name.col);
        return a;
      }
      throw ParseError("unknown name '" + name.text + "'", name.line,
                       name.col);
    }
    fail("expected integer, variable or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Context ctx_;
  ParseMode mode_;
};

}  // namespace detail

inline AstExpr parse(const std::string& text, ParseMode mode,
                     const Context& ctx) {
  return detail::Parser(detail::tokenize(text), mode, ctx).parse_all();
}

inline std::string render(const AstExpr& e);

inline std::string render(const AstAtom& a) {
  switch (a.kind) {
    case AstAtom::Kind::integer:
      return a.int_value.get_str();
    case AstAtom::Kind::variable:
      if (a.var_kind == 'x')
        return "x[" + std::to_string(a.idx1) + "," + std::to_string(a.idx2) +
               "]";
      return std::string(1, a.var_kind) + std::to_string(a.idx1);
    case AstAtom::Kind::paren:
      return "(" + render(*a.inner) + ")";
  }
  throw InternalError("render: bad atom kind");
}

inline std::string render(const AstTerm& t) {
  std::string s;
  for (const AstFactor& f : t.factors) {
    if (!s.empty()) s += "*";
    s += render(f.atom);
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

inline std::string render(const AstExpr& e) {
  std::string s;
  for (const auto& [sign, term] : e.terms) {
    if (s.empty())
      s = (sign < 0 ? "-" : "") + render(term);
    else
      s += (sign < 0 ? " - " : " + ") + render(term);
  }
  return s;
}

inline Polynomial to_polynomial(const AstExpr& e, const Context& ctx);

inline Polynomial to_polynomial(const AstAtom& a, const Context& ctx) {
  switch (a.kind) {
    case AstAtom::Kind::integer:
      return Polynomial::constant(ctx, Scalar(ctx.ring, a.int_value));
    case AstAtom::Kind::variable:
      if (a.var_kind == 'y')
        return Polynomial::variable(ctx, VarId::y(a.idx1));
      if (a.var_kind == 'x')
        return Polynomial::variable(ctx, VarId::x(a.idx1, a.idx2));
      throw std::invalid_argument("to_polynomial: z variable in polynomial");
    case AstAtom::Kind::paren:
      return to_polynomial(*a.inner, ctx);
  }
  throw InternalError("to_polynomial: bad atom kind");
}

inline Polynomial to_polynomial(const AstExpr& e, const Context& ctx) {
  Polynomial r = Polynomial::zero(ctx);
  for (const auto& [sign, term] : e.terms) {
    Polynomial p = Polynomial::one(ctx);
    for (const AstFactor& f : term.factors)
      p *= to_polynomial(f.atom, ctx).pow(f.exponent);
    r = sign > 0 ? r + p : r - p;
  }
  return r;
}

inline FreeElement to_free_element(const AstExpr& e, const Context& ctx);

inline FreeElement to_free_element(const AstAtom& a, const Context& ctx) {
  switch (a.kind) {
    case AstAtom::Kind::integer:
      return FreeElement::constant(ctx, Scalar(ctx.ring, a.int_value));
    case AstAtom::Kind::variable:
      if (a.var_kind == 'z') return FreeElement::letter(ctx, a.idx1);
      throw std::invalid_argument("to_free_element: commutative variable");
    case AstAtom::Kind::paren:
      return to_free_element(*a.inner, ctx);
  }
  throw InternalError("to_free_element: bad atom kind");
}

inline FreeElement to_free_element(const AstExpr& e, const Context& ctx) {
  FreeElement r = FreeElement::zero(ctx);
  for (const auto& [sign, term] : e.terms) {
    FreeElement f = FreeElement::one(ctx);
    for (const AstFactor& fac : term.factors)
      f *= to_free_element(fac.atom, ctx).pow(fac.exponent);
    r = sign > 0 ? r + f : r - f;
  }
  return r;
}

inline Polynomial parse_polynomial(const std::string& text,
                                   const Context& ctx) {
  return to_polynomial(parse(text, ParseMode::commutative, ctx), ctx);
}

inline FreeElement parse_word_element(const std::string& text,
                                      const Context& ctx) {
  return to_free_element(parse(text, ParseMode::word, ctx), ctx);
}

}  // namespace msym
