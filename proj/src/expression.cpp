#include "fglforge/expression.hpp"

#include <cctype>

namespace fglforge {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, column};
    std::size_t len = 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
      t.kind = Tok::Int;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_'))
        ++len;
      t.kind = Tok::Ident;
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        default:
          throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " +
                                                  std::to_string(column) + ": unexpected '" +
                                                  std::string(1, c) + "'");
      }
    }
    t.text = std::string(src.substr(i, len));
    out.push_back(std::move(t));
    advance(len);
  }
  out.push_back(Token{Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, RingPtr ring) : tokens_(tokenize(src)), ring_(std::move(ring)) {}

  Element parse() {
    Element e = expr();
    if (peek().kind != Tok::End) fail(ErrorCode::SyntaxError, peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] static void fail(ErrorCode code, const Token& at, const std::string& msg) {
    throw Error(code, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + msg);
  }

  Element expr() {
    Element acc = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        acc = acc + term();
      } else if (accept(Tok::Minus)) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = factor();
    while (accept(Tok::Star)) acc = acc * factor();
    return acc;
  }

  Element factor() {
    if (accept(Tok::Minus)) return -factor();
    const Token& start = peek();
    Element base = atom();
    if (!accept(Tok::Caret)) return base;
    const long e = exponent();
    try {
      return pow(base, e);
    } catch (const Error& err) {
      fail(err.code(), start, err.what());
    }
  }

  long exponent() {
    const Token& at = peek();
    bool paren = accept(Tok::LParen);
    bool negative = false;
    while (accept(Tok::Minus)) negative = !negative;
    if (peek().kind != Tok::Int) {
      if (peek().kind == Tok::Ident) fail(ErrorCode::NonIntegerExponent, peek(), "exponent must be an integer");
      fail(ErrorCode::SyntaxError, peek(), "expected an exponent");
    }
    mpq_class value(mpz_class(take().text));
    if (accept(Tok::Slash)) {
      if (peek().kind != Tok::Int) fail(ErrorCode::SyntaxError, peek(), "expected a denominator");
      const mpz_class den(take().text);
      if (den == 0) fail(ErrorCode::SyntaxError, at, "zero denominator");
      value /= den;
      value.canonicalize();
    }
    if (paren && !accept(Tok::RParen)) fail(ErrorCode::SyntaxError, peek(), "expected ')'");
    if (value.get_den() != 1) fail(ErrorCode::NonIntegerExponent, at, "exponent " + value.get_str());
    if (!value.get_num().fits_slong_p()) fail(ErrorCode::InvalidArgument, at, "exponent too large");
    const long e = value.get_num().get_si();
    return negative ? -e : e;
  }

  Element atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Int: {
        mpq_class value(mpz_class(t.text));
        if (accept(Tok::Slash)) {
          if (peek().kind != Tok::Int) fail(ErrorCode::SyntaxError, peek(), "expected a denominator");
          const mpz_class den(take().text);
          if (den == 0) fail(ErrorCode::SyntaxError, t, "zero denominator");
          value /= den;
          value.canonicalize();
        }
        try {
          return Element::rational(ring_, value);
        } catch (const Error& err) {
          fail(err.code(), t, err.what());
        }
      }
      case Tok::Ident:
        try {
          return Element::variable(ring_, t.text);
        } catch (const Error& err) {
          fail(err.code(), t, err.what());
        }
      case Tok::LParen: {
        Element e = expr();
        if (!accept(Tok::RParen)) fail(ErrorCode::SyntaxError, peek(), "expected ')'");
        return e;
      }
      case Tok::End: fail(ErrorCode::SyntaxError, t, "unexpected end of input");
      default: fail(ErrorCode::SyntaxError, t, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

Element parse_expression(std::string_view src, const RingPtr& ring) { return Parser(src, ring).parse(); }

}  // namespace fglforge
