#include "diffop/parser.hpp"

#include <cctype>

#include "diffop/errors.hpp"

namespace diffop {

std::vector<ExprToken> tokenize(const std::string& input) {
  std::vector<ExprToken> tokens;
  std::size_t i = 0;
  while (i < input.size()) {
    char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      tokens.push_back({TokenKind::Ident, std::string(1, c), i});
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      tokens.push_back({TokenKind::Integer, input.substr(start, i - start), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '/': kind = TokenKind::Slash; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, std::string(1, c), i});
    ++i;
  }
  tokens.push_back({TokenKind::End, "", input.size()});
  return tokens;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<ExprToken> tokens) : tokens_(std::move(tokens)) {}

  Polynomial run() {
    Polynomial p = expr();
    expect(TokenKind::End, "end of input");
    return p;
  }

 private:
  const ExprToken& peek() const { return tokens_[pos_]; }
  const ExprToken& advance() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(TokenKind kind, const std::string& what) {
    if (!accept(kind))
      throw ParseError(peek().position, "expected " + what);
  }

  Polynomial expr() {
    bool negate = accept(TokenKind::Minus);
    Polynomial p = term();
    if (negate) p = -p;
    for (;;) {
      if (accept(TokenKind::Plus)) {
        p += term();
      } else if (accept(TokenKind::Minus)) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept(TokenKind::Star)) p *= factor();
    return p;
  }

  Polynomial factor() {
    Polynomial p = base();
    if (accept(TokenKind::Caret)) {
      const ExprToken& tok = peek();
      if (tok.kind != TokenKind::Integer)
        throw ParseError(tok.position, "exponent must be a non-negative integer");
      advance();
      long e = std::stol(tok.lexeme);
      Polynomial out{Rational(1)};
      for (long i = 0; i < e; ++i) out *= p;
      return out;
    }
    return p;
  }

  Polynomial base() {
    const ExprToken& tok = peek();
    switch (tok.kind) {
      case TokenKind::Ident: {
        advance();
        Var v = tok.lexeme[0] == 'x' ? Var::X : tok.lexeme[0] == 'y' ? Var::Y : Var::Z;
        return Polynomial::variable(v);
      }
      case TokenKind::Integer: {
        advance();
        Rational value{BigInt(tok.lexeme)};
        if (accept(TokenKind::Slash)) {
          const ExprToken& den = peek();
          if (den.kind != TokenKind::Integer)
            throw ParseError(den.position, "expected integer denominator");
          advance();
          BigInt d{den.lexeme};
          if (d == 0) throw ParseError(den.position, "zero denominator");
          value /= Rational(d);
        }
        return Polynomial{value};
      }
      case TokenKind::LParen: {
        advance();
        Polynomial p = expr();
        expect(TokenKind::RParen, "')'");
        return p;
      }
      default:
        throw ParseError(tok.position, "expected variable, integer, or '('");
    }
  }

  std::vector<ExprToken> tokens_;
  std::size_t pos_ = 0;
};

std::string render_term(const Monomial& m, const Rational& coeff_abs) {
  std::string out;
  if (m.is_one()) return to_string(coeff_abs);
  if (coeff_abs != 1) out = to_string(coeff_abs) + "*";
  bool first = true;
  for (Var v : kVars) {
    int e = m[v];
    if (e == 0) continue;
    if (!first) out += "*";
    first = false;
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

Polynomial parse_poly(const std::string& input) {
  return Parser(tokenize(input)).run();
}

std::string render_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += render_term(m, negative ? Rational(-c) : c);
  }
  return out;
}

}  // namespace diffop
