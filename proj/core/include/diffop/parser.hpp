#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diffop/polynomial.hpp"

namespace diffop {

enum class TokenKind { Ident, Integer, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct ExprToken {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  // byte offset of the first character
};

// Whitespace-insensitive lexer over the alphabet {x,y,z,digits,+,-,*,^,(,),/}.
// Throws ParseError on anything else. Adjacency is never multiplication;
// products require an explicit '*'.
std::vector<ExprToken> tokenize(const std::string& input);

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' integer)?
//   base   := ident | integer | integer '/' integer | '(' expr ')'
// with an optional unary minus in front of a term. Exponents are
// non-negative base-10 integers.
Polynomial parse_poly(const std::string& input);

// Deterministic graded-lex rendering with parse_poly(render_poly(p)) == p.
std::string render_poly(const Polynomial& p);

}  // namespace diffop
