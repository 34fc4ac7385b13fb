#include <gtest/gtest.h>

#include "diffop/errors.hpp"
#include "diffop/parser.hpp"
#include "test_util.hpp"

namespace diffop {
namespace {

TEST(Tokenizer, Examples) {
  auto tokens = tokenize("x^3+y^3");
  ASSERT_EQ(tokens.size(), 8u);  // incl. End
  EXPECT_EQ(tokens[0].kind, TokenKind::Ident);
  EXPECT_EQ(tokens[1].kind, TokenKind::Caret);
  EXPECT_EQ(tokens[2].kind, TokenKind::Integer);
  EXPECT_EQ(tokens[3].kind, TokenKind::Plus);
  EXPECT_EQ(tokens[4].lexeme, "y");

  auto product = tokenize("3*x*y");
  EXPECT_EQ(product[0].kind, TokenKind::Integer);
  EXPECT_EQ(product[1].kind, TokenKind::Star);

  try {
    tokenize("x$y");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Tokenizer, WhitespaceAndPositions) {
  auto tokens = tokenize("  x ^ 12");
  EXPECT_EQ(tokens[0].position, 2u);
  EXPECT_EQ(tokens[2].lexeme, "12");
  EXPECT_EQ(tokens[2].position, 6u);
}

TEST(Parser, Examples) {
  EXPECT_EQ(parse_poly("x^3 + y^3 + z^3"),
            Polynomial({{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}}));
  EXPECT_EQ(parse_poly("x^3*y + y^3*z + z^3*x"),
            Polynomial({{{3, 1, 0}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, 1}}));
  EXPECT_THROW(parse_poly("x^-1"), ParseError);
}

TEST(Parser, GrammarPieces) {
  EXPECT_EQ(parse_poly("-x + 2"), Polynomial({{{1, 0, 0}, -1}, {{0, 0, 0}, 2}}));
  EXPECT_EQ(parse_poly("1/2*x^2*y"), Polynomial(Rational(1, 2), Monomial{2, 1, 0}));
  EXPECT_EQ(parse_poly("(x+y)^2"), parse_poly("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(parse_poly("x^0"), parse_poly("1"));
  EXPECT_EQ(parse_poly("2^3"), parse_poly("8"));
  // No juxtaposition product and no general division.
  EXPECT_THROW(parse_poly("3x"), ParseError);
  EXPECT_THROW(parse_poly("x/2"), ParseError);
  EXPECT_THROW(parse_poly("x*"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("w"), ParseError);
  EXPECT_THROW(parse_poly("1/0"), ParseError);
}

TEST(Parser, RenderExamples) {
  EXPECT_EQ(render_poly(Polynomial()), "0");
  EXPECT_EQ(render_poly(parse_poly("x^3+y^3+z^3")), "x^3 + y^3 + z^3");
  EXPECT_EQ(render_poly(parse_poly("-1/2*x^2*y")), "-1/2*x^2*y");
  EXPECT_EQ(render_poly(parse_poly("z - x*y")), "-x*y + z");
}

TEST(ParserProperty, RoundTrip) {
  testing::RandomPoly gen(31337);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = gen.poly(8, 9);
    EXPECT_EQ(parse_poly(render_poly(p)), p);
  }
}

TEST(ParserProperty, ErrorPositionsUnderCorruption) {
  const std::string valid[] = {"x^3 + y^3 + z^3", "-1/2*x^2*y + (x+z)^2", "3*x*y*z - 7"};
  for (const std::string& input : valid) {
    for (std::size_t i = 0; i < input.size(); ++i) {
      // Corruption by a byte outside the token alphabet reports at or
      // before the corrupted offset.
      std::string bad = input;
      bad[i] = '$';
      try {
        parse_poly(bad);
        FAIL() << "expected ParseError for " << bad;
      } catch (const ParseError& e) {
        EXPECT_LE(e.position(), i) << bad;
      }
    }
  }
}

TEST(ParserProperty, InAlphabetCorruptionEitherParsesOrReportsValidOffset) {
  const std::string input = "x^2*y + 1/3*z^4 - (x+y)*z";
  const std::string alphabet = "xyz0123456789+-*^()/";
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (char c : alphabet) {
      std::string mutated = input;
      mutated[i] = c;
      try {
        parse_poly(mutated);
      } catch (const ParseError& e) {
        EXPECT_LE(e.position(), mutated.size());
      }
    }
  }
}

}  // namespace
}  // namespace diffop
