#include "msym/parse.hpp"

#include <gtest/gtest.h>

namespace msym {
namespace {

const Ring kZ = Ring::integers();

TEST(Parse, SimpleShapes) {
  Context ctx(kZ, 2, 2);
  AstExpr e = parse("y1 + 2*y2^3", ParseMode::commutative, ctx);
  ASSERT_EQ(e.terms.size(), 2u);
  EXPECT_EQ(e.terms[0].first, 1);
  ASSERT_EQ(e.terms[0].second.factors.size(), 1u);
  EXPECT_EQ(e.terms[0].second.factors[0].atom.var_kind, 'y');
  EXPECT_EQ(e.terms[0].second.factors[0].atom.idx1, 1u);
  ASSERT_EQ(e.terms[1].second.factors.size(), 2u);
  EXPECT_EQ(e.terms[1].second.factors[1].exponent, 3u);

  AstExpr neg = parse("-y1 + 2", ParseMode::commutative, ctx);
  EXPECT_EQ(neg.terms[0].first, -1);
  EXPECT_EQ(neg.terms[1].first, 1);
}

TEST(Parse, ErrorPositionsAreOneBased) {
  Context ctx(kZ, 2, 2);
  try {
    parse("y1^^2", ParseMode::commutative, ctx);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
    EXPECT_NE(std::string(e.what()).find("column 4"), std::string::npos);
  }
}

TEST(Parse, BoundsAndModeErrors) {
  Context ctx(kZ, 2, 1);
  EXPECT_THROW(parse("y2", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("x[3,1]", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("x[1,2]", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("z1", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("y1", ParseMode::word, ctx), ParseError);
  EXPECT_THROW(parse("x[1,1]", ParseMode::word, ctx), ParseError);
  EXPECT_THROW(parse("w1", ParseMode::commutative, ctx), ParseError);
  EXPECT_NO_THROW(parse("y1", ParseMode::commutative, ctx));
  EXPECT_NO_THROW(parse("z1", ParseMode::word, ctx));
}

TEST(Parse, SyntaxErrors) {
  Context ctx(kZ, 2, 2);
  EXPECT_THROW(parse("", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("y1 +", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("(y1", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("y1 y2", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("y1 @ y2", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("x[1 1]", ParseMode::commutative, ctx), ParseError);
  EXPECT_THROW(parse("y", ParseMode::commutative, ctx), ParseError);
}

TEST(Parse, WhitespaceInsensitive) {
  Context ctx(kZ, 2, 2);
  AstExpr a = parse("y1+2*y2", ParseMode::commutative, ctx);
  AstExpr b = parse("  y1 \t+ 2 * y2 ", ParseMode::commutative, ctx);
  EXPECT_TRUE(ast_equal(a, b));
  // newlines advance the reported line number
  try {
    parse("y1 +\n @", ParseMode::commutative, ctx);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(Parse, RenderRoundTrip) {
  Context ctx(kZ, 3, 3);
  const char* corpus[] = {
      "y1*y2 + y1",
      "x[1,1]^2 + x[2,1]^2",
      "-y1 + 2",
      "(y1 + y2)^2 - 3",
      "2*y1^2*y3 - 5*y2 + 1",
  };
  for (const char* text : corpus) {
    AstExpr a = parse(text, ParseMode::commutative, ctx);
    AstExpr b = parse(render(a), ParseMode::commutative, ctx);
    EXPECT_TRUE(ast_equal(a, b)) << text;
  }
  const char* words[] = {"z1*z2 - z2*z1", "(z1 + z2)^2", "z3^3 - 1"};
  for (const char* text : words) {
    AstExpr a = parse(text, ParseMode::word, ctx);
    AstExpr b = parse(render(a), ParseMode::word, ctx);
    EXPECT_TRUE(ast_equal(a, b)) << text;
  }
}

TEST(Parse, ToPolynomial) {
  Context ctx(kZ, 2, 2);
  EXPECT_EQ(parse_polynomial("y1*y2 + y1", ctx).str(), "y1*y2 + y1");
  EXPECT_EQ(parse_polynomial("(y1 + y2)^2", ctx).str(),
            "y1^2 + 2*y1*y2 + y2^2");
  EXPECT_EQ(parse_polynomial("x[1,1]^2 + x[2,1]^2", ctx).str(),
            "x[1,1]^2 + x[2,1]^2");
  EXPECT_EQ(parse_polynomial("-y1 + 2", ctx).str(), "-y1 + 2");
  EXPECT_EQ(parse_polynomial("3 - 3", ctx).str(), "0");
  EXPECT_EQ(parse_polynomial("y1^0", ctx).str(), "1");

  const Ring f5 = Ring::mod(5);
  Context c5(f5, 2, 1);
  EXPECT_EQ(parse_polynomial("7*y1", c5).str(), "2*y1");
}

TEST(Parse, ToFreeElement) {
  Context ctx(kZ, 2, 2);
  FreeElement z1 = FreeElement::letter(ctx, 1);
  FreeElement z2 = FreeElement::letter(ctx, 2);
  EXPECT_EQ(parse_word_element("z1*z2 - z2*z1", ctx), z1 * z2 - z2 * z1);
  EXPECT_EQ(parse_word_element("(z1 + z2)^2", ctx),
            z1 * z1 + z1 * z2 + z2 * z1 + z2 * z2);
  EXPECT_EQ(parse_word_element("z1^3", ctx), z1 * z1 * z1);
  EXPECT_EQ(parse_word_element("2", ctx),
            Scalar(kZ, 2) * FreeElement::one(ctx));
}

TEST(Parse, BigIntegerLiteral) {
  Context ctx(kZ, 1, 1);
  const std::string big = "123456789012345678901234567890";
  Polynomial p = parse_polynomial(big, ctx);
  EXPECT_EQ(p.str(), big);
  Polynomial q = parse_polynomial(big + "*y1", ctx);
  EXPECT_EQ(q.str(), big + "*y1");
}

}  // namespace
}  // namespace msym
