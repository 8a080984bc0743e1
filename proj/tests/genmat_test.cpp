#include "msym/genmat.hpp"

#include <gtest/gtest.h>

#include "msym/charpoly.hpp"

namespace msym {
namespace {

const Ring kZ = Ring::integers();

FreeWord w(std::initializer_list<unsigned> ls) {
  FreeWord r;
  r.letters.assign(ls.begin(), ls.end());
  return r;
}

TEST(FreeWord, BasicsAndRendering) {
  EXPECT_EQ(FreeWord().str(), "1");
  EXPECT_TRUE(FreeWord().is_empty());
  FreeWord ab = w({1, 2});
  EXPECT_EQ(ab.length(), 2u);
  EXPECT_EQ(ab.str(), "z1*z2");
  EXPECT_EQ(w({1}).times(w({2, 1})).str(), "z1*z2*z1");
  EXPECT_EQ(ab, w({1, 2}));
  EXPECT_FALSE(ab == w({2, 1}));
}

TEST(FreeWord, DescendingOrder) {
  WordOrderDesc lt;
  EXPECT_TRUE(lt(w({1, 1}), w({2})));      // longer first
  EXPECT_TRUE(lt(w({1, 2}), w({2, 1})));   // same length: lex
  EXPECT_FALSE(lt(w({2}), w({1, 1})));
  EXPECT_FALSE(lt(w({1}), w({1})));
}

TEST(FreeElement, NoncommutativeProduct) {
  Context ctx(kZ, 2, 2);
  FreeElement z1 = FreeElement::letter(ctx, 1);
  FreeElement z2 = FreeElement::letter(ctx, 2);
  EXPECT_NE(z1 * z2, z2 * z1);
  FreeElement comm = z1 * z2 - z2 * z1;
  EXPECT_EQ(comm.str(), "z1*z2 - z2*z1");
  EXPECT_TRUE((comm + z2 * z1 - z1 * z2).is_zero());
  EXPECT_EQ((z1 + z2).pow(2), z1 * z1 + z1 * z2 + z2 * z1 + z2 * z2);
}

TEST(FreeElement, RenderingAndScalars) {
  Context ctx(kZ, 2, 2);
  FreeElement z1 = FreeElement::letter(ctx, 1);
  FreeElement e = Scalar(kZ, 2) * z1 - FreeElement::one(ctx);
  EXPECT_EQ(e.str(), "2*z1 - 1");
  EXPECT_EQ(FreeElement::zero(ctx).str(), "0");
  EXPECT_EQ((Scalar(kZ, 0) * z1).str(), "0");
  EXPECT_THROW(FreeElement::letter(ctx, 3), std::out_of_range);
  EXPECT_THROW(FreeElement::letter(ctx, 0), std::out_of_range);
}

TEST(FreeElement, Abelianize) {
  Context ctx(kZ, 2, 2);
  FreeElement z1 = FreeElement::letter(ctx, 1);
  FreeElement z2 = FreeElement::letter(ctx, 2);
  EXPECT_TRUE((z1 * z2 - z2 * z1).abelianize().is_zero());
  EXPECT_EQ((z1 * z2 + z1).abelianize().str(), "y1*y2 + y1");
  EXPECT_EQ((z1 + z2).pow(2).abelianize().str(), "y1^2 + 2*y1*y2 + y2^2");
}

TEST(GenericMatrices, EntriesAndBounds) {
  Context ctx(kZ, 2, 2);
  PolyMatrix M = generic_matrix(ctx, 1);
  EXPECT_EQ(M(0, 0).str(), "xi[1,1,1]");
  EXPECT_EQ(M(0, 1).str(), "xi[1,1,2]");
  EXPECT_EQ(M(1, 0).str(), "xi[1,2,1]");
  PolyMatrix D = diagonal_generic(ctx, 2);
  EXPECT_EQ(D(0, 0).str(), "x[1,2]");
  EXPECT_EQ(D(1, 1).str(), "x[2,2]");
  EXPECT_TRUE(D(0, 1).is_zero());
  EXPECT_THROW(generic_matrix(ctx, 3), std::out_of_range);
  EXPECT_THROW(diagonal_generic(ctx, 0), std::out_of_range);
  EXPECT_EQ(generic_matrices(ctx).size(), 2u);
  EXPECT_EQ(diagonal_generics(ctx).size(), 2u);
}

TEST(Eval, WordAndElementAtMatrices) {
  Context ctx(kZ, 2, 2);
  ScalarMatrix A(2, 2, Scalar::zero(kZ));
  A(0, 0) = Scalar(kZ, 1);
  A(0, 1) = Scalar(kZ, 1);
  A(1, 1) = Scalar(kZ, 1);  // A = [[1,1],[0,1]]
  ScalarMatrix B(2, 2, Scalar::zero(kZ));
  B(0, 0) = Scalar(kZ, 2);
  B(1, 0) = Scalar(kZ, 1);  // B = [[2,0],[1,0]]
  std::vector<ScalarMatrix> mats = {A, B};

  EXPECT_EQ(eval_word_at_matrices(FreeWord(), mats),
            ScalarMatrix::identity(2, Scalar::zero(kZ)));
  EXPECT_EQ(eval_word_at_matrices(w({1, 2}), mats), A * B);
  EXPECT_EQ(eval_word_at_matrices(w({2, 1}), mats), B * A);

  FreeElement comm = FreeElement::letter(ctx, 1) * FreeElement::letter(ctx, 2) -
                     FreeElement::letter(ctx, 2) * FreeElement::letter(ctx, 1);
  EXPECT_EQ(eval_element_at_matrices(comm, mats), A * B - B * A);

  const std::vector<ScalarMatrix> just_one = {A};
  EXPECT_THROW(eval_element_at_matrices(comm, just_one),
               std::invalid_argument);
}

TEST(Eval, PolynomialAtMatrices) {
  Context ctx(kZ, 2, 2);
  ScalarMatrix A(2, 2, Scalar::zero(kZ));
  A(0, 1) = Scalar(kZ, 1);
  ScalarMatrix B(2, 2, Scalar::zero(kZ));
  B(1, 0) = Scalar(kZ, 3);
  std::vector<ScalarMatrix> mats = {A, B};

  Polynomial p = Polynomial::variable(ctx, VarId::y(1)) *
                     Polynomial::variable(ctx, VarId::y(2)) +
                 Polynomial::constant(ctx, 2);
  ScalarMatrix expect =
      A * B + ScalarMatrix::identity(2, Scalar::zero(kZ)).map([&](const Scalar& s) {
        return Scalar(kZ, 2) * s;
      });
  EXPECT_EQ(eval_poly_at_matrices(p, mats), expect);

  Polynomial bad = Polynomial::variable(ctx, VarId::x(1, 1));
  EXPECT_THROW(eval_poly_at_matrices(bad, mats), std::invalid_argument);
}

TEST(DeltaSpecialize, KillsOffDiagonalKeepsDiagonal) {
  Context ctx(kZ, 2, 1);
  Polynomial d = Polynomial::variable(ctx, VarId::xi(1, 1, 1)) *
                 Polynomial::variable(ctx, VarId::xi(1, 2, 2));
  EXPECT_EQ(delta_specialize(d).str(), "x[1,1]*x[2,1]");
  Polynomial off = Polynomial::variable(ctx, VarId::xi(1, 1, 2)) *
                   Polynomial::variable(ctx, VarId::xi(1, 2, 1));
  EXPECT_TRUE(delta_specialize(off).is_zero());
  // x and y variables pass through unchanged
  Polynomial keep = Polynomial::variable(ctx, VarId::x(1, 1)) +
                    Polynomial::variable(ctx, VarId::y(1));
  EXPECT_EQ(delta_specialize(keep), keep);
}

TEST(DeltaSpecialize, IsARingHomomorphism) {
  Context ctx(kZ, 2, 2);
  PolyMatrix A = generic_matrix(ctx, 1);
  PolyMatrix B = generic_matrix(ctx, 2);
  EXPECT_EQ(delta_specialize(A), diagonal_generic(ctx, 1));
  EXPECT_EQ(delta_specialize(A * B),
            delta_specialize(A) * delta_specialize(B));
  EXPECT_EQ(delta_specialize(A + B),
            delta_specialize(A) + delta_specialize(B));
}

TEST(DeltaSpecialize, CommutesWithCharPoly) {
  Context ctx(kZ, 2, 1);
  PolyMatrix M = generic_matrix(ctx, 1);
  CharPolyCoeffs<Polynomial> before = charpoly(M);
  // specialize-then-charpoly equals charpoly-then-specialize
  CharPolyCoeffs<Polynomial> after = charpoly(delta_specialize(M));
  ASSERT_EQ(before.size(), after.size());
  for (unsigned k = 1; k <= before.size(); ++k)
    EXPECT_EQ(delta_specialize(before[k]), after[k]);
}

TEST(WordForMonomial, CanonicalAscendingLetters) {
  Monomial m = Monomial::variable(VarId::y(1))
                   .pow(2)
                   .times(Monomial::variable(VarId::y(2)));
  EXPECT_EQ(word_for_monomial(m), w({1, 1, 2}));
  EXPECT_EQ(word_for_monomial(Monomial()), FreeWord());
  EXPECT_THROW(word_for_monomial(Monomial::variable(VarId::x(1, 1))),
               std::invalid_argument);
}

}  // namespace
}  // namespace msym
