#include "msym/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace msym {
namespace {

ScalarMatrix make(const Ring& r, unsigned rows, unsigned cols,
                  std::initializer_list<long> vals) {
  ScalarMatrix M(rows, cols, Scalar::zero(r));
  auto it = vals.begin();
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) M(i, j) = Scalar(r, *it++);
  return M;
}

std::vector<Scalar> vec(const Ring& r, std::initializer_list<long> vals) {
  std::vector<Scalar> v;
  for (long x : vals) v.push_back(Scalar(r, x));
  return v;
}

void check_smith(const ScalarMatrix& A) {
  SmithForm f = smith_normal_form(A);
  EXPECT_EQ(f.U * A * f.V, f.S);
  EXPECT_TRUE(det_exact(f.U).is_unit());
  EXPECT_TRUE(det_exact(f.V).is_unit());
  const std::size_t t = std::min(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (i != j) {
        EXPECT_TRUE(f.S(i, j).is_zero());
      }
    }
  for (std::size_t i = 0; i + 1 < t; ++i) {
    EXPECT_FALSE(f.S(i, i).is_negative());
    EXPECT_TRUE(divides(f.S(i, i), f.S(i + 1, i + 1)));
  }
}

TEST(Smith, KnownDiagonal) {
  const Ring z = Ring::integers();
  ScalarMatrix A = make(z, 2, 2, {2, 4, 6, 8});
  SmithForm f = smith_normal_form(A);
  EXPECT_EQ(f.S(0, 0).str(), "2");
  EXPECT_EQ(f.S(1, 1).str(), "4");  // d1*d2 = |det| = 8
  check_smith(A);
}

TEST(Smith, RandomMatricesSatisfyInvariants) {
  const Ring z = Ring::integers();
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const unsigned rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    ScalarMatrix A(rows, cols, Scalar::zero(z));
    for (unsigned i = 0; i < rows; ++i)
      for (unsigned j = 0; j < cols; ++j)
        A(i, j) = Scalar(z, static_cast<long>(rng() % 13) - 6);
    check_smith(A);
  }
}

TEST(Smith, ZeroMatrix) {
  const Ring z = Ring::integers();
  check_smith(make(z, 2, 3, {0, 0, 0, 0, 0, 0}));
}

TEST(Smith, IntegerRingOnly) {
  const Ring q = Ring::rationals();
  EXPECT_THROW(smith_normal_form(make(q, 1, 1, {1})), std::invalid_argument);
}

TEST(DetExact, BareissAndGauss) {
  const Ring z = Ring::integers();
  EXPECT_EQ(det_exact(make(z, 2, 2, {1, 2, 3, 4})).str(), "-2");
  EXPECT_EQ(det_exact(make(z, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})).str(),
            "-3");
  EXPECT_EQ(det_exact(make(z, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})).str(), "0");
  EXPECT_EQ(det_exact(make(z, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})).str(), "-1");
  const Ring f5 = Ring::mod(5);
  EXPECT_EQ(det_exact(make(f5, 2, 2, {2, 3, 1, 4})).str(), "0");  // 8-3 = 5
  EXPECT_EQ(det_exact(make(f5, 2, 2, {2, 3, 1, 3})).str(), "3");
  const Ring q = Ring::rationals();
  ScalarMatrix H(2, 2, Scalar::zero(q));
  H(0, 0) = Scalar::rational(1, 2);
  H(0, 1) = Scalar::rational(1, 3);
  H(1, 0) = Scalar::rational(1, 3);
  H(1, 1) = Scalar::rational(1, 4);
  EXPECT_EQ(det_exact(H).str(), "1/72");
}

TEST(DetExact, MatchesLeibnizOnRandoms) {
  std::mt19937_64 rng(17);
  for (const Ring& ring : {Ring::integers(), Ring::mod(7)}) {
    for (int rep = 0; rep < 20; ++rep) {
      const unsigned n = 1 + rng() % 4;
      ScalarMatrix A(n, n, Scalar::zero(ring));
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          A(i, j) = Scalar(ring, static_cast<long>(rng() % 9) - 4);
      EXPECT_EQ(det_exact(A), det_leibniz(A)) << ring.str();
    }
  }
}

TEST(Solve, UniqueIntegerSolution) {
  const Ring z = Ring::integers();
  // the 2x2 system behind the Newton-identity decomposition golden
  auto x = solve_linear_exact(make(z, 2, 2, {2, 1, 1, 0}), vec(z, {0, 1}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0].str(), "1");
  EXPECT_EQ((*x)[1].str(), "-2");
}

TEST(Solve, IntegerDivisibility) {
  const Ring z = Ring::integers();
  EXPECT_FALSE(solve_linear_exact(make(z, 1, 1, {2}), vec(z, {3})));
  auto x = solve_linear_exact(make(z, 1, 1, {2}), vec(z, {4}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0].str(), "2");
}

TEST(Solve, InconsistentReturnsNullopt) {
  const Ring z = Ring::integers();
  EXPECT_FALSE(solve_linear_exact(make(z, 2, 1, {1, 1}), vec(z, {1, 2})));
  const Ring q = Ring::rationals();
  EXPECT_FALSE(solve_linear_exact(make(q, 2, 2, {1, 1, 1, 1}), vec(q, {1, 2})));
}

TEST(Solve, FreeVariablesAreZero) {
  const Ring q = Ring::rationals();
  auto x = solve_linear_exact(make(q, 1, 2, {1, 1}), vec(q, {3}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0].str(), "3");
  EXPECT_EQ((*x)[1].str(), "0");
  const Ring z = Ring::integers();
  auto y = solve_linear_exact(make(z, 1, 2, {1, 1}), vec(z, {3}));
  ASSERT_TRUE(y.has_value());
  // Smith-form route: particular solution with the free coordinate zeroed
  EXPECT_EQ((*y)[0] + (*y)[1], Scalar(z, 3));
}

TEST(Solve, ModTwoSystem) {
  const Ring f2 = Ring::mod(2);
  auto x = solve_linear_exact(make(f2, 2, 2, {1, 1, 0, 1}), vec(f2, {1, 1}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0].str(), "0");
  EXPECT_EQ((*x)[1].str(), "1");
}

TEST(Solve, RandomRoundTrips) {
  std::mt19937_64 rng(23);
  for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::mod(3)}) {
    for (int rep = 0; rep < 25; ++rep) {
      const unsigned rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      ScalarMatrix A(rows, cols, Scalar::zero(ring));
      for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j)
          A(i, j) = Scalar(ring, static_cast<long>(rng() % 7) - 3);
      // build b = A * known so a solution certainly exists
      std::vector<Scalar> known;
      for (unsigned j = 0; j < cols; ++j)
        known.push_back(Scalar(ring, static_cast<long>(rng() % 5) - 2));
      std::vector<Scalar> b(rows, Scalar::zero(ring));
      for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j)
          b[i] = b[i] + A(i, j) * known[j];
      auto x = solve_linear_exact(A, b);
      ASSERT_TRUE(x.has_value()) << ring.str();
      for (unsigned i = 0; i < rows; ++i) {
        Scalar axi = Scalar::zero(ring);
        for (unsigned j = 0; j < cols; ++j) axi = axi + A(i, j) * (*x)[j];
        EXPECT_EQ(axi, b[i]);
      }
    }
  }
}

TEST(Inverse, FieldAndUnimodular) {
  const Ring q = Ring::rationals();
  ScalarMatrix A = make(q, 2, 2, {1, 2, 3, 4});
  ScalarMatrix I = ScalarMatrix::identity(2, Scalar::zero(q));
  EXPECT_EQ(A * inverse(A), I);
  EXPECT_EQ(inverse(A) * A, I);
  EXPECT_THROW(inverse(make(q, 2, 2, {1, 2, 2, 4})), std::invalid_argument);

  const Ring z = Ring::integers();
  ScalarMatrix U = make(z, 2, 2, {1, 1, 0, 1});
  EXPECT_EQ(inverse(U), make(z, 2, 2, {1, -1, 0, 1}));
  EXPECT_THROW(inverse(make(z, 2, 2, {2, 0, 0, 1})), std::invalid_argument);

  const Ring f7 = Ring::mod(7);
  ScalarMatrix B = make(f7, 3, 3, {1, 2, 3, 0, 1, 4, 5, 6, 0});
  EXPECT_EQ(B * inverse(B), ScalarMatrix::identity(3, Scalar::zero(f7)));
}

}  // namespace
}  // namespace msym
