#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msym/matrix.hpp"
#include "msym/scalar.hpp"

namespace msym {

using ScalarMatrix = DenseMatrix<Scalar>;

namespace detail {

inline void require_ring(const ScalarMatrix& A, const Ring& ring,
                         const char* who) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j).ring() != ring)
        throw std::invalid_argument(std::string(who) +
                                    ": mixed-ring matrix entries");
}

}  // namespace detail

// U * A * V = S with U, V unimodular over the integers and S diagonal with
// non-negative entries satisfying S(i,i) | S(i+1,i+1).
struct SmithForm {
  ScalarMatrix U, S, V;
};

inline SmithForm smith_normal_form(ScalarMatrix A) {
  const Ring ring = A(0, 0).ring();
  if (ring.kind() != Ring::Kind::integers)
    throw std::invalid_argument("smith_normal_form: integer matrices only");
  detail::require_ring(A, ring, "smith_normal_form");

  const std::size_t rows = A.rows(), cols = A.cols();
  const Scalar zero = Scalar::zero(ring);
  ScalarMatrix U = ScalarMatrix::identity(rows, zero);
  ScalarMatrix V = ScalarMatrix::identity(cols, zero);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(A(a, j), A(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(U(a, j), U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(A(i, a), A(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(V(i, a), V(i, b));
  };
  // row a -= q * row b; column a -= q * column b
  auto add_row = [&](std::size_t a, std::size_t b, const Scalar& q) {
    for (std::size_t j = 0; j < cols; ++j) A(a, j) = A(a, j) - q * A(b, j);
    for (std::size_t j = 0; j < rows; ++j) U(a, j) = U(a, j) - q * U(b, j);
  };
  auto add_col = [&](std::size_t a, std::size_t b, const Scalar& q) {
    for (std::size_t i = 0; i < rows; ++i) A(i, a) = A(i, a) - q * A(i, b);
    for (std::size_t i = 0; i < cols; ++i) V(i, a) = V(i, a) - q * V(i, b);
  };
  auto negate_row = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) A(a, j) = -A(a, j);
    for (std::size_t j = 0; j < rows; ++j) U(a, j) = -U(a, j);
  };
  // Floor-division quotient so remainders land in [0, |b|).
  auto fquot = [&](const Scalar& a, const Scalar& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.numerator().get_mpz_t(),
               b.numerator().get_mpz_t());
    return Scalar(ring, q);
  };

  const std::size_t t_max = rows < cols ? rows : cols;
  for (std::size_t t = 0; t < t_max; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (A(i, j).is_zero()) continue;
        if (!found || A(i, j).abs().value() < A(pi, pj).abs().value()) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (A(i, t).is_zero()) continue;
        add_row(i, t, fquot(A(i, t), A(t, t)));
        if (!A(i, t).is_zero()) {
          swap_rows(t, i);  // remainder is strictly smaller; recurse on it
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (A(t, j).is_zero()) continue;
        add_col(j, t, fquot(A(t, j), A(t, t)));
        if (!A(t, j).is_zero()) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide every trailing entry.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (!divides(A(t, t), A(i, j))) {
            add_col(t, j, -Scalar::one(ring));  // fold column j into pivot col
            fixed = false;
          }
      if (fixed) break;
    }
    if (A(t, t).is_negative()) {
      negate_row(t);
      // keep the cleared column consistent (entries below are zero anyway)
    }
  }
  return SmithForm{std::move(U), std::move(A), std::move(V)};
}

// Determinant of a square matrix: Bareiss fraction-free elimination over
// the integers, plain Gaussian elimination over a field.
inline Scalar det_exact(ScalarMatrix A) {
  A.require_square("det_exact");
  const Ring ring = A(0, 0).ring();
  detail::require_ring(A, ring, "det_exact");
  const std::size_t n = A.rows();
  int sign = 1;

  if (ring.kind() == Ring::Kind::integers) {
    Scalar prev = Scalar::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (A(k, k).is_zero()) {
        std::size_t p = k + 1;
        while (p < n && A(p, k).is_zero()) ++p;
        if (p == n) return Scalar::zero(ring);
        for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          A(i, j) = div_exact(A(k, k) * A(i, j) - A(i, k) * A(k, j), prev);
      prev = A(k, k);
    }
    Scalar d = A(n - 1, n - 1);
    return sign > 0 ? d : -d;
  }

  Scalar det = Scalar::one(ring);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && A(p, k).is_zero()) ++p;
    if (p == n) return Scalar::zero(ring);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      sign = -sign;
    }
    det = det * A(k, k);
    const Scalar inv = A(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (A(i, k).is_zero()) continue;
      const Scalar f = A(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) A(i, j) = A(i, j) - f * A(k, j);
    }
  }
  return sign > 0 ? det : -det;
}

// One exact solution of A x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero, so results are deterministic. Over the
// integers a solution is only reported when one exists with integer entries
// (via the Smith form); over a field plain Gauss-Jordan applies.
inline std::optional<std::vector<Scalar>> solve_linear_exact(
    const ScalarMatrix& A, const std::vector<Scalar>& b) {
  if (b.size() != A.rows())
    throw std::invalid_argument("solve_linear_exact: rhs size mismatch");
  const Ring ring = A(0, 0).ring();
  detail::require_ring(A, ring, "solve_linear_exact");
  for (const Scalar& s : b)
    if (s.ring() != ring)
      throw std::invalid_argument("solve_linear_exact: mixed-ring rhs");
  const std::size_t rows = A.rows(), cols = A.cols();
  const Scalar zero = Scalar::zero(ring);

  if (ring.kind() == Ring::Kind::integers) {
    SmithForm snf = smith_normal_form(A);
    std::vector<Scalar> c(rows, zero);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j)
        c[i] = c[i] + snf.U(i, j) * b[j];
    std::vector<Scalar> y(cols, zero);
    for (std::size_t i = 0; i < rows; ++i) {
      const Scalar d = i < cols ? snf.S(i, i) : zero;
      if (d.is_zero()) {
        if (!c[i].is_zero()) return std::nullopt;
      } else {
        if (!divides(d, c[i])) return std::nullopt;
        y[i] = div_exact(c[i], d);
      }
    }
    std::vector<Scalar> x(cols, zero);
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        x[i] = x[i] + snf.V(i, j) * y[j];
    return x;
  }

  // Field case: Gauss-Jordan on the augmented matrix.
  ScalarMatrix M(rows, cols + 1, zero);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = A(i, j);
    M(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && M(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t j = col; j <= cols; ++j) std::swap(M(row, j), M(p, j));
    const Scalar inv = M(row, col).inverse();
    for (std::size_t j = col; j <= cols; ++j) M(row, j) = M(row, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || M(i, col).is_zero()) continue;
      const Scalar f = M(i, col);
      for (std::size_t j = col; j <= cols; ++j)
        M(i, j) = M(i, j) - f * M(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (!M(i, cols).is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols, zero);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    x[pivot_col[i]] = M(i, cols);
  return x;
}

// Exact inverse. Over a field: Gauss-Jordan. Over the integers the matrix
// must be unimodular (determinant a unit); computed via the rationals and
// checked for integrality.
inline ScalarMatrix inverse(const ScalarMatrix& A) {
  A.require_square("inverse");
  const Ring ring = A(0, 0).ring();
  detail::require_ring(A, ring, "inverse");
  const std::size_t n = A.rows();

  if (ring.kind() == Ring::Kind::integers) {
    const Ring rat = Ring::rationals();
    ScalarMatrix Aq = A.map([&](const Scalar& s) { return convert(s, rat); });
    ScalarMatrix Iq = inverse(Aq);
    return Iq.map([&](const Scalar& s) {
      if (s.denominator() != 1)
        throw std::invalid_argument("inverse: integer matrix not unimodular");
      return Scalar(ring, s.numerator());
    });
  }

  ScalarMatrix M(n, 2 * n, Scalar::zero(ring));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
    M(i, n + i) = Scalar::one(ring);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && M(p, col).is_zero()) ++p;
    if (p == n) throw std::invalid_argument("inverse: singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(M(col, j), M(p, j));
    const Scalar inv = M(col, col).inverse();
    for (std::size_t j = 0; j < 2 * n; ++j) M(col, j) = M(col, j) * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || M(i, col).is_zero()) continue;
      const Scalar f = M(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j)
        M(i, j) = M(i, j) - f * M(col, j);
    }
  }
  ScalarMatrix R(n, n, Scalar::zero(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, n + j);
  return R;
}

}  // namespace msym
