#pragma once

#include <vector>

#include "msym/linalg.hpp"
#include "msym/matrix.hpp"
#include "msym/poly.hpp"

namespace msym {

using PolyMatrix = DenseMatrix<Polynomial>;

// Characteristic-polynomial coefficients, stored with signs removed:
//   det(t*I - M) = t^n + sum_{k=1..n} (-1)^k c[k-1] t^(n-k),
// so c[0] is the trace and c[n-1] the determinant.
template <class T>
struct CharPolyCoeffs {
  std::vector<T> c;

  bool operator==(const CharPolyCoeffs&) const = default;

  std::size_t size() const { return c.size(); }
  const T& operator[](std::size_t k) const { return c.at(k - 1); }  // 1-based
};

// Strip the alternating signs off a monic coefficient vector [1, p1, ...].
template <class T>
CharPolyCoeffs<T> coeffs_from_monic(const std::vector<T>& p) {
  CharPolyCoeffs<T> r;
  r.c.reserve(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k)
    r.c.push_back(k % 2 == 1 ? -p[k] : p[k]);
  return r;
}

// Division-free characteristic polynomial, valid over any commutative ring.
template <class T>
CharPolyCoeffs<T> charpoly(const DenseMatrix<T>& M) {
  return coeffs_from_monic(charpoly_berkowitz(M));
}

// Exponential-time oracles used to cross-check charpoly (<= 5x5).
template <class T>
T det_naive(const DenseMatrix<T>& M) {
  return det_leibniz(M);
}

template <class T>
CharPolyCoeffs<T> charpoly_naive(const DenseMatrix<T>& M) {
  return coeffs_from_monic(charpoly_leibniz(M));
}

// Trace-based recursion; the divisions by 1..n restrict it to the rationals.
inline CharPolyCoeffs<Scalar> faddeev_leverrier(const ScalarMatrix& M) {
  M.require_square("faddeev_leverrier");
  const Ring ring = M(0, 0).ring();
  if (ring.kind() != Ring::Kind::rationals)
    throw std::invalid_argument("faddeev_leverrier: rational matrices only");
  const std::size_t n = M.rows();

  CharPolyCoeffs<Scalar> r;
  ScalarMatrix B = ScalarMatrix::identity(n, Scalar::zero(ring));
  Scalar ck = Scalar::zero(ring);
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix A = M * B;
    ck = div_exact(A.trace(), Scalar(ring, static_cast<long>(k)));
    // det(t*I - M) = t^n - ck_1 t^(n-1) - ... ; normalize the signs.
    r.c.push_back(k % 2 == 1 ? ck : -ck);
    B = A;
    for (std::size_t i = 0; i < n; ++i) B(i, i) -= ck;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!B(i, j).is_zero())
        throw InternalError("faddeev_leverrier: nonzero final remainder");
  return r;
}

}  // namespace msym
