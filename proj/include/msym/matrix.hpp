#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace msym {

// Dense square-or-rectangular matrix over any exact ring element type T.
// T must provide +, *, unary -, ==, and same-ring prototypes zero()/one().
template <class T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("DenseMatrix: empty dimension");
  }

  static DenseMatrix identity(std::size_t n, const T& sample) {
    DenseMatrix m(n, n, sample.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = sample.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    a.check_same_shape(b);
    DenseMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    a.check_same_shape(b);
    DenseMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }
  DenseMatrix operator-() const {
    DenseMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("DenseMatrix: size mismatch in product");
    DenseMatrix r(a.rows_, b.cols_, a.e_[0].zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }

  DenseMatrix pow(unsigned e) const {
    require_square("pow");
    DenseMatrix r = identity(rows_, e_[0]);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  T trace() const {
    require_square("trace");
    T s = e_[0].zero();
    for (std::size_t i = 0; i < rows_; ++i) s = s + (*this)(i, i);
    return s;
  }

  bool is_upper_triangular() const {
    require_square("is_upper_triangular");
    for (std::size_t i = 1; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  DenseMatrix diagonal_part() const {
    require_square("diagonal_part");
    DenseMatrix r(rows_, cols_, e_[0].zero());
    for (std::size_t i = 0; i < rows_; ++i) r(i, i) = (*this)(i, i);
    return r;
  }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(e_[0]));
    DenseMatrix<U> r(rows_, cols_, f(e_[0]));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  void require_square(const char* who) const {
    if (!is_square())
      throw std::invalid_argument(std::string(who) + ": matrix not square");
  }

 private:
  void check_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("DenseMatrix: size mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> e_;
};

// Samuelson-Berkowitz characteristic polynomial. Division-free, so valid
// over any commutative ring, including characteristic p.
//
// Returns the monic coefficient vector p of length n+1 with p[0] = 1 and
// det(t*I - M) = sum_k p[k] t^(n-k).
template <class T>
std::vector<T> charpoly_berkowitz(const DenseMatrix<T>& M) {
  M.require_square("charpoly_berkowitz");
  const std::size_t n = M.rows();
  const T zero = M(0, 0).zero();
  const T one = M(0, 0).one();

  std::vector<T> p = {one, -M(0, 0)};
  for (std::size_t r = 2; r <= n; ++r) {
    // Principal r x r block; the Toeplitz column couples it to the
    // (r-1) x (r-1) block via the moments row * B^k * col.
    std::vector<T> toep;
    toep.reserve(r + 1);
    toep.push_back(one);
    toep.push_back(-M(r - 1, r - 1));
    std::vector<T> v(r - 1, zero);
    for (std::size_t i = 0; i + 1 < r; ++i) v[i] = M(i, r - 1);
    for (std::size_t k = 0; k + 1 < r; ++k) {
      if (k > 0) {
        std::vector<T> w(r - 1, zero);
        for (std::size_t i = 0; i + 1 < r; ++i)
          for (std::size_t j = 0; j + 1 < r; ++j)
            w[i] = w[i] + M(i, j) * v[j];
        v = std::move(w);
      }
      T s = zero;
      for (std::size_t j = 0; j + 1 < r; ++j) s = s + M(r - 1, j) * v[j];
      toep.push_back(-s);
    }
    std::vector<T> next(r + 1, zero);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j)
        next[i] = next[i] + toep[i - j] * p[j];
    p = std::move(next);
  }
  return p;
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

inline constexpr std::size_t kLeibnizLimit = 5;

// Leibniz expansion over all permutations. Exponential; capped at 5x5.
template <class T>
T det_leibniz(const DenseMatrix<T>& M) {
  M.require_square("det_leibniz");
  const std::size_t n = M.rows();
  if (n > kLeibnizLimit)
    throw std::invalid_argument("det_leibniz: matrix larger than " +
                                std::to_string(kLeibnizLimit) + "x" +
                                std::to_string(kLeibnizLimit));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T det = M(0, 0).zero();
  do {
    T prod = M(0, 0).one();
    for (std::size_t i = 0; i < n; ++i) prod = prod * M(i, perm[i]);
    det = detail::permutation_sign(perm) > 0 ? det + prod : det - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Independent oracle for charpoly_berkowitz: expand det(t*I - M) by the
// Leibniz rule, treating each entry as a degree <= 1 polynomial in t.
// Same monic-vector convention as charpoly_berkowitz. Capped at 5x5.
template <class T>
std::vector<T> charpoly_leibniz(const DenseMatrix<T>& M) {
  M.require_square("charpoly_leibniz");
  const std::size_t n = M.rows();
  if (n > kLeibnizLimit)
    throw std::invalid_argument("charpoly_leibniz: matrix larger than 5x5");
  const T zero = M(0, 0).zero();
  const T one = M(0, 0).one();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<T> det(n + 1, zero);  // det[j] = coefficient of t^j
  do {
    std::vector<T> prod = {one};
    for (std::size_t i = 0; i < n; ++i) {
      // entry (i, perm[i]) of t*I - M as [constant, t-coefficient]
      const T c0 = -M(i, perm[i]);
      const bool diag = i == perm[i];
      std::vector<T> next(prod.size() + 1, zero);
      for (std::size_t d = 0; d < prod.size(); ++d) {
        next[d] = next[d] + prod[d] * c0;
        if (diag) next[d + 1] = next[d + 1] + prod[d];
      }
      prod = std::move(next);
    }
    const int sign = detail::permutation_sign(perm);
    for (std::size_t d = 0; d < prod.size(); ++d)
      det[d] = sign > 0 ? det[d] + prod[d] : det[d] - prod[d];
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<T> p(n + 1, zero);
  for (std::size_t k = 0; k <= n; ++k) p[k] = det[n - k];
  return p;
}

// Coefficients of prod_i (t - r_i) as a monic vector [1, -e1, +e2, ...].
template <class T>
std::vector<T> monic_from_roots(const std::vector<T>& roots) {
  if (roots.empty()) throw std::invalid_argument("monic_from_roots: no roots");
  const T zero = roots[0].zero();
  std::vector<T> acc = {roots[0].one()};
  for (const T& r : roots) {
    std::vector<T> next(acc.size() + 1, zero);
    for (std::size_t d = 0; d < acc.size(); ++d) {
      next[d + 1] = next[d + 1] + acc[d];    // * t
      next[d] = next[d] - acc[d] * r;        // * (-r)
    }
    acc = std::move(next);
  }
  // acc[j] = coefficient of t^j; flip to leading-first.
  std::vector<T> p(acc.rbegin(), acc.rend());
  return p;
}

}  // namespace msym
