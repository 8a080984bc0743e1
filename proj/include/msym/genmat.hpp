#pragma once

#include <map>
#include <string>
#include <vector>

#include "msym/charpoly.hpp"
#include "msym/matrix.hpp"
#include "msym/poly.hpp"

namespace msym {

// Word in the noncommuting letters z_1..z_m; empty word is the identity.
struct FreeWord {
  std::vector<unsigned> letters;

  FreeWord() = default;
  explicit FreeWord(std::vector<unsigned> ls) : letters(std::move(ls)) {}

  std::size_t length() const { return letters.size(); }
  bool is_empty() const { return letters.empty(); }

  FreeWord times(const FreeWord& o) const {
    FreeWord r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }

  bool operator==(const FreeWord&) const = default;

  std::string str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (unsigned k : letters) {
      if (!s.empty()) s += "*";
      s += "z" + std::to_string(k);
    }
    return s;
  }
};

// Longer words first; within a length, lexicographically by letter indices.
struct WordOrderDesc {
  bool operator()(const FreeWord& a, const FreeWord& b) const {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() > b.letters.size();
    return a.letters < b.letters;
  }
};

// Element of the free associative algebra on z_1..z_m over the context ring.
class FreeElement {
 public:
  using TermMap = std::map<FreeWord, Scalar, WordOrderDesc>;

  explicit FreeElement(Context ctx) : ctx_(std::move(ctx)) {}

  static FreeElement zero(const Context& ctx) { return FreeElement(ctx); }

  static FreeElement constant(const Context& ctx, const Scalar& c) {
    if (c.ring() != ctx.ring)
      throw std::invalid_argument("FreeElement: constant from foreign ring");
    FreeElement f(ctx);
    f.add_term(FreeWord(), c);
    return f;
  }

  static FreeElement one(const Context& ctx) {
    return constant(ctx, Scalar::one(ctx.ring));
  }

  static FreeElement letter(const Context& ctx, unsigned k) {
    return word(ctx, FreeWord({k}));
  }

  static FreeElement word(const Context& ctx, const FreeWord& w) {
    for (unsigned k : w.letters)
      if (k < 1 || k > ctx.m)
        throw std::out_of_range("FreeElement: letter z" + std::to_string(k) +
                                " out of range");
    FreeElement f(ctx);
    f.add_term(w, Scalar::one(ctx.ring));
    return f;
  }

  const Context& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const FreeElement& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }
  bool operator!=(const FreeElement& o) const { return !(*this == o); }

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    a.check_same_context(b);
    FreeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }

  friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    a.check_same_context(b);
    FreeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
  }

  FreeElement operator-() const {
    FreeElement r(ctx_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    a.check_same_context(b);
    FreeElement r(a.ctx_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_)
        r.add_term(wa.times(wb), ca * cb);
    return r;
  }

  friend FreeElement operator*(const Scalar& c, const FreeElement& f) {
    if (c.ring() != f.ctx_.ring)
      throw std::invalid_argument("FreeElement: scalar from foreign ring");
    FreeElement r(f.ctx_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : f.terms_) r.add_term(w, c * x);
    return r;
  }

  FreeElement& operator+=(const FreeElement& o) { return *this = *this + o; }
  FreeElement& operator-=(const FreeElement& o) { return *this = *this - o; }
  FreeElement& operator*=(const FreeElement& o) { return *this = *this * o; }

  FreeElement pow(unsigned e) const {
    FreeElement r = one(ctx_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Abelianization z_k -> y_k into the commutative polynomial ring.
  Polynomial abelianize() const {
    Polynomial p = Polynomial::zero(ctx_);
    for (const auto& [w, c] : terms_) {
      Monomial m;
      for (unsigned k : w.letters) m = m.times(Monomial::variable(VarId::y(k)));
      p += Polynomial::term(ctx_, m, c);
    }
    return p;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      std::string piece;
      if (w.is_empty())
        piece = c.abs().str();
      else if (c.abs().is_one())
        piece = w.str();
      else
        piece = c.abs().str() + "*" + w.str();
      if (s.empty())
        s = c.is_negative() ? "-" + piece : piece;
      else
        s += (c.is_negative() ? " - " : " + ") + piece;
    }
    return s;
  }

 private:
  void add_term(const FreeWord& w, const Scalar& c) {
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  void check_same_context(const FreeElement& o) const {
    if (!(ctx_ == o.ctx_))
      throw std::invalid_argument("FreeElement: mixed-context operands");
  }

  Context ctx_;
  TermMap terms_;
};

// The k-th generic matrix: entry (i,j) is the indeterminate xi[k,i,j].
inline PolyMatrix generic_matrix(const Context& ctx, unsigned k) {
  if (k < 1 || k > ctx.m)
    throw std::out_of_range("generic_matrix: index out of range");
  PolyMatrix M(ctx.n, ctx.n, Polynomial::zero(ctx));
  for (unsigned i = 1; i <= ctx.n; ++i)
    for (unsigned j = 1; j <= ctx.n; ++j)
      M(i - 1, j - 1) = Polynomial::variable(ctx, VarId::xi(k, i, j));
  return M;
}

// The k-th diagonal generic matrix diag(x[1,k], ..., x[n,k]).
inline PolyMatrix diagonal_generic(const Context& ctx, unsigned k) {
  if (k < 1 || k > ctx.m)
    throw std::out_of_range("diagonal_generic: index out of range");
  PolyMatrix M(ctx.n, ctx.n, Polynomial::zero(ctx));
  for (unsigned i = 1; i <= ctx.n; ++i)
    M(i - 1, i - 1) = Polynomial::variable(ctx, VarId::x(i, k));
  return M;
}

inline std::vector<PolyMatrix> generic_matrices(const Context& ctx) {
  std::vector<PolyMatrix> ms;
  for (unsigned k = 1; k <= ctx.m; ++k) ms.push_back(generic_matrix(ctx, k));
  return ms;
}

inline std::vector<PolyMatrix> diagonal_generics(const Context& ctx) {
  std::vector<PolyMatrix> ms;
  for (unsigned k = 1; k <= ctx.m; ++k) ms.push_back(diagonal_generic(ctx, k));
  return ms;
}

namespace detail {

template <class T>
void check_matrix_tuple(const std::vector<DenseMatrix<T>>& mats, unsigned m,
                        const char* who) {
  if (mats.size() != m)
    throw std::invalid_argument(std::string(who) + ": expected m matrices");
  for (const auto& M : mats) {
    M.require_square(who);
    if (M.rows() != mats[0].rows())
      throw std::invalid_argument(std::string(who) + ": size mismatch");
  }
}

}  // namespace detail

// Substitute the matrices M_1..M_m for the letters z_1..z_m.
template <class T>
DenseMatrix<T> eval_word_at_matrices(const FreeWord& w,
                                     const std::vector<DenseMatrix<T>>& mats) {
  if (mats.empty())
    throw std::invalid_argument("eval_word_at_matrices: no matrices");
  DenseMatrix<T> r =
      DenseMatrix<T>::identity(mats[0].rows(), mats[0](0, 0));
  for (unsigned k : w.letters) {
    if (k < 1 || k > mats.size())
      throw std::out_of_range("eval_word_at_matrices: letter out of range");
    r = r * mats[k - 1];
  }
  return r;
}

template <class T>
DenseMatrix<T> eval_element_at_matrices(
    const FreeElement& f, const std::vector<DenseMatrix<T>>& mats) {
  detail::check_matrix_tuple(mats, f.context().m, "eval_element_at_matrices");
  const std::size_t n = mats[0].rows();
  DenseMatrix<T> r(n, n, mats[0](0, 0).zero());
  for (const auto& [w, c] : f.terms()) {
    DenseMatrix<T> part = eval_word_at_matrices(w, mats);
    r = r + part.map([&](const T& t) { return c * t; });
  }
  return r;
}

// Substitute M_k for y_k in a commutative polynomial. Factors of a monomial
// are multiplied in increasing k, so the result is well defined (and order
// independent whenever the matrices commute).
template <class T>
DenseMatrix<T> eval_poly_at_matrices(const Polynomial& f,
                                     const std::vector<DenseMatrix<T>>& mats) {
  detail::check_matrix_tuple(mats, f.context().m, "eval_poly_at_matrices");
  const std::size_t n = mats[0].rows();
  DenseMatrix<T> r(n, n, mats[0](0, 0).zero());
  for (const auto& [m, c] : f.terms()) {
    DenseMatrix<T> part = DenseMatrix<T>::identity(n, mats[0](0, 0));
    for (const auto& [v, e] : m.factors()) {
      if (v.space != VarSpace::y)
        throw std::invalid_argument(
            "eval_poly_at_matrices: polynomial must use only y variables");
      part = part * mats[v.a - 1].pow(e);
    }
    r = r + part.map([&](const T& t) { return c * t; });
  }
  return r;
}

// The diagonal specialization xi[k,i,j] -> x[i,k] when i = j, else 0.
inline Polynomial delta_specialize(const Polynomial& p) {
  Polynomial r = p.zero();
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    bool dead = false;
    for (const auto& [v, e] : m.factors()) {
      if (v.space == VarSpace::xi) {
        if (v.b != v.c) {
          dead = true;
          break;
        }
        image = image.times(Monomial::variable(VarId::x(v.b, v.a), e));
      } else {
        image = image.times(Monomial::variable(v, e));
      }
    }
    if (!dead) r += Polynomial::term(p.context(), image, c);
  }
  return r;
}

// Entrywise diagonal specialization of a matrix of polynomials.
inline PolyMatrix delta_specialize(const PolyMatrix& M) {
  return M.map([](const Polynomial& p) { return delta_specialize(p); });
}

// A canonical word mapping to the given monomial in y under abelianization:
// letters in increasing index, repeated by exponent.
inline FreeWord word_for_monomial(const Monomial& m) {
  FreeWord w;
  for (const auto& [v, e] : m.factors()) {
    if (v.space != VarSpace::y)
      throw std::invalid_argument("word_for_monomial: non-y variable " +
                                  v.str());
    for (unsigned r = 0; r < e; ++r) w.letters.push_back(v.a);
  }
  return w;
}

}  // namespace msym
