#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "msym/charpoly.hpp"
#include "msym/genmat.hpp"
#include "msym/linalg.hpp"
#include "msym/multisym.hpp"

namespace msym {

// An m-tuple of n x n matrices over one scalar ring.
struct MatrixTuple {
  std::vector<ScalarMatrix> mats;

  static MatrixTuple make(std::vector<ScalarMatrix> mats) {
    if (mats.empty())
      throw std::invalid_argument("MatrixTuple: empty tuple");
    const Ring ring = mats[0](0, 0).ring();
    for (const auto& M : mats) {
      M.require_square("MatrixTuple");
      if (M.rows() != mats[0].rows())
        throw std::invalid_argument("MatrixTuple: mixed matrix sizes");
      detail::require_ring(M, ring, "MatrixTuple");
    }
    return MatrixTuple{std::move(mats)};
  }

  unsigned n() const { return static_cast<unsigned>(mats[0].rows()); }
  unsigned m() const { return static_cast<unsigned>(mats.size()); }
  Ring ring() const { return mats[0](0, 0).ring(); }

  MatrixTuple diagonal_part() const {
    std::vector<ScalarMatrix> d;
    d.reserve(mats.size());
    for (const auto& M : mats) d.push_back(M.diagonal_part());
    return MatrixTuple{std::move(d)};
  }

  bool all_upper_triangular() const {
    for (const auto& M : mats)
      if (!M.is_upper_triangular()) return false;
    return true;
  }

  bool pairwise_commuting() const {
    for (std::size_t a = 0; a < mats.size(); ++a)
      for (std::size_t b = a + 1; b < mats.size(); ++b)
        if (mats[a] * mats[b] != mats[b] * mats[a]) return false;
    return true;
  }

  bool operator==(const MatrixTuple& o) const { return mats == o.mats; }
};

// theta_1(f)..theta_n(f): characteristic-polynomial coefficients of f
// evaluated at the generic matrices, as polynomials in the xi variables.
inline std::vector<Polynomial> theta(const FreeElement& f) {
  const Context& ctx = f.context();
  PolyMatrix F = eval_element_at_matrices(f, generic_matrices(ctx));
  return charpoly(F).c;
}

// Same coefficients evaluated at a concrete scalar tuple; no symbolic step.
inline std::vector<Scalar> theta_at(const FreeElement& f,
                                    const MatrixTuple& t) {
  const Context& ctx = f.context();
  if (t.m() != ctx.m)
    throw std::invalid_argument("theta_at: tuple arity mismatch");
  if (t.n() != ctx.n)
    throw std::invalid_argument("theta_at: matrix size mismatch");
  if (t.ring() != ctx.ring)
    throw std::invalid_argument("theta_at: ring mismatch");
  ScalarMatrix F = eval_element_at_matrices(f, t.mats);
  return charpoly(F).c;
}

// The two sides of the diagonal-restriction identity: the diagonal
// specialization of each theta_k(f), and e_k applied to the abelianization
// of f. The equality is asserted; a mismatch is a library bug.
inline std::pair<std::vector<Polynomial>, std::vector<Polynomial>>
junker_weyl_witness(const FreeElement& f) {
  std::vector<Polynomial> lhs;
  for (const Polynomial& t : theta(f)) lhs.push_back(delta_specialize(t));
  const Polynomial ab = f.abelianize();
  std::vector<Polynomial> rhs = ek_all(ab);
  if (lhs != rhs)
    throw InternalError(
        "junker_weyl_witness: diagonal specialization disagrees with e_k of "
        "the abelianization");
  return {std::move(lhs), std::move(rhs)};
}

// Simultaneous conjugation (M_1..M_m) -> (g M_1 g^-1, .., g M_m g^-1).
inline MatrixTuple gl_conjugate(const MatrixTuple& t, const ScalarMatrix& g) {
  g.require_square("gl_conjugate");
  if (g.rows() != t.n())
    throw std::invalid_argument("gl_conjugate: size mismatch");
  const ScalarMatrix gi = inverse(g);
  std::vector<ScalarMatrix> out;
  out.reserve(t.mats.size());
  for (const auto& M : t.mats) out.push_back(g * M * gi);
  return MatrixTuple{std::move(out)};
}

// Conjugation invariance of the theta coefficients at one sample point.
// Always true; false signals a bug.
inline bool invariance_trial(const FreeElement& f, const MatrixTuple& t,
                             const ScalarMatrix& g) {
  return theta_at(f, t) == theta_at(f, gl_conjugate(t, g));
}

// For commuting upper-triangular tuples, theta_k(f) only sees the diagonal:
// the one-parameter degeneration onto diagonal matrices leaves every
// invariant unchanged, so compare against the diagonal truncation directly.
inline bool degeneration_check(const MatrixTuple& t, const FreeElement& f) {
  if (!t.all_upper_triangular())
    throw std::invalid_argument("degeneration_check: tuple not triangular");
  if (!t.pairwise_commuting())
    throw std::invalid_argument("degeneration_check: tuple not commuting");
  return theta_at(f, t) == theta_at(f, t.diagonal_part());
}

// -- deterministic samplers ------------------------------------------------

inline Scalar sample_scalar(const Ring& ring, std::mt19937_64& rng) {
  switch (ring.kind()) {
    case Ring::Kind::integers:
      return Scalar(ring, static_cast<long>(rng() % 9) - 4);
    case Ring::Kind::rationals: {
      const long num = static_cast<long>(rng() % 9) - 4;
      const long den = static_cast<long>(rng() % 3) + 1;
      return Scalar(ring, num) * Scalar(ring, den).inverse();
    }
    case Ring::Kind::modp:
      return Scalar(ring, static_cast<long>(rng() % ring.modulus()));
  }
  throw InternalError("sample_scalar: bad ring kind");
}

inline ScalarMatrix sample_matrix(const Ring& ring, unsigned n,
                                  std::mt19937_64& rng) {
  ScalarMatrix M(n, n, Scalar::zero(ring));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) M(i, j) = sample_scalar(ring, rng);
  return M;
}

inline ScalarMatrix sample_upper_triangular(const Ring& ring, unsigned n,
                                            std::mt19937_64& rng) {
  ScalarMatrix M(n, n, Scalar::zero(ring));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) M(i, j) = sample_scalar(ring, rng);
  return M;
}

// Over a field: rejection sampling on the determinant. Over the integers:
// a product of unitriangular factors, so the result is unimodular.
inline ScalarMatrix sample_invertible_matrix(const Ring& ring, unsigned n,
                                             std::mt19937_64& rng) {
  if (ring.is_field()) {
    for (;;) {
      ScalarMatrix M = sample_matrix(ring, n, rng);
      if (!det_exact(M).is_zero()) return M;
    }
  }
  ScalarMatrix L = ScalarMatrix::identity(n, Scalar::zero(ring));
  ScalarMatrix U = L;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < i; ++j) {
      L(i, j) = sample_scalar(ring, rng);
      U(j, i) = sample_scalar(ring, rng);
    }
  return L * U;
}

inline FreeWord sample_word(unsigned m, unsigned maxlen,
                            std::mt19937_64& rng) {
  const unsigned len = 1 + static_cast<unsigned>(rng() % maxlen);
  FreeWord w;
  for (unsigned i = 0; i < len; ++i)
    w.letters.push_back(1 + static_cast<unsigned>(rng() % m));
  return w;
}

// A word, or occasionally a difference of two words (e.g. a commutator).
inline FreeElement sample_element(const Context& ctx, unsigned maxlen,
                                  std::mt19937_64& rng) {
  FreeElement f = FreeElement::word(ctx, sample_word(ctx.m, maxlen, rng));
  if (rng() % 3 == 0)
    f -= FreeElement::word(ctx, sample_word(ctx.m, maxlen, rng));
  return f;
}

inline MatrixTuple sample_tuple(const Context& ctx, std::mt19937_64& rng) {
  std::vector<ScalarMatrix> mats;
  for (unsigned k = 0; k < ctx.m; ++k)
    mats.push_back(sample_matrix(ctx.ring, ctx.n, rng));
  return MatrixTuple::make(std::move(mats));
}

// Pairwise-commuting upper-triangular tuple: a random triangular M_1 and
// polynomials in it for the rest. Both structural claims are re-verified.
inline MatrixTuple commuting_tuple_sampler(const Context& ctx,
                                           std::uint64_t seed) {
  if (!ctx.ring.is_field())
    throw std::invalid_argument("commuting_tuple_sampler: field rings only");
  std::mt19937_64 rng(seed);
  const ScalarMatrix M1 = sample_upper_triangular(ctx.ring, ctx.n, rng);
  std::vector<ScalarMatrix> mats = {M1};
  const ScalarMatrix I = ScalarMatrix::identity(ctx.n, Scalar::zero(ctx.ring));
  for (unsigned k = 2; k <= ctx.m; ++k) {
    ScalarMatrix Mk(ctx.n, ctx.n, Scalar::zero(ctx.ring));
    ScalarMatrix power = I;
    for (unsigned d = 0; d <= 2; ++d) {
      const Scalar c = sample_scalar(ctx.ring, rng);
      Mk = Mk + power.map([&](const Scalar& s) { return c * s; });
      power = power * M1;
    }
    mats.push_back(Mk);
  }
  MatrixTuple t = MatrixTuple::make(std::move(mats));
  if (!t.all_upper_triangular())
    throw InternalError("commuting_tuple_sampler: tuple not triangular");
  if (!t.pairwise_commuting())
    throw InternalError("commuting_tuple_sampler: tuple not commuting");
  return t;
}

// -- constructive surjectivity ----------------------------------------------

// Explicit preimage of a multisymmetric polynomial under the diagonal
// specialization: decompose into generators, then replace each E(k; f) by
// theta_k of the canonical word over f. The result lives in the subring
// generated by characteristic-polynomial coefficients of words.
inline Polynomial preimage_in_C(const Polynomial& p, Decomposer& dec) {
  const Context& ctx = p.context();
  GeneratorExpr g = dec.decompose(p);
  std::map<std::vector<unsigned>, std::vector<Polynomial>> theta_cache;
  Polynomial result = Polynomial::zero(ctx);
  for (const auto& [ms, c] : g.terms()) {
    Polynomial prod = Polynomial::constant(ctx, c);
    for (const auto& [sym, e] : ms.parts) {
      const FreeWord w = word_for_monomial(sym.f);
      auto it = theta_cache.find(w.letters);
      if (it == theta_cache.end())
        it = theta_cache
                 .emplace(w.letters, theta(FreeElement::word(ctx, w)))
                 .first;
      prod *= it->second[sym.k - 1].pow(e);
    }
    result += prod;
  }
  if (delta_specialize(result) != p)
    throw InternalError(
        "preimage_in_C: diagonal specialization does not reproduce input");
  return result;
}

inline Polynomial preimage_in_C(const Polynomial& p) {
  Decomposer dec(p.context());
  return preimage_in_C(p, dec);
}

}  // namespace msym
