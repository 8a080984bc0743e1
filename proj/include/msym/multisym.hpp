#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "msym/charpoly.hpp"
#include "msym/matrix.hpp"
#include "msym/linalg.hpp"
#include "msym/poly.hpp"

namespace msym {

// Substitute y_k -> x[i,k]: the i-th "row copy" of a polynomial in y.
inline Polynomial rho(const Polynomial& f, unsigned i) {
  const Context& ctx = f.context();
  if (i < 1 || i > ctx.n)
    throw std::out_of_range("rho: copy index out of range");
  Polynomial r = f.zero();
  for (const auto& [m, c] : f.terms()) {
    if (!m.uses_only(VarSpace::y))
      throw std::invalid_argument("rho: polynomial must use only y variables");
    Monomial image = m.map_vars([&](VarId v) { return VarId::x(i, v.a); });
    r += Polynomial::term(ctx, image, c);
  }
  return r;
}

// All n elementary symmetric polynomials of (rho_1(f), ..., rho_n(f)),
// read off the expansion of prod_i (t - rho_i(f)).
inline std::vector<Polynomial> ek_all(const Polynomial& f) {
  const unsigned n = f.context().n;
  std::vector<Polynomial> roots;
  roots.reserve(n);
  for (unsigned i = 1; i <= n; ++i) roots.push_back(rho(f, i));
  return coeffs_from_monic(monic_from_roots(roots)).c;
}

// e_k evaluated at the n row copies of f.
inline Polynomial ek_of_f(unsigned k, const Polynomial& f) {
  if (k < 1 || k > f.context().n)
    throw std::out_of_range("ek_of_f: k out of range");
  return ek_all(f)[k - 1];
}

// Orbit sum: the canonical shape is a multiset of n exponent vectors in
// N^m, stored sorted descending lexicographically. Expanding it sums the
// monomial prod x[i,k]^shape[i][k] over its row-permutation orbit, each
// distinct monomial once.
struct OrbitSum {
  std::vector<std::vector<unsigned>> shape;

  static OrbitSum make(std::vector<std::vector<unsigned>> rows,
                       const Context& ctx) {
    if (rows.size() != ctx.n)
      throw std::invalid_argument("OrbitSum: need exactly n exponent vectors");
    for (const auto& r : rows)
      if (r.size() != ctx.m)
        throw std::invalid_argument("OrbitSum: exponent vector length != m");
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return OrbitSum{std::move(rows)};
  }

  static OrbitSum of_monomial(const Monomial& mono, const Context& ctx) {
    std::vector<std::vector<unsigned>> rows(
        ctx.n, std::vector<unsigned>(ctx.m, 0));
    for (const auto& [v, e] : mono.factors()) {
      if (v.space != VarSpace::x)
        throw std::invalid_argument("OrbitSum: non-x variable " + v.str());
      v.validate(ctx);
      rows[v.a - 1][v.b - 1] += e;
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return OrbitSum{std::move(rows)};
  }

  std::vector<unsigned> multidegree() const {
    std::vector<unsigned> d(shape.empty() ? 0 : shape[0].size(), 0);
    for (const auto& row : shape)
      for (std::size_t k = 0; k < row.size(); ++k) d[k] += row[k];
    return d;
  }

  // Number of distinct row arrangements: n! / prod(multiplicities!).
  unsigned long orbit_size() const {
    unsigned long size = 1;
    for (std::size_t i = 1; i <= shape.size(); ++i) size *= i;
    std::size_t i = 0;
    while (i < shape.size()) {
      std::size_t j = i;
      while (j < shape.size() && shape[j] == shape[i]) ++j;
      for (std::size_t r = 1; r <= j - i; ++r) size /= r;
      i = j;
    }
    return size;
  }

  bool operator==(const OrbitSum&) const = default;
  bool operator<(const OrbitSum& o) const { return shape < o.shape; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) s += ",";
      s += "(";
      for (std::size_t k = 0; k < shape[i].size(); ++k) {
        if (k) s += ",";
        s += std::to_string(shape[i][k]);
      }
      s += ")";
    }
    return s + "}";
  }
};

inline Polynomial expand_orbit(const OrbitSum& o, const Context& ctx) {
  if (o.shape.size() != ctx.n)
    throw std::invalid_argument("expand_orbit: shape size != n");
  std::vector<std::vector<unsigned>> rows = o.shape;
  std::sort(rows.begin(), rows.end());
  Polynomial p = Polynomial::zero(ctx);
  const Scalar one = Scalar::one(ctx.ring);
  do {
    Monomial mono;
    for (unsigned i = 0; i < ctx.n; ++i)
      for (unsigned k = 0; k < ctx.m; ++k)
        if (rows[i][k] > 0)
          mono = mono.times(
              Monomial::variable(VarId::x(i + 1, k + 1), rows[i][k]));
    p += Polynomial::term(ctx, mono, one);
  } while (std::next_permutation(rows.begin(), rows.end()));
  return p;
}

// Coordinates of a multisymmetric polynomial in the orbit-sum basis.
// Rejects non-symmetric input: every orbit must appear completely and with
// one shared coefficient.
inline std::map<OrbitSum, Scalar> to_orbit_coordinates(const Polynomial& p) {
  const Context& ctx = p.context();
  std::map<OrbitSum, Scalar> coords;
  std::map<OrbitSum, unsigned long> seen;
  for (const auto& [m, c] : p.terms()) {
    OrbitSum shape = OrbitSum::of_monomial(m, ctx);
    auto [it, inserted] = coords.emplace(shape, c);
    if (!inserted && it->second != c)
      throw std::invalid_argument(
          "to_orbit_coordinates: input is not multisymmetric "
          "(unequal coefficients within an orbit)");
    ++seen[shape];
  }
  for (const auto& [shape, count] : seen)
    if (count != shape.orbit_size())
      throw std::invalid_argument(
          "to_orbit_coordinates: input is not multisymmetric "
          "(incomplete orbit " + shape.str() + ")");
  return coords;
}

// Abstract generator symbol E(k; f): the k-th elementary symmetric
// polynomial of the row copies of the monomial f.
struct GeneratorSymbol {
  unsigned k;
  Monomial f;

  static GeneratorSymbol make(unsigned k, const Monomial& f,
                              const Context& ctx) {
    if (k < 1 || k > ctx.n)
      throw std::invalid_argument("GeneratorSymbol: k out of range");
    if (f.is_one())
      throw std::invalid_argument("GeneratorSymbol: constant monomial");
    if (is_proper_power(f))
      throw std::invalid_argument("GeneratorSymbol: proper power " + f.str());
    for (const auto& fe : f.factors()) {
      if (fe.first.space != VarSpace::y)
        throw std::invalid_argument("GeneratorSymbol: non-y variable");
      fe.first.validate(ctx);
    }
    return GeneratorSymbol{k, f};
  }

  // x-multidegree of the expansion: k times the exponent vector of f.
  std::vector<unsigned> multidegree(const Context& ctx) const {
    std::vector<unsigned> d(ctx.m, 0);
    for (const auto& [v, e] : f.factors()) d[v.a - 1] = k * e;
    return d;
  }

  unsigned degree() const { return k * f.degree(); }

  bool operator==(const GeneratorSymbol&) const = default;

  // k ascending, then argument degree ascending, then grlex-larger first
  // (within a degree that is the exponent-vector order: y1 < y2 < ...).
  static int cmp(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    if (a.k != b.k) return a.k < b.k ? -1 : 1;
    if (a.f.degree() != b.f.degree())
      return a.f.degree() < b.f.degree() ? -1 : 1;
    return -Monomial::grlex_cmp(a.f, b.f);
  }

  bool operator<(const GeneratorSymbol& o) const { return cmp(*this, o) < 0; }

  std::string str() const {
    return "E(" + std::to_string(k) + ";" + f.str() + ")";
  }
};

// Multiset of generator symbols; a formal product of E(k; f)'s.
struct SymbolMultiset {
  // Sorted by symbol, exponents >= 1. Empty multiset = the product 1.
  std::vector<std::pair<GeneratorSymbol, unsigned>> parts;

  static SymbolMultiset make(
      std::vector<std::pair<GeneratorSymbol, unsigned>> parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return a.first < b.first;
    });
    std::vector<std::pair<GeneratorSymbol, unsigned>> merged;
    for (auto& [s, e] : parts) {
      if (e == 0) continue;
      if (!merged.empty() && merged.back().first == s)
        merged.back().second += e;
      else
        merged.push_back({s, e});
    }
    return SymbolMultiset{std::move(merged)};
  }

  bool is_empty() const { return parts.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [s, e] : parts) d += e * s.degree();
    return d;
  }

  std::vector<unsigned> multidegree(const Context& ctx) const {
    std::vector<unsigned> d(ctx.m, 0);
    for (const auto& [s, e] : parts) {
      auto sd = s.multidegree(ctx);
      for (unsigned k = 0; k < ctx.m; ++k) d[k] += e * sd[k];
    }
    return d;
  }

  std::vector<GeneratorSymbol> expanded() const {
    std::vector<GeneratorSymbol> seq;
    for (const auto& [s, e] : parts)
      for (unsigned r = 0; r < e; ++r) seq.push_back(s);
    return seq;
  }

  bool operator==(const SymbolMultiset&) const = default;

  std::string str() const {
    if (parts.empty()) return "1";
    std::string s;
    for (const auto& [sym, e] : parts) {
      if (!s.empty()) s += "*";
      s += sym.str();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }
};

// Total degree descending, then expanded symbol sequence ascending: the
// canonical print order for GeneratorExpr terms.
struct MultisetOrderDesc {
  bool operator()(const SymbolMultiset& a, const SymbolMultiset& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto sa = a.expanded(), sb = b.expanded();
    return std::lexicographical_compare(
        sa.begin(), sa.end(), sb.begin(), sb.end(),
        [](const GeneratorSymbol& x, const GeneratorSymbol& y) {
          return x < y;
        });
  }
};

// Polynomial in the abstract symbols E(k; f).
class GeneratorExpr {
 public:
  using TermMap = std::map<SymbolMultiset, Scalar, MultisetOrderDesc>;

  explicit GeneratorExpr(Context ctx) : ctx_(std::move(ctx)) {}

  const Context& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SymbolMultiset& ms, const Scalar& c) {
    if (c.ring() != ctx_.ring)
      throw std::invalid_argument("GeneratorExpr: coefficient ring mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(ms, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool operator==(const GeneratorExpr& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }
  bool operator!=(const GeneratorExpr& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [ms, c] : terms_) {
      std::string piece;
      if (ms.is_empty())
        piece = c.abs().str();
      else if (c.abs().is_one())
        piece = ms.str();
      else
        piece = c.abs().str() + "*" + ms.str();
      if (s.empty())
        s = c.is_negative() ? "-" + piece : piece;
      else
        s += (c.is_negative() ? " - " : " + ") + piece;
    }
    return s;
  }

 private:
  Context ctx_;
  TermMap terms_;
};

// All symbols E(k; f) with f nonconstant, not a proper power, and
// k * multidegree(f) <= dbound componentwise. Canonically ordered.
inline std::vector<GeneratorSymbol> enumerate_generators(
    const Context& ctx, const std::vector<unsigned>& dbound) {
  if (dbound.size() != ctx.m)
    throw std::invalid_argument("enumerate_generators: bound length != m");
  if (std::all_of(dbound.begin(), dbound.end(),
                  [](unsigned d) { return d == 0; }))
    throw std::invalid_argument("enumerate_generators: zero bound");

  std::vector<GeneratorSymbol> out;
  std::vector<unsigned> ev(ctx.m, 0);
  for (;;) {
    // advance ev through the box [0, dbound]
    unsigned pos = 0;
    while (pos < ctx.m && ev[pos] == dbound[pos]) ev[pos++] = 0;
    if (pos == ctx.m) break;
    ++ev[pos];

    unsigned g = 0;
    for (unsigned e : ev) g = std::gcd(g, e);
    if (g != 1) continue;  // constant or proper power
    Monomial f;
    for (unsigned k = 0; k < ctx.m; ++k)
      if (ev[k] > 0)
        f = f.times(Monomial::variable(VarId::y(k + 1), ev[k]));
    for (unsigned k = 1; k <= ctx.n; ++k) {
      bool fits = true;
      for (unsigned j = 0; j < ctx.m; ++j)
        if (k * ev[j] > dbound[j]) fits = false;
      if (fits) out.push_back(GeneratorSymbol::make(k, f, ctx));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Replace every E(k; f) by ek_of_f(k, f) and multiply out.
inline Polynomial expand_generator_expr(const GeneratorExpr& g) {
  const Context& ctx = g.context();
  Polynomial r = Polynomial::zero(ctx);
  for (const auto& [ms, c] : g.terms()) {
    Polynomial prod = Polynomial::constant(ctx, c);
    for (const auto& [sym, e] : ms.parts) {
      Polynomial base =
          ek_of_f(sym.k, Polynomial::term(ctx, sym.f, Scalar::one(ctx.ring)));
      prod *= base.pow(e);
    }
    r += prod;
  }
  return r;
}

// Decomposition engine: writes multisymmetric polynomials as polynomials in
// the generators E(k; f). Caches expansions so corpora sharing a context
// reuse the linear-system columns.
class Decomposer {
 public:
  explicit Decomposer(Context ctx) : ctx_(std::move(ctx)) {}

  const Context& context() const { return ctx_; }

  GeneratorExpr decompose(const Polynomial& p) {
    if (!(p.context() == ctx_))
      throw std::invalid_argument("Decomposer: context mismatch");
    GeneratorExpr result(ctx_);
    for (const auto& [d, component] : split_by_x_multidegree(p)) {
      // to_orbit_coordinates also validates multisymmetry per component
      std::map<OrbitSum, Scalar> target = to_orbit_coordinates(component);
      decompose_component(d, target, result);
    }
    return result;
  }

 private:
  void decompose_component(const std::vector<unsigned>& d,
                           const std::map<OrbitSum, Scalar>& target,
                           GeneratorExpr& out) {
    const std::vector<SymbolMultiset>& columns = multisets_for(d);
    if (columns.empty())
      throw InternalError("Decomposer: no candidate products for degree");

    // Row space: all shapes appearing in any column or in the target.
    std::map<OrbitSum, std::size_t> row_index;
    for (const SymbolMultiset& ms : columns)
      for (const auto& [shape, c] : coords_for(ms)) row_index.emplace(
          shape, 0);
    for (const auto& [shape, c] : target) row_index.emplace(shape, 0);
    std::size_t idx = 0;
    for (auto& [shape, i] : row_index) i = idx++;

    const Scalar zero = Scalar::zero(ctx_.ring);
    ScalarMatrix A(row_index.size(), columns.size(), zero);
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [shape, c] : coords_for(columns[j]))
        A(row_index.at(shape), j) = c;
    std::vector<Scalar> b(row_index.size(), zero);
    for (const auto& [shape, c] : target) b[row_index.at(shape)] = c;

    auto x = solve_linear_exact(A, b);
    if (!x)
      throw InternalError(
          "Decomposer: generator system inconsistent at multidegree " +
          degree_str(d));
    for (std::size_t j = 0; j < columns.size(); ++j)
      out.add_term(columns[j], (*x)[j]);
  }

  // All multisets of generator symbols whose multidegrees sum to d,
  // in canonical order.
  const std::vector<SymbolMultiset>& multisets_for(
      const std::vector<unsigned>& d) {
    auto it = multiset_cache_.find(d);
    if (it != multiset_cache_.end()) return it->second;

    std::vector<SymbolMultiset> out;
    if (std::all_of(d.begin(), d.end(), [](unsigned x) { return x == 0; })) {
      out.push_back(SymbolMultiset::make({}));
    } else {
      std::vector<GeneratorSymbol> gens = enumerate_generators(ctx_, d);
      std::vector<std::pair<GeneratorSymbol, unsigned>> current;
      dfs_multisets(gens, 0, d, current, out);
      std::sort(out.begin(), out.end(), [](const SymbolMultiset& a,
                                           const SymbolMultiset& b) {
        return MultisetOrderDesc{}(a, b);
      });
    }
    return multiset_cache_.emplace(d, std::move(out)).first->second;
  }

  void dfs_multisets(const std::vector<GeneratorSymbol>& gens, std::size_t i,
                     const std::vector<unsigned>& rem,
                     std::vector<std::pair<GeneratorSymbol, unsigned>>& cur,
                     std::vector<SymbolMultiset>& out) {
    if (std::all_of(rem.begin(), rem.end(),
                    [](unsigned x) { return x == 0; })) {
      out.push_back(SymbolMultiset::make(cur));
      return;
    }
    if (i == gens.size()) return;
    const std::vector<unsigned> w = gens[i].multidegree(ctx_);
    // exponent 0 branch
    dfs_multisets(gens, i + 1, rem, cur, out);
    std::vector<unsigned> r = rem;
    for (unsigned e = 1;; ++e) {
      bool fits = true;
      for (unsigned k = 0; k < ctx_.m; ++k) {
        if (w[k] > r[k]) {
          fits = false;
          break;
        }
        r[k] -= w[k];
      }
      if (!fits) break;
      cur.push_back({gens[i], e});
      dfs_multisets(gens, i + 1, r, cur, out);
      cur.pop_back();
    }
  }

  const std::map<OrbitSum, Scalar>& coords_for(const SymbolMultiset& ms) {
    auto it = coord_cache_.find(ms);
    if (it != coord_cache_.end()) return it->second;
    Polynomial prod = Polynomial::one(ctx_);
    for (const auto& [sym, e] : ms.parts)
      prod *= ek_poly(sym).pow(e);
    return coord_cache_
        .emplace(ms, to_orbit_coordinates(prod))
        .first->second;
  }

  const Polynomial& ek_poly(const GeneratorSymbol& sym) {
    auto it = ek_cache_.find(sym);
    if (it != ek_cache_.end()) return it->second;
    Polynomial f = Polynomial::term(ctx_, sym.f, Scalar::one(ctx_.ring));
    return ek_cache_.emplace(sym, ek_of_f(sym.k, f)).first->second;
  }

  static std::string degree_str(const std::vector<unsigned>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(d[i]);
    }
    return s + ")";
  }

  struct MsLess {
    bool operator()(const SymbolMultiset& a, const SymbolMultiset& b) const {
      return MultisetOrderDesc{}(a, b);
    }
  };
  struct SymLess {
    bool operator()(const GeneratorSymbol& a, const GeneratorSymbol& b) const {
      return a < b;
    }
  };

  Context ctx_;
  std::map<std::vector<unsigned>, std::vector<SymbolMultiset>> multiset_cache_;
  std::map<SymbolMultiset, std::map<OrbitSum, Scalar>, MsLess> coord_cache_;
  std::map<GeneratorSymbol, Polynomial, SymLess> ek_cache_;
};

inline GeneratorExpr decompose(const Polynomial& p) {
  Decomposer d(p.context());
  return d.decompose(p);
}

}  // namespace msym
