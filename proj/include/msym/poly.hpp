#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msym/scalar.hpp"

namespace msym {

// Ambient parameters: coefficient ring, matrix size n, number of matrices m.
struct Context {
  Ring ring;
  unsigned n;
  unsigned m;

  Context(Ring r, unsigned n_, unsigned m_) : ring(r), n(n_), m(m_) {
    if (n == 0 || m == 0)
      throw std::invalid_argument("Context: n and m must be positive");
  }

  bool operator==(const Context&) const = default;
};

// Variable namespaces, in display/sort order:
//   y k        -- commuting indeterminates y_1..y_m
//   x[i,k]     -- diagonal coordinates, row i of the k-th diagonal matrix
//   xi[k,i,j]  -- entry (i,j) of the k-th generic matrix
enum class VarSpace { y, x, xi };

struct VarId {
  VarSpace space;
  unsigned a = 0, b = 0, c = 0;

  static VarId y(unsigned k) { return {VarSpace::y, k, 0, 0}; }
  static VarId x(unsigned i, unsigned k) { return {VarSpace::x, i, k, 0}; }
  static VarId xi(unsigned k, unsigned i, unsigned j) {
    return {VarSpace::xi, k, i, j};
  }

  auto operator<=>(const VarId&) const = default;

  void validate(const Context& ctx) const {
    auto bad = [this](const char* what) {
      throw std::out_of_range("VarId: " + str() + ": " + what);
    };
    switch (space) {
      case VarSpace::y:
        if (a < 1 || a > ctx.m) bad("y index out of range");
        break;
      case VarSpace::x:
        if (a < 1 || a > ctx.n) bad("row index out of range");
        if (b < 1 || b > ctx.m) bad("matrix index out of range");
        break;
      case VarSpace::xi:
        if (a < 1 || a > ctx.m) bad("matrix index out of range");
        if (b < 1 || b > ctx.n || c < 1 || c > ctx.n)
          bad("entry index out of range");
        break;
    }
  }

  std::string str() const {
    switch (space) {
      case VarSpace::y:
        return "y" + std::to_string(a);
      case VarSpace::x:
        return "x[" + std::to_string(a) + "," + std::to_string(b) + "]";
      case VarSpace::xi:
        return "xi[" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + "]";
    }
    throw InternalError("VarId: bad space tag");
  }
};

// Sparse monomial: variables with positive exponents, sorted by VarId.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarId v, unsigned e = 1) {
    Monomial m;
    if (e > 0) m.f_.push_back({v, e});
    return m;
  }

  bool is_one() const { return f_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
  }

  unsigned exponent(VarId v) const {
    for (const auto& [w, e] : f_)
      if (w == v) return e;
    return 0;
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
      if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first))
        r.f_.push_back(f_[i++]);
      else if (i == f_.size() || o.f_[j].first < f_[i].first)
        r.f_.push_back(o.f_[j++]);
      else {
        r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
        ++i, ++j;
      }
    }
    return r;
  }

  Monomial pow(unsigned e) const {
    Monomial r;
    if (e == 0) return r;
    r.f_ = f_;
    for (auto& [v, x] : r.f_) x *= e;
    return r;
  }

  const std::vector<std::pair<VarId, unsigned>>& factors() const {
    return f_;
  }

  bool uses_only(VarSpace s) const {
    for (const auto& [v, e] : f_)
      if (v.space != s) return false;
    return true;
  }

  template <class F>
  Monomial map_vars(F f) const {
    Monomial r;
    for (const auto& [v, e] : f_) r = r.times(variable(f(v), e));
    return r;
  }

  bool operator==(const Monomial&) const = default;

  // Graded lexicographic comparison: higher total degree wins; within a
  // degree the earlier variable (smaller VarId) with the larger exponent
  // wins. Returns +1 when a > b.
  static int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    std::size_t i = 0, j = 0;
    while (i < a.f_.size() && j < b.f_.size()) {
      if (a.f_[i].first < b.f_[j].first) return 1;   // a has the earlier var
      if (b.f_[j].first < a.f_[i].first) return -1;
      if (a.f_[i].second != b.f_[j].second)
        return a.f_[i].second > b.f_[j].second ? 1 : -1;
      ++i, ++j;
    }
    if (i < a.f_.size()) return 1;
    if (j < b.f_.size()) return -1;
    return 0;
  }

  std::string str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : f_) {
      if (!s.empty()) s += "*";
      s += v.str();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<std::pair<VarId, unsigned>> f_;
};

// Map comparator putting the grlex-largest monomial first.
struct TermOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::grlex_cmp(a, b) > 0;
  }
};

// Exact multivariate polynomial over a Context's coefficient ring.
// Terms are kept normalized: no zero coefficients, descending grlex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, TermOrderDesc>;

  explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(const Context& ctx) { return Polynomial(ctx); }

  static Polynomial constant(const Context& ctx, const Scalar& c) {
    if (c.ring() != ctx.ring)
      throw std::invalid_argument("Polynomial: constant from foreign ring");
    Polynomial p(ctx);
    p.add_term(Monomial(), c);
    return p;
  }

  static Polynomial constant(const Context& ctx, long c) {
    return constant(ctx, Scalar(ctx.ring, c));
  }

  static Polynomial one(const Context& ctx) { return constant(ctx, 1); }

  static Polynomial variable(const Context& ctx, VarId v) {
    v.validate(ctx);
    Polynomial p(ctx);
    p.add_term(Monomial::variable(v), Scalar::one(ctx.ring));
    return p;
  }

  static Polynomial term(const Context& ctx, const Monomial& m,
                         const Scalar& c) {
    for (const auto& fe : m.factors()) fe.first.validate(ctx);
    if (c.ring() != ctx.ring)
      throw std::invalid_argument("Polynomial: coefficient from foreign ring");
    Polynomial p(ctx);
    p.add_term(m, c);
    return p;
  }

  const Context& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ctx_.ring) : it->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
      if (m.degree() > d) d = m.degree();
    return d;
  }

  // Prototype accessors so Polynomial can serve as a matrix entry type.
  Polynomial zero() const { return Polynomial(ctx_); }
  Polynomial one() const { return one(ctx_); }

  bool operator==(const Polynomial& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_context(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same_context(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_context(b);
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(ma.times(mb), ca * cb);
    return r;
  }

  friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
    if (c.ring() != p.ctx_.ring)
      throw std::invalid_argument("Polynomial: scalar from foreign ring");
    Polynomial r(p.ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms_) r.add_term(m, c * x);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(ctx_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      std::string piece;
      if (m.is_one())
        piece = c.abs().str();
      else if (c.abs().is_one())
        piece = m.str();
      else
        piece = c.abs().str() + "*" + m.str();
      if (s.empty())
        s = c.is_negative() ? "-" + piece : piece;
      else
        s += (c.is_negative() ? " - " : " + ") + piece;
    }
    return s;
  }

 private:
  void add_term(const Monomial& m, const Scalar& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  void check_same_context(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_))
      throw std::invalid_argument("Polynomial: mixed-context operands");
  }

  Context ctx_;
  TermMap terms_;
};

// Replace variables by polynomials; variables absent from repl are kept.
inline Polynomial substitute(const Polynomial& p,
                             const std::map<VarId, Polynomial>& repl) {
  Polynomial r = p.zero();
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(p.context(), c);
    for (const auto& [v, e] : m.factors()) {
      auto it = repl.find(v);
      if (it != repl.end())
        term *= it->second.pow(e);
      else
        term *= Polynomial::variable(p.context(), v).pow(e);
    }
    r += term;
  }
  return r;
}

namespace detail {

inline void require_permutation(const std::vector<unsigned>& sigma,
                                unsigned n, const char* who) {
  if (sigma.size() != n)
    throw std::invalid_argument(std::string(who) + ": permutation size != n");
  std::vector<bool> seen(n, false);
  for (unsigned v : sigma) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument(std::string(who) +
                                  ": not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

}  // namespace detail

// Row permutation action on diagonal coordinates: x[i,k] -> x[sigma(i),k].
// sigma is 1-based: sigma[i-1] is the image of i. Other variables are fixed.
inline Polynomial sn_act(const std::vector<unsigned>& sigma,
                         const Polynomial& p) {
  detail::require_permutation(sigma, p.context().n, "sn_act");
  Polynomial r = p.zero();
  for (const auto& [m, c] : p.terms()) {
    Monomial image = m.map_vars([&](VarId v) {
      if (v.space == VarSpace::x) return VarId::x(sigma[v.a - 1], v.b);
      return v;
    });
    r += Polynomial::term(p.context(), image, c);
  }
  return r;
}

// Invariance under all of S_n, checked on the adjacent transpositions.
inline bool is_multisymmetric(const Polynomial& p) {
  const unsigned n = p.context().n;
  for (unsigned i = 1; i < n; ++i) {
    std::vector<unsigned> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1u);
    std::swap(sigma[i - 1], sigma[i]);
    if (sn_act(sigma, p) != p) return false;
  }
  return true;
}

// Degree vector (d_1..d_m) of a monomial in the x-variables: d_k sums the
// exponents of x[1,k]..x[n,k]. y and xi variables are rejected.
inline std::vector<unsigned> x_multidegree(const Monomial& m,
                                           const Context& ctx) {
  std::vector<unsigned> d(ctx.m, 0);
  for (const auto& [v, e] : m.factors()) {
    if (v.space != VarSpace::x)
      throw std::invalid_argument("x_multidegree: non-x variable " + v.str());
    d[v.b - 1] += e;
  }
  return d;
}

// The common x-multidegree of all terms, or nullopt if inhomogeneous.
inline std::optional<std::vector<unsigned>> x_multidegree(
    const Polynomial& p) {
  std::optional<std::vector<unsigned>> d;
  for (const auto& [m, c] : p.terms()) {
    auto md = x_multidegree(m, p.context());
    if (!d)
      d = md;
    else if (*d != md)
      return std::nullopt;
  }
  return d;
}

inline std::map<std::vector<unsigned>, Polynomial> split_by_x_multidegree(
    const Polynomial& p) {
  std::map<std::vector<unsigned>, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    auto key = x_multidegree(m, p.context());
    auto it = parts.find(key);
    if (it == parts.end())
      parts.emplace(key, Polynomial::term(p.context(), m, c));
    else
      it->second += Polynomial::term(p.context(), m, c);
  }
  return parts;
}

// True when every exponent shares a factor d >= 2, i.e. the monomial is a
// perfect power of a smaller monomial.
inline bool is_proper_power(const Monomial& m) {
  unsigned g = 0;
  for (const auto& [v, e] : m.factors()) g = std::gcd(g, e);
  return g >= 2;
}

}  // namespace msym
