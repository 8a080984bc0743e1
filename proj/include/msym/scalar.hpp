#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace msym {

// Violation of an algorithmic guarantee, as opposed to bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Coefficient domain: integers, rationals, or the prime field Z/p.
class Ring {
 public:
  enum class Kind { integers, rationals, modp };

  static Ring integers() { return Ring(Kind::integers, 0); }
  static Ring rationals() { return Ring(Kind::rationals, 0); }
  static Ring mod(unsigned long p) {
    if (!is_prime(p))
      throw std::invalid_argument("Ring::mod: modulus " + std::to_string(p) +
                                  " is not prime");
    return Ring(Kind::modp, p);
  }

  Kind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool is_field() const { return kind_ != Kind::integers; }

  bool operator==(const Ring&) const = default;

  std::string str() const {
    switch (kind_) {
      case Kind::integers:
        return "int";
      case Kind::rationals:
        return "rat";
      default:
        return "mod:" + std::to_string(p_);
    }
  }

 private:
  Ring(Kind k, unsigned long p) : kind_(k), p_(p) {}

  static bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  Kind kind_;
  unsigned long p_;
};

// An exact element of one of the three base rings. Rationals are kept in
// lowest terms with positive denominator; Z/p residues in [0, p).
class Scalar {
 public:
  explicit Scalar(Ring r) : ring_(r), v_(0) {}
  Scalar(Ring r, long v) : ring_(r), v_(v) { reduce(); }
  Scalar(Ring r, const mpz_class& v) : ring_(r), v_(v) { reduce(); }

  static Scalar rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    Scalar s(Ring::rationals());
    s.v_ = mpq_class(num, den);
    s.v_.canonicalize();
    return s;
  }

  static Scalar zero(Ring r) { return Scalar(r); }
  static Scalar one(Ring r) { return Scalar(r, 1); }
  Scalar zero() const { return Scalar(ring_); }
  Scalar one() const { return Scalar(ring_, 1); }

  const Ring& ring() const { return ring_; }
  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }

  bool operator==(const Scalar& o) const {
    return ring_ == o.ring_ && v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same_ring(b);
    Scalar r(a.ring_);
    r.v_ = a.v_ + b.v_;
    r.reduce();
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    a.check_same_ring(b);
    Scalar r(a.ring_);
    r.v_ = a.v_ - b.v_;
    r.reduce();
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_ring(b);
    Scalar r(a.ring_);
    r.v_ = a.v_ * b.v_;
    r.reduce();
    return r;
  }
  Scalar operator-() const {
    Scalar r(ring_);
    r.v_ = -v_;
    r.reduce();
    return r;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Multiplicative inverse. Over Z only the units +-1 have one.
  Scalar inverse() const {
    switch (ring_.kind()) {
      case Ring::Kind::rationals: {
        if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
        Scalar r(ring_);
        r.v_ = 1 / v_;
        return r;
      }
      case Ring::Kind::modp: {
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(),
                        mpz_class(ring_.modulus()).get_mpz_t()))
          throw std::invalid_argument("Scalar: inverse of zero residue");
        return Scalar(ring_, inv);
      }
      default:
        if (v_ == 1 || v_ == -1) return *this;
        throw std::invalid_argument("Scalar: not a unit in Z");
    }
  }

  bool is_unit() const {
    if (is_zero()) return false;
    if (ring_.is_field()) return true;
    return v_ == 1 || v_ == -1;
  }

  Scalar abs() const { return is_negative() ? -*this : *this; }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  void check_same_ring(const Scalar& o) const {
    if (!(ring_ == o.ring_))
      throw std::invalid_argument("Scalar: mixed-ring operands (" +
                                  ring_.str() + " vs " + o.ring_.str() + ")");
  }

  void reduce() {
    switch (ring_.kind()) {
      case Ring::Kind::integers:
        if (v_.get_den() != 1)
          throw std::invalid_argument("Scalar: non-integral value in Z");
        break;
      case Ring::Kind::modp: {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v_.get_num().get_mpz_t(),
                      ring_.modulus());
        v_ = mpq_class(r);
        break;
      }
      default:
        v_.canonicalize();
        break;
    }
  }

  Ring ring_;
  mpq_class v_;
};

// Exact division: over a field a/b, over Z only when b | a.
inline Scalar div_exact(const Scalar& a, const Scalar& b) {
  if (b.ring().is_field()) return a * b.inverse();
  if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero");
  if (!mpz_divisible_p(a.numerator().get_mpz_t(), b.numerator().get_mpz_t()))
    throw std::invalid_argument("div_exact: not divisible over Z");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.numerator().get_mpz_t(),
               b.numerator().get_mpz_t());
  return Scalar(a.ring(), q);
}

inline bool divides(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b.is_zero();
  if (a.ring().is_field()) return true;
  return mpz_divisible_p(b.numerator().get_mpz_t(),
                         a.numerator().get_mpz_t()) != 0;
}

// Moves a value into another base ring where the map is defined:
// Z -> Q, Z -> Z/p (reduction), Z/p -> Z (lift), Q -> Z (integral only),
// Q -> Z/p (denominator must be a unit mod p).
inline Scalar convert(const Scalar& s, Ring target) {
  if (s.ring() == target) return s;
  switch (target.kind()) {
    case Ring::Kind::rationals: {
      Scalar r = Scalar::rational(s.numerator(), s.denominator());
      return r;
    }
    case Ring::Kind::integers:
      if (s.denominator() != 1)
        throw std::invalid_argument("convert: value is not an integer");
      return Scalar(target, s.numerator());
    default: {
      Scalar num(target, s.numerator());
      if (s.denominator() == 1) return num;
      return num * Scalar(target, s.denominator()).inverse();
    }
  }
}

}  // namespace msym
