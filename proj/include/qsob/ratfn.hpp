#pragma once

// Quotients of polynomials kept in normal form: monic denominator, and in
// exact mode numerator and denominator coprime.

#include <stdexcept>
#include <string>
#include <utility>

#include "qsob/poly.hpp"

namespace qsob {

template <Scalar S>
class RationalFn {
 public:
  using PolyT = Poly<S>;

  RationalFn() : den_(PolyT::constant(S(1))) {}
  RationalFn(PolyT p) : num_(std::move(p)), den_(PolyT::constant(S(1))) {}  // NOLINT(implicit)

  /// num/den in normal form. Throws std::domain_error on a zero denominator.
  static RationalFn make(PolyT num, PolyT den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFn r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

  const PolyT& numerator() const { return num_; }
  const PolyT& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The polynomial this function equals; throws if the denominator is not constant.
  PolyT as_polynomial() const {
    if (!is_polynomial()) throw DivisibilityError("not a polynomial: " + to_string());
    return num_;
  }

  S eval(const S& x0) const {
    const S d = den_.eval(x0);
    if (qsob::is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x0) / d;
  }

  /// r(c*x)
  RationalFn scaled_argument(const S& c) const {
    return make(num_.scaled_argument(c), den_.scaled_argument(c));
  }

  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
    return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn();
    return make(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return make(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend RationalFn operator*(const S& s, const RationalFn& a) { return make(a.num_ * s, a.den_); }
  friend RationalFn operator*(const RationalFn& a, const S& s) { return s * a; }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  /// Equality of normal forms; in exact mode this is equality of functions.
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = PolyT::constant(S(1));
      return;
    }
    if constexpr (ExactScalar<S>) {
      if (den_.degree() > 0) {
        PolyT g = gcd(num_, den_);
        if (g.degree() > 0) {
          num_ = divexact(num_, g);
          den_ = divexact(den_, g);
        }
      }
    }
    if (!den_.is_monic()) {
      const S lc = den_.leading();
      num_ /= lc;
      den_ /= lc;
    }
  }

  PolyT num_;
  PolyT den_;
};

/// a*d - b*c for the 2x2 array [[a, b], [c, d]].
template <Scalar S>
RationalFn<S> det2(const RationalFn<S>& a, const RationalFn<S>& b, const RationalFn<S>& c,
                   const RationalFn<S>& d) {
  return a * d - b * c;
}

}  // namespace qsob
