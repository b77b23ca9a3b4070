#pragma once

// Dense univariate polynomials over a Scalar, coefficients in ascending degree.

#include <algorithm>
#include <climits>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsob/scalar.hpp"

namespace qsob {

/// Raised when an exact division leaves a nonzero remainder.
struct DivisibilityError : std::logic_error {
  using std::logic_error::logic_error;
};

template <Scalar S>
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;

  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(S c) { return Poly(std::vector<S>{std::move(c)}); }

  /// c * x^k
  static Poly monomial(S c, std::size_t k) {
    std::vector<S> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  /// The identity polynomial x, with coefficients at the precision of `one`.
  static Poly x(const S& one = S(1)) { return monomial(one, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }

  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == S(1); }

  S eval(const S& x0) const {
    if (c_.empty()) return S(0);
    S acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      acc *= x0;
      acc += c_[k];
    }
    return acc;
  }

  /// p(c*x)
  Poly scaled_argument(const S& c) const {
    std::vector<S> v = c_;
    S pw(1);
    for (auto& a : v) {
      a *= pw;
      pw *= c;
    }
    return Poly(std::move(v));
  }

  /// p(-x)
  Poly reflected() const { return scaled_argument(S(-1)); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Poly& operator+=(const Poly& o) { return combine(o, false); }
  Poly& operator-=(const Poly& o) { return combine(o, true); }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  Poly& operator*=(const S& s) {
    for (auto& a : c_) a *= s;
    normalize();
    return *this;
  }

  Poly& operator/=(const S& s) {
    if (is_zero_scalar(s)) throw std::domain_error("polynomial division by zero scalar");
    for (auto& a : c_) a /= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const S& s) { return a /= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_scalar(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }

  /// Structural equality (exact coefficient comparison).
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form, highest degree first, e.g. "x^2 - 2*x - 1/2".
  std::string to_string(const char* var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const S& a = c_[k];
      if (is_zero_scalar(a)) continue;
      const bool neg = sign_of(a) < 0;
      const S mag = abs_value(a);
      out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      const bool unit = mag == S(1);
      if (k == 0 || !unit) out << qsob::to_string(mag);
      if (k > 0) {
        if (!unit) out << "*";
        out << var;
        if (k > 1) out << "^" << k;
      }
      first = false;
    }
    return out.str();
  }

 private:
  static bool is_zero_scalar(const S& s) { return qsob::is_zero(s); }

  Poly& combine(const Poly& o, bool subtract) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
      if (subtract) {
        c_[k] -= o.c_[k];
      } else {
        c_[k] += o.c_[k];
      }
    }
    normalize();
    return *this;
  }

  // Exact: drop literal trailing zeros. Float: drop trailing coefficients
  // below 2^(-P/2) relative to the largest coefficient.
  void normalize() {
    if constexpr (FloatScalar<S>) {
      if (c_.empty()) return;
      Real scale(0L);
      mpfr_prec_t bits = Real::kMinPrecision;
      for (const auto& a : c_) {
        scale = std::max(scale, abs(a));
        bits = std::max(bits, a.precision());
      }
      if (scale.is_zero()) {
        c_.clear();
        return;
      }
      const Real cutoff = float_tolerance(bits) * scale;
      while (!c_.empty() && abs(c_.back()) <= cutoff) c_.pop_back();
    } else {
      while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
    }
  }

  std::vector<S> c_;
};

template <Scalar S>
struct DivMod {
  Poly<S> quotient;
  Poly<S> remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <Scalar S>
DivMod<S> divmod(const Poly<S>& a, const Poly<S>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<S>(), a};
  std::vector<S> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<S> quot(rem.size() - db);
  const S& lead = bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    S t = rem[k + db] / lead;
    if (!is_zero(t)) {
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= t * bc[j];
    }
    rem[k + db] = S(0);
    quot[k] = std::move(t);
  }
  rem.resize(db);
  return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

/// a / b when b divides a; otherwise throws DivisibilityError. In float mode
/// the remainder must vanish to 2^(-P/2) relative to the largest coefficient of a.
template <Scalar S>
Poly<S> divexact(const Poly<S>& a, const Poly<S>& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) {
    if constexpr (FloatScalar<S>) {
      Real scale(0L);
      for (const auto& c : a.coeffs()) scale = std::max(scale, abs(c));
      bool small = true;
      for (const auto& c : rem.coeffs()) small = small && scalar_equal(c, Real(0L), &scale);
      if (small) return quot;
    }
    throw DivisibilityError("nonzero remainder " + rem.to_string() + " dividing " + a.to_string() +
                            " by " + b.to_string());
  }
  return quot;
}

/// p / lc(p); the zero polynomial is returned unchanged.
template <Scalar S>
Poly<S> make_monic(const Poly<S>& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return p / p.leading();
}

/// Monic greatest common divisor over the rationals (zero iff both inputs are zero).
template <ExactScalar S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly<S> r = divmod(a, b).remainder;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

}  // namespace qsob
