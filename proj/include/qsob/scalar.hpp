#pragma once

// Arithmetic substrate: exact rationals (GMP) and fixed-precision reals (MPFR).
//
// The two scalar kinds are distinct C++ types, so an expression that mixes
// them does not compile. Generic code is written against the `Scalar` concept
// and obtains constants through `S(n)` (small integers are exact in both
// kinds) or through a QContext, which knows the working precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsob {

using Rational = mpq_class;

/// Real number with an explicit binary precision, backed by MPFR.
///
/// Binary operations round to the larger of the two operand precisions, so
/// exact small-integer constants built with `Real(long)` never degrade a
/// working-precision value.
class Real {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 64;

  Real() : Real(0L) {}

  explicit Real(long v, mpfr_prec_t bits = kMinPrecision) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
  }

  Real(const Rational& v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.precision());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal literal ("0.7", "1e-30", "-3.25") at the given precision.
  static Real parse(const std::string& text, mpfr_prec_t bits) {
    Real r(0L, bits);
    if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
      throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { return apply(o, mpfr_add); }
  Real& operator-=(const Real& o) { return apply(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return apply(o, mpfr_mul); }
  Real& operator/=(const Real& o) {
    if (o.is_zero()) throw std::domain_error("real division by zero");
    return apply(o, mpfr_div);
  }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend Real abs(const Real& a) {
    Real r(a);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend Real sqrt(const Real& a) {
    if (a.sign() < 0) throw std::domain_error("sqrt of a negative value");
    Real r(a);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  /// a * 2^e, exact.
  friend Real ldexp(const Real& a, long e) {
    Real r(a);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  /// Shortest decimal string that parses back to the identical value.
  std::string to_string() const {
    if (is_zero()) return "0";
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    const std::size_t max_digits = mpfr_get_str_ndigits(10, precision());
    for (std::size_t digits = 1; digits <= max_digits; ++digits) {
      std::string s = format_digits(digits);
      if (parse(s, precision()) == *this) return s;
    }
    return format_digits(max_digits);
  }

 private:
  template <class Op>
  Real& apply(const Real& o, Op op) {
    const mpfr_prec_t p = std::max(precision(), o.precision());
    if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  std::string format_digits(std::size_t digits) const {
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign_part;
    if (!mant.empty() && mant[0] == '-') {
      sign_part = "-";
      mant.erase(0, 1);
    }
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    // value = d.ddd * 10^e; positional for moderate e, scientific otherwise
    const long e = static_cast<long>(exp) - 1;
    const long len = static_cast<long>(mant.size());
    if (e >= 0 && e < 21) {
      if (len <= e + 1) return sign_part + mant + std::string(static_cast<std::size_t>(e + 1 - len), '0');
      return sign_part + mant.substr(0, static_cast<std::size_t>(e + 1)) + "." + mant.substr(static_cast<std::size_t>(e + 1));
    }
    if (e < 0 && e >= -6) return sign_part + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
    std::string out = sign_part + mant.substr(0, 1);
    if (len > 1) out += "." + mant.substr(1);
    return out + "e" + std::to_string(e);
  }

  mpfr_t v_;
};

template <class S>
concept ExactScalar = std::same_as<S, Rational>;

template <class S>
concept FloatScalar = std::same_as<S, Real>;

template <class S>
concept Scalar = ExactScalar<S> || FloatScalar<S>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Real& x) { return x.is_zero(); }

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const Real& x) { return x.sign(); }

inline Rational abs_value(const Rational& x) { return abs(x); }
inline Real abs_value(const Real& x) { return abs(x); }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const Real& x) { return x.to_double(); }

/// "p/q" (or "p" for integers) for rationals; shortest round-trip decimal for reals.
inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Real& x) { return x.to_string(); }

/// Parses "p/q", an integer, or a finite decimal ("0.7", "-1.25e-3") into an exact rational.
inline Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    if (text.find('/') != std::string::npos) {
      Rational r(text, 10);
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      return r;
    }
    std::string mant = text;
    long exp10 = 0;
    if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
      std::size_t used = 0;
      exp10 = std::stol(mant.substr(e + 1), &used);
      if (used != mant.size() - e - 1) throw std::invalid_argument("bad exponent");
      mant = mant.substr(0, e);
    }
    if (auto dot = mant.find('.'); dot != std::string::npos) {
      exp10 -= static_cast<long>(mant.size() - dot - 1);
      mant.erase(dot, 1);
    }
    if (mant == "-" || mant == "+" || mant.empty()) throw std::invalid_argument("no digits");
    if (mant[0] == '+') mant.erase(0, 1);
    mpz_class digits(mant, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Rational r = exp10 < 0 ? Rational(digits, scale) : Rational(digits * scale);
    r.canonicalize();
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational literal: '" + raw + "'");
  }
}

/// base^e by repeated squaring; negative exponents invert.
template <Scalar S>
S ipow(const S& base, long e) {
  if (e < 0) return S(1) / ipow(base, -e);
  S result(1);
  S b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

/// Relative comparison tolerance for a working precision of `bits`: 2^(-bits/2).
inline Real float_tolerance(mpfr_prec_t bits) { return ldexp(Real(1L, bits), -static_cast<long>(bits / 2)); }

/// Equality in the scalar's own sense: identical for rationals, relative
/// 2^(-P/2) of `scale` (or of max(|a|,|b|) when no scale is given) for reals.
inline bool scalar_equal(const Rational& a, const Rational& b) { return a == b; }
inline bool scalar_equal(const Real& a, const Real& b, const Real* scale = nullptr) {
  const mpfr_prec_t bits = std::max(a.precision(), b.precision());
  Real ref = scale ? abs(*scale) : std::max(abs(a), abs(b));
  if (ref.is_zero()) return a == b;
  return abs(a - b) <= float_tolerance(bits) * ref;
}

}  // namespace qsob
