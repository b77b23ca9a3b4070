#pragma once

#include <stdexcept>
#include <string>

#include "qsob/scalar.hpp"

namespace qsob {

/// Fixed base q in (0,1) plus the arithmetic mode it implies.
///
/// Exact contexts carry q as a rational. Float contexts carry q rounded to the
/// working precision (at least 64 bits) and a positive truncation tolerance for
/// infinite products and Jackson sums.
template <Scalar S>
class QContext {
 public:
  static QContext exact(const Rational& q)
    requires ExactScalar<S>
  {
    check_q(q);
    return QContext(q, Rational(0), 0);
  }

  static QContext floating(const Rational& q, mpfr_prec_t precision_bits, const Rational& tail_tol)
    requires FloatScalar<S>
  {
    check_q(q);
    if (precision_bits < Real::kMinPrecision) {
      throw std::invalid_argument("float precision must be at least 64 bits, got " +
                                  std::to_string(precision_bits));
    }
    if (sgn(tail_tol) <= 0) throw std::invalid_argument("tail_tol must be positive");
    return QContext(Real(q, precision_bits), Real(tail_tol, precision_bits), precision_bits);
  }

  const S& q() const { return q_; }
  const S& tail_tol() const { return tail_tol_; }

  /// Working precision in bits (0 for exact contexts).
  mpfr_prec_t precision() const { return bits_; }

  /// Brings an exact rational into this context's arithmetic.
  S lift(const Rational& v) const {
    if constexpr (ExactScalar<S>) {
      return v;
    } else {
      return Real(v, bits_);
    }
  }

  S scalar(long v) const { return lift(Rational(v)); }

 private:
  QContext(S q, S tol, mpfr_prec_t bits) : q_(std::move(q)), tail_tol_(std::move(tol)), bits_(bits) {}

  static void check_q(const Rational& q) {
    if (sgn(q) <= 0 || q >= 1) throw std::invalid_argument("q must lie in (0,1), got " + q.get_str());
  }

  S q_;
  S tail_tol_;
  mpfr_prec_t bits_;
};

using ExactContext = QContext<Rational>;
using FloatContext = QContext<Real>;

}  // namespace qsob
