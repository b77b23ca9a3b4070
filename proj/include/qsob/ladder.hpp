#pragma once

// Annihilation operator a_n = (1/F4) (Xi D_q - E4 I), with a_n S_n = S_{n-1}.

#include <stdexcept>
#include <string>

#include "qsob/sobolev.hpp"

namespace qsob {

/// Raised when the lowering identity fails to produce S_{n-1} exactly.
struct LadderError : std::logic_error {
  using std::logic_error::logic_error;
};

template <ExactScalar S>
struct AnnihilationOperator {
  long n = 0;
  RationalFn<S> Xi, E4, F4;

  /// Operator for degree n built from the connection data; rejects F4 == 0.
  static AnnihilationOperator from(const ConnectionCoeffs<S>& cc) {
    if (cc.F4.is_zero()) {
      throw LadderError("F4 vanishes identically at n=" + std::to_string(cc.n) + "; the operator is undefined");
    }
    return {cc.n, cc.Xi, cc.E4, cc.F4};
  }

  static AnnihilationOperator from(const SobolevFamily<S>& sfam, long n) { return from(sfam.connection_coeffs(n)); }

  /// (Xi D_q p - E4 p) / F4 for an arbitrary polynomial p.
  RationalFn<S> apply(const Poly<S>& p, const QContext<S>& ctx) const {
    return (Xi * RationalFn<S>(q_derivative(p, ctx)) - E4 * RationalFn<S>(p)) / F4;
  }
};

/// a_n S_n, required to be the polynomial S_{n-1}.
template <ExactScalar S>
Poly<S> annihilate(const AnnihilationOperator<S>& op, const SobolevFamily<S>& sfam) {
  if (op.n < 2) throw std::invalid_argument("annihilate requires n >= 2");
  const RationalFn<S> r = op.apply(sfam.s_poly(op.n), sfam.context());
  if (!r.is_polynomial()) {
    throw LadderError("a_" + std::to_string(op.n) + " S_n is not a polynomial: " + r.to_string());
  }
  Poly<S> p = r.as_polynomial();
  if (p != sfam.s_poly(op.n - 1)) {
    throw LadderError("a_" + std::to_string(op.n) + " S_n = " + p.to_string() + " differs from S_{n-1} = " +
                      sfam.s_poly(op.n - 1).to_string());
  }
  return p;
}

/// Xi D_q S_n - E4 S_n - F4 S_{n-1}; the zero function when the identity holds.
template <ExactScalar S>
RationalFn<S> residual(const AnnihilationOperator<S>& op, const SobolevFamily<S>& sfam) {
  if (op.n < 2) throw std::invalid_argument("residual requires n >= 2");
  const auto& ctx = sfam.context();
  const Poly<S> sn = sfam.s_poly(op.n);
  return op.Xi * RationalFn<S>(q_derivative(sn, ctx)) - op.E4 * RationalFn<S>(sn) -
         op.F4 * RationalFn<S>(sfam.s_poly(op.n - 1));
}

}  // namespace qsob
