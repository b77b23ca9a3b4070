#pragma once

// Closed-form two-term expansions of the first-order kernel q-derivatives:
//   K_{n-1}^(0,1)(x,y) = A(x) H_n(x) + B(x) H_{n-1}(x)
//   K_{n-1}^(1,1)(x,y) = C(x) H_n(x) + D(x) H_{n-1}(x)
// with y a bound numeric value. Every result is checked against the
// kernel sums of HermiteFamily before it is returned.

#include <stdexcept>
#include <string>
#include <vector>

#include "qsob/linear.hpp"
#include "qsob/qhermite.hpp"
#include "qsob/ratfn.hpp"

namespace qsob {

/// Raised when a closed form cannot be reconciled with its defining sum.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

template <ExactScalar S>
struct KernelCoeffs {
  long n = 0;
  S y;
  RationalFn<S> A, B, C, D;
  /// False when A, B came from the linear-system fallback.
  bool closed_form = true;
};

namespace detail {

template <ExactScalar S>
std::string kernel_case(long n, const S& y, const QContext<S>& ctx) {
  return "n=" + std::to_string(n) + " y=" + to_string(y) + " q=" + to_string(ctx.q());
}

}  // namespace detail

/// Solves (x [-]_q y)^2 K_{n-1}^(0,1)(x,y) = a(x) H_n + b(x) H_{n-1} with
/// deg a, deg b <= 1 and returns (a, b) / (x [-]_q y)^2.
template <ExactScalar S>
std::pair<RationalFn<S>, RationalFn<S>> coeff_AB_by_linear_system(const HermiteFamily<S>& fam, long n,
                                                                   const S& y) {
  if (n < 1) throw std::invalid_argument("coeff_AB requires n >= 1");
  const auto& ctx = fam.context();
  const Poly<S> qsub2 = q_sub_power(y, 2, ctx);
  const Poly<S> target = qsub2 * fam.kernel_poly(n - 1, 0, 1, y);
  const Poly<S> x = Poly<S>::x();
  const Poly<S> basis[4] = {fam.hermite(n), x * fam.hermite(n), fam.hermite(n - 1), x * fam.hermite(n - 1)};
  const std::size_t eqs = static_cast<std::size_t>(n) + 2;
  std::vector<std::vector<S>> rows(eqs, std::vector<S>(4));
  std::vector<S> rhs(eqs);
  for (std::size_t d = 0; d < eqs; ++d) {
    for (std::size_t u = 0; u < 4; ++u) rows[d][u] = basis[u].coeff(d);
    rhs[d] = target.coeff(d);
  }
  const auto sol = solve_linear(std::move(rows), std::move(rhs));
  if (sol.status != SolveStatus::kUnique) {
    throw StructuralError("kernel (0,1) expansion has no unique two-term solution at " +
                          detail::kernel_case(n, y, ctx));
  }
  const Poly<S> a(std::vector<S>{sol.x[0], sol.x[1]});
  const Poly<S> b(std::vector<S>{sol.x[2], sol.x[3]});
  return {RationalFn<S>::make(a, qsub2), RationalFn<S>::make(b, qsub2)};
}

/// A_n, B_n of the (0,1) kernel expansion, n >= 1:
///   A = [H_{n-1}(y) + (D_q H_{n-1})(y)(x - y)] / (nu_{n-1} (x [-]_q y)^2)
///   B = -[H_n(y) + (D_q H_n)(y)(x - y)] / (nu_{n-1} (x [-]_q y)^2)
template <ExactScalar S>
KernelCoeffs<S> coeff_AB(const HermiteFamily<S>& fam, long n, const S& y) {
  if (n < 1) throw std::invalid_argument("coeff_AB requires n >= 1");
  const auto& ctx = fam.context();
  const Poly<S> den = q_sub_power(y, 2, ctx) * fam.norm_sq_normalized(n - 1);
  const Poly<S> x_minus_y = q_sub_power(y, 1, ctx);
  const auto taylor1 = [&](long m) {
    return Poly<S>::constant(fam.eval(m, y)) + x_minus_y * fam.dq_hermite(m, 1).eval(y);
  };
  KernelCoeffs<S> out;
  out.n = n;
  out.y = y;
  out.A = RationalFn<S>::make(taylor1(n - 1), den);
  out.B = RationalFn<S>::make(-taylor1(n), den);

  const RationalFn<S> expected(fam.kernel_poly(n - 1, 0, 1, y));
  if (out.A * RationalFn<S>(fam.hermite(n)) + out.B * RationalFn<S>(fam.hermite(n - 1)) != expected) {
    auto [a, b] = coeff_AB_by_linear_system(fam, n, y);
    out.A = std::move(a);
    out.B = std::move(b);
    out.closed_form = false;
  }
  return out;
}

/// Adds C_{1,n}, D_{1,n} of the (1,1) kernel expansion, n >= 2:
///   C = D_q A - [n-1]_q / gamma_{n-1} * B(qx)
///   D = [n]_q A(qx) + [n-1]_q / gamma_{n-1} * x B(qx) + D_q B
template <ExactScalar S>
KernelCoeffs<S> coeff_CD(const HermiteFamily<S>& fam, long n, const S& y) {
  if (n < 2) throw std::invalid_argument("coeff_CD requires n >= 2");
  const auto& ctx = fam.context();
  const S& q = ctx.q();
  KernelCoeffs<S> out = coeff_AB(fam, n, y);
  const S shift = q_number(n - 1, ctx) / fam.gamma(n - 1);
  const RationalFn<S> Aq = out.A.scaled_argument(q);
  const RationalFn<S> Bq = out.B.scaled_argument(q);
  const RationalFn<S> x(Poly<S>::x());
  out.C = q_derivative(out.A, ctx) - shift * Bq;
  out.D = q_number(n, ctx) * Aq + shift * (x * Bq) + q_derivative(out.B, ctx);

  const RationalFn<S> expected(fam.kernel_poly(n - 1, 1, 1, y));
  if (out.C * RationalFn<S>(fam.hermite(n)) + out.D * RationalFn<S>(fam.hermite(n - 1)) != expected) {
    throw StructuralError("kernel (1,1) expansion disagrees with the kernel sum at " +
                          detail::kernel_case(n, y, ctx));
  }
  return out;
}

/// K_{n-1}^(1,1)(alpha, alpha) with normalized norms; n >= 1.
template <Scalar S>
S kernel11_at(const HermiteFamily<S>& fam, long n, const S& alpha) {
  if (n < 1) throw std::invalid_argument("kernel11_at requires n >= 1");
  return fam.kernel_poly(n - 1, 1, 1, alpha).eval(alpha);
}

}  // namespace qsob
