#pragma once

// Monic q-Hermite I polynomials H_n(x;q):
//   x H_n = H_{n+1} + gamma_n H_{n-1},  gamma_n = q^(n-1) (1 - q^n),
//   H_{-1} = 0, H_0 = 1,
// orthogonal on [-1,1] against (qx,-qx;q)_inf d_q x with
//   ||H_n||^2 = c * nu_n,  c = (1-q)(q,-1,-q;q)_inf,  nu_n = (q;q)_n q^C(n,2).
//
// All kernel and norm data here use the normalized norms nu_n, which are
// rational whenever q is; c is only available in float mode.

#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsob/context.hpp"
#include "qsob/poly.hpp"
#include "qsob/qcalc.hpp"

namespace qsob {

/// c = (1-q)(q,-1,-q;q)_inf with its relative error bound.
struct NormConstant {
  Real c;
  Real relative_tail_bound;
};

inline NormConstant hermite_norm_constant(const FloatContext& ctx) {
  const Real& q = ctx.q();
  const Real one(1L);
  const InfiniteProduct a = q_pochhammer_inf_eval(q, ctx);
  const InfiniteProduct b = q_pochhammer_inf_eval(Real(-1L, ctx.precision()), ctx);
  const InfiniteProduct d = q_pochhammer_inf_eval(-q, ctx);
  Real rel = (one + a.relative_tail_bound) * (one + b.relative_tail_bound) * (one + d.relative_tail_bound) - one;
  return {(one - q) * a.value * b.value * d.value, std::move(rel)};
}

template <Scalar S>
class HermiteFamily {
 public:
  using PolyT = Poly<S>;

  /// Builds H_0..H_max_degree eagerly; higher degrees are filled on demand.
  explicit HermiteFamily(QContext<S> ctx, long max_degree = 0)
      : ctx_(std::move(ctx)), lock_(std::make_unique<std::mutex>()) {
    polys_.push_back(PolyT::constant(S(1)));
    nus_.push_back(S(1));
    gammas_.push_back(S(0));  // gamma_0 is never used by the recurrence
    ensure(max_degree);
  }

  const QContext<S>& context() const { return ctx_; }

  const PolyT& hermite(long n) const {
    check_index(n);
    ensure(n);
    std::lock_guard<std::mutex> g(*lock_);
    return polys_[static_cast<std::size_t>(n)];
  }

  /// gamma_n = q^(n-1)(1 - q^n), n >= 1.
  S gamma(long n) const {
    if (n < 1) throw std::invalid_argument("gamma_n requires n >= 1");
    ensure(n);
    std::lock_guard<std::mutex> g(*lock_);
    return gammas_[static_cast<std::size_t>(n)];
  }

  /// nu_n = (q;q)_n q^C(n,2)
  S norm_sq_normalized(long n) const {
    check_index(n);
    ensure(n);
    std::lock_guard<std::mutex> g(*lock_);
    return nus_[static_cast<std::size_t>(n)];
  }

  /// ||H_n||^2 = c nu_n.
  Real norm_sq_absolute(long n) const
    requires FloatScalar<S>
  {
    return norm_constant().c * norm_sq_normalized(n);
  }

  NormConstant norm_constant() const
    requires FloatScalar<S>
  {
    return hermite_norm_constant(ctx_);
  }

  S eval(long n, const S& x0) const { return hermite(n).eval(x0); }

  /// D_q^k H_n = [n]_q^(k) H_{n-k} (zero for k > n).
  PolyT dq_hermite(long n, long k) const {
    if (k < 0) throw std::invalid_argument("dq_hermite: negative order");
    if (k > n) return PolyT();
    if (k == 0) return hermite(n);
    return hermite(n - k) * q_falling(n, k, ctx_);
  }

  /// sigma D_q D_{1/q} H_n + tau D_q H_n + lambda_{n,q} H_n with sigma = x^2 - 1,
  /// tau = x/(1-q), lambda_{n,q} = [n]_q([1-n]_q - 1/(1-q)). Zero for a correct family.
  PolyT difference_eq_residual(long n) const {
    const S& q = ctx_.q();
    const PolyT& h = hermite(n);
    const PolyT sigma(std::vector<S>{S(-1), S(0), S(1)});
    const PolyT tau = PolyT::monomial(S(S(1) / (S(1) - q)), 1);
    const S lambda = q_number(n, ctx_) * (q_number_ext(1 - n, ctx_) - S(1) / (S(1) - q));
    return sigma * q_derivative(q_derivative_inv(h, ctx_), ctx_) + tau * q_derivative(h, ctx_) + h * lambda;
  }

  /// K_n^(i,j)(x, y) = sum_{k<=n} (D_q^i H_k)(x) (D_q^j H_k)(y) / nu_k, as a polynomial in x.
  PolyT kernel_poly(long n, int i, int j, const S& y) const {
    if (n < 0) throw std::invalid_argument("kernel_poly: negative degree");
    if (i < 0 || i > 1 || j < 0 || j > 1) throw std::invalid_argument("kernel_poly: orders must be 0 or 1");
    PolyT acc;
    for (long k = 0; k <= n; ++k) {
      const S at_y = dq_hermite(k, j).eval(y);
      if (is_zero(at_y)) continue;
      acc += dq_hermite(k, i) * S(at_y / norm_sq_normalized(k));
    }
    return acc;
  }

  /// Christoffel-Darboux form (H_{n+1}(x)H_n(y) - H_{n+1}(y)H_n(x)) / ((x - y) nu_n).
  PolyT kernel_cd(long n, const S& y) const {
    if (n < 0) throw std::invalid_argument("kernel_cd: negative degree");
    const PolyT& hn = hermite(n);
    const PolyT& hn1 = hermite(n + 1);
    const PolyT numer = hn1 * hn.eval(y) - hn * hn1.eval(y);
    const PolyT x_minus_y(std::vector<S>{S(-y), S(1)});
    return divexact(numer, x_minus_y) / norm_sq_normalized(n);
  }

 private:
  static void check_index(long n) {
    if (n < 0) throw std::invalid_argument("negative degree " + std::to_string(n));
  }

  void ensure(long n) const {
    std::lock_guard<std::mutex> g(*lock_);
    const S& q = ctx_.q();
    while (static_cast<long>(polys_.size()) <= n) {
      const long m = static_cast<long>(polys_.size()) - 1;  // have H_0..H_m, build H_{m+1}
      const long next = m + 1;
      gammas_.push_back(ipow(q, next - 1) * (S(1) - ipow(q, next)));
      nus_.push_back(nus_.back() * gammas_.back());
      PolyT h = PolyT::x() * polys_[static_cast<std::size_t>(m)];
      if (m >= 1) h -= polys_[static_cast<std::size_t>(m - 1)] * gammas_[static_cast<std::size_t>(m)];
      polys_.push_back(std::move(h));
    }
  }

  QContext<S> ctx_;
  std::unique_ptr<std::mutex> lock_;
  mutable std::deque<PolyT> polys_;
  mutable std::deque<S> gammas_;
  mutable std::deque<S> nus_;
};

}  // namespace qsob
