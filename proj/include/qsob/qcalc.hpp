#pragma once

// q-calculus toolbox: q-numbers and factorials, q-Pochhammer symbols (finite
// and truncated infinite), q-binomials, q-falling factorials, the
// Jackson-Hahn-Cigler q-subtraction power, Euler-Jackson q-derivatives, the
// finite q-Taylor expansion of a polynomial, and the Jackson q-integral over
// [-1,1] against the weight (qx,-qx;q)_inf.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsob/context.hpp"
#include "qsob/poly.hpp"
#include "qsob/ratfn.hpp"

namespace qsob {

/// [m]_q = (1 - q^m)/(1 - q) for any integer m (negative m included).
template <Scalar S>
S q_number_ext(long m, const QContext<S>& ctx) {
  if (m == 0) return S(0);
  const S& q = ctx.q();
  return (S(1) - ipow(q, m)) / (S(1) - q);
}

/// [n]_q for n >= 0.
template <Scalar S>
S q_number(long n, const QContext<S>& ctx) {
  if (n < 0) throw std::invalid_argument("q_number: negative index " + std::to_string(n));
  // 1 + q + ... + q^(n-1): exact in both modes, no cancellation.
  S acc(0);
  S pw(1);
  for (long k = 0; k < n; ++k) {
    acc += pw;
    pw *= ctx.q();
  }
  return acc;
}

template <Scalar S>
S q_factorial(long n, const QContext<S>& ctx) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative index");
  S acc(1);
  for (long k = 2; k <= n; ++k) acc *= q_number(k, ctx);
  return acc;
}

/// (a;q)_n = prod_{j<n} (1 - a q^j).
template <Scalar S>
S q_pochhammer(const S& a, long n, const QContext<S>& ctx) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  S acc(1);
  S t = a;
  for (long j = 0; j < n; ++j) {
    acc *= S(1) - t;
    t *= ctx.q();
  }
  return acc;
}

/// (a_1,...,a_r;q)_n
template <Scalar S>
S q_pochhammer(std::initializer_list<S> as, long n, const QContext<S>& ctx) {
  S acc(1);
  for (const auto& a : as) acc *= q_pochhammer(a, n, ctx);
  return acc;
}

struct InfiniteProduct {
  Real value;
  long terms = 0;
  /// Bound on |value/(a;q)_inf - 1|.
  Real relative_tail_bound;
};

/// (a;q)_inf truncated after J factors, J doubled from 16 until the relative
/// tail bound |a|q^J / ((1-q)(1-|a|q^J)) (inflated to e^b-1 <= b/(1-b)) is at
/// most tail_tol. Accepts any a for which such a J exists.
inline InfiniteProduct q_pochhammer_inf_eval(const Real& a, const FloatContext& ctx) {
  const Real& q = ctx.q();
  const Real one(1L);
  const Real abs_a = abs(a);
  long terms = 16;
  Real bound(0L);
  for (;;) {
    const Real t = abs_a * ipow(q, terms);
    if (t < one) {
      const Real b = t / ((one - q) * (one - t));
      if (b < one) {
        bound = b / (one - b);
        if (bound <= ctx.tail_tol()) break;
      }
    }
    if (terms > (1L << 24)) throw std::runtime_error("q_pochhammer_inf: truncation did not converge");
    terms *= 2;
  }
  Real acc(1L, ctx.precision());
  Real t = a;
  for (long j = 0; j < terms; ++j) {
    const Real factor = one - t;
    if (factor.is_zero()) {
      throw std::domain_error("q_pochhammer_inf: a*q^" + std::to_string(j) + " = 1");
    }
    acc *= factor;
    t *= q;
  }
  return {std::move(acc), terms, std::move(bound)};
}

inline Real q_pochhammer_inf(const Real& a, const FloatContext& ctx) {
  return q_pochhammer_inf_eval(a, ctx).value;
}

/// (a_1,...,a_r;q)_inf, evaluated factorwise.
inline Real q_pochhammer_inf(std::initializer_list<Real> as, const FloatContext& ctx) {
  Real acc(1L, ctx.precision());
  for (const auto& a : as) acc *= q_pochhammer_inf(a, ctx);
  return acc;
}

/// Gaussian binomial [n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!), 0 <= k <= n.
template <Scalar S>
S q_binomial(long n, long k, const QContext<S>& ctx) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  return q_factorial(n, ctx) / (q_factorial(k, ctx) * q_factorial(n - k, ctx));
}

/// q-falling factorial [s]_q^(n) = (q^-s;q)_n (q-1)^-n q^(ns - C(n,2)).
template <Scalar S>
S q_falling(long s, long n, const QContext<S>& ctx) {
  if (n < 0) throw std::invalid_argument("q_falling: negative order");
  const S& q = ctx.q();
  const long binom = n * (n - 1) / 2;
  return q_pochhammer(ipow(q, -s), n, ctx) * ipow(S(q - S(1)), -n) * ipow(q, n * s - binom);
}

/// (x [-]_q y)^n = prod_{j<n} (x - y q^j), as a polynomial in x.
template <Scalar S>
Poly<S> q_sub_power(const S& y, long n, const QContext<S>& ctx) {
  if (n < 0) throw std::invalid_argument("q_sub_power: negative exponent");
  Poly<S> acc = Poly<S>::constant(S(1));
  S t = y;
  for (long j = 0; j < n; ++j) {
    acc *= Poly<S>(std::vector<S>{-t, S(1)});
    t *= ctx.q();
  }
  return acc;
}

/// Euler-Jackson q-derivative, coefficientwise: x^k -> [k]_q x^(k-1).
template <Scalar S>
Poly<S> q_derivative(const Poly<S>& p, const QContext<S>& ctx) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly<S>();
  std::vector<S> out(c.size() - 1);
  S qk(1);   // q^(k-1)
  S num(0);  // [k]_q
  for (std::size_t k = 1; k < c.size(); ++k) {
    num += qk;
    qk *= ctx.q();
    out[k - 1] = c[k] * num;
  }
  return Poly<S>(std::move(out));
}

/// D_q^k p
template <Scalar S>
Poly<S> q_derivative(const Poly<S>& p, long k, const QContext<S>& ctx) {
  Poly<S> r = p;
  for (long i = 0; i < k && !r.is_zero(); ++i) r = q_derivative(r, ctx);
  return r;
}

/// D_{1/q}: x^k -> [k]_{1/q} x^(k-1).
template <Scalar S>
Poly<S> q_derivative_inv(const Poly<S>& p, const QContext<S>& ctx) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly<S>();
  const S qinv = S(1) / ctx.q();
  std::vector<S> out(c.size() - 1);
  S pw(1);
  S num(0);
  for (std::size_t k = 1; k < c.size(); ++k) {
    num += pw;
    pw *= qinv;
    out[k - 1] = c[k] * num;
  }
  return Poly<S>(std::move(out));
}

/// D_q r = (r(qx) - r(x)) / ((q-1) x), in rational-function arithmetic.
template <Scalar S>
RationalFn<S> q_derivative(const RationalFn<S>& r, const QContext<S>& ctx) {
  const S& q = ctx.q();
  const RationalFn<S> diff = r.scaled_argument(q) - r;
  return diff / RationalFn<S>(Poly<S>::monomial(S(q - S(1)), 1));
}

/// Coefficients t_k = (D_q^k p)(a) / [k]_q!, k = 0..deg p, of the finite
/// q-Taylor expansion p(x) = sum_k t_k (x [-]_q a)^k.
template <Scalar S>
std::vector<S> q_taylor(const Poly<S>& p, const S& a, const QContext<S>& ctx) {
  std::vector<S> t;
  if (p.is_zero()) return {S(0)};
  Poly<S> d = p;
  S fact(1);
  for (long k = 0; k <= p.degree(); ++k) {
    if (k > 0) {
      d = q_derivative(d, ctx);
      fact *= q_number(k, ctx);
    }
    t.push_back(d.eval(a) / fact);
  }
  return t;
}

/// sum_k t_k (x [-]_q a)^k
template <Scalar S>
Poly<S> q_taylor_reconstruct(const std::vector<S>& t, const S& a, const QContext<S>& ctx) {
  Poly<S> acc;
  for (std::size_t k = 0; k < t.size(); ++k) acc += q_sub_power(a, static_cast<long>(k), ctx) * t[k];
  return acc;
}

struct WeightEval {
  Real point;
  Real value;
  long truncation_terms = 0;
  /// Absolute error bound; the weight is at most 1 on [-1,1].
  Real tail_bound;
};

/// (qx, -qx; q)_inf at a point of [-1,1].
inline WeightEval hermite_weight(const Real& x, const FloatContext& ctx) {
  if (abs(x) > Real(1L)) throw std::domain_error("hermite_weight: point outside [-1,1]");
  const Real qx = ctx.q() * x;
  const InfiniteProduct plus = q_pochhammer_inf_eval(qx, ctx);
  const InfiniteProduct minus = q_pochhammer_inf_eval(-qx, ctx);
  Real value = plus.value * minus.value;
  // (1+e1)(1+e2) - 1 <= e1 + e2 + e1 e2
  Real rel = plus.relative_tail_bound + minus.relative_tail_bound +
             plus.relative_tail_bound * minus.relative_tail_bound;
  Real bound = rel * abs(value);
  return {x, std::move(value), std::max(plus.terms, minus.terms), std::move(bound)};
}

struct JacksonIntegral {
  Real value;
  long terms = 0;
  /// Bound on |value - exact integral| from truncation and weight evaluation.
  Real tail_bound;
  /// Integral of |f| against the weight over the evaluated lattice points.
  Real abs_scale;
};

/// int_{-1}^{1} f(x) (qx,-qx;q)_inf d_q x
///   = (1-q) sum_{k>=0} q^k [f(q^k) w(q^k) + f(-q^k) w(-q^k)].
///
/// The sum is cut after K lattice levels, K doubled from 32 until
/// 2 M q^K <= tail_tol * abs_scale, where M is twice the largest sampled |f w|.
inline JacksonIntegral jackson_weighted_integral(const Poly<Real>& f, const FloatContext& ctx) {
  const Real& q = ctx.q();
  const mpfr_prec_t bits = ctx.precision();
  const Real one(1L);
  std::vector<Real> weights;  // w(q^k) = w(-q^k)
  std::vector<Real> weight_err;
  std::vector<Real> fpos;
  std::vector<Real> fneg;
  Real point(1L, bits);  // q^k for the next level
  long levels = 32;
  for (;;) {
    while (static_cast<long>(weights.size()) < levels) {
      WeightEval w = hermite_weight(point, ctx);
      weights.push_back(w.value);
      weight_err.push_back(w.tail_bound);
      fpos.push_back(f.eval(point));
      fneg.push_back(f.eval(-point));
      point *= q;
    }
    Real sum(0L, bits);
    Real abs_sum(0L, bits);
    Real err_sum(0L, bits);
    Real sup(0L, bits);
    Real qk(1L, bits);
    for (long k = 0; k < levels; ++k) {
      const Real a = fpos[k] * weights[k];
      const Real b = fneg[k] * weights[k];
      sum += qk * (a + b);
      abs_sum += qk * (abs(a) + abs(b));
      err_sum += qk * (abs(fpos[k]) + abs(fneg[k])) * weight_err[k];
      sup = std::max(sup, std::max(abs(a), abs(b)));
      qk *= q;
    }
    const Real scale = one - q;
    const Real abs_scale = scale * abs_sum;
    const Real truncation = Real(4L) * sup * qk;  // 2 * (2 * sampled sup) * q^K
    if (truncation <= ctx.tail_tol() * abs_scale || (sup.is_zero())) {
      Real bound = truncation + scale * err_sum;
      return {scale * sum, levels, std::move(bound), abs_scale};
    }
    if (levels > (1L << 20)) throw std::runtime_error("jackson_weighted_integral: did not converge");
    levels *= 2;
  }
}

}  // namespace qsob
