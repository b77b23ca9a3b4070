#pragma once

// q-Hermite I Sobolev-type polynomials S_n(x;q): monic, orthogonal under
//   <f,g>_lambda = int f g (qx,-qx;q)_inf d_q x + lambda (D_q f)(alpha) (D_q g)(alpha)
// with |alpha| > 1 and lambda > 0.
//
// Exact mode works with normalized norms nu_k and the effective mass
// lambda~ = lambda / c, c = (1-q)(q,-1,-q;q)_inf; S_n depends on (lambda, K)
// only through lambda K = lambda~ K^, so the family is the same. Float mode
// also accepts the raw mass and converts it.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsob/kernels.hpp"
#include "qsob/linear.hpp"
#include "qsob/qhermite.hpp"
#include "qsob/ratfn.hpp"

namespace qsob {

enum class MassConvention { kEffective, kRaw };

inline const char* to_string(MassConvention c) { return c == MassConvention::kEffective ? "effective" : "raw"; }

template <Scalar S>
struct SobolevParams {
  S alpha;
  S mass;
  MassConvention convention = MassConvention::kEffective;

  /// Validated parameters: |alpha| > 1, mass > 0; exact mode requires the effective mass.
  static SobolevParams make(S alpha, S mass, MassConvention convention) {
    if (!(abs_value(alpha) > S(1))) {
      throw std::invalid_argument("mass point alpha must lie outside [-1,1], got " + qsob::to_string(alpha));
    }
    if (!(sign_of(mass) > 0)) throw std::invalid_argument("mass must be positive, got " + qsob::to_string(mass));
    if (ExactScalar<S> && convention == MassConvention::kRaw) {
      throw std::invalid_argument(
          "exact mode needs the effective mass lambda/c; the raw mass lambda is only accepted in float mode");
    }
    return {std::move(alpha), std::move(mass), convention};
  }

  /// Zero mass (S_n = H_n). Only for tests of the degenerate limit.
  static SobolevParams degenerate_for_testing(S alpha) { return {std::move(alpha), S(0), MassConvention::kEffective}; }
};

/// Coefficients c_k with p = sum_k c_k H_k, by leading-term elimination.
template <Scalar S>
std::vector<S> expand_in_hermite(const HermiteFamily<S>& fam, const Poly<S>& p) {
  if (p.is_zero()) return {};
  std::vector<S> rest = p.coeffs();
  std::vector<S> out(rest.size());
  for (std::size_t k = rest.size(); k-- > 0;) {
    const S c = rest[k];
    out[k] = c;
    if (is_zero(c)) continue;
    const auto& h = fam.hermite(static_cast<long>(k)).coeffs();
    for (std::size_t i = 0; i < h.size(); ++i) rest[i] -= c * h[i];
  }
  return out;
}

template <Scalar S>
struct ConnectionCoeffs {
  long n = 0;
  RationalFn<S> E1, F1, E2, F2, E3, F3, Xi, E4, F4;
};

/// Recomputes Xi, E4, F4 from the E/F pairs 1..3.
template <ExactScalar S>
void recompute_determinants(ConnectionCoeffs<S>& cc) {
  cc.Xi = det2(cc.E1, cc.E2, cc.F1, cc.F2);
  cc.E4 = -det2(cc.E2, cc.E3, cc.F2, cc.F3);
  cc.F4 = det2(cc.E1, cc.E3, cc.F1, cc.F3);
}

template <Scalar S>
class SobolevFamily {
 public:
  using PolyT = Poly<S>;

  SobolevFamily(std::shared_ptr<const HermiteFamily<S>> base, SobolevParams<S> params)
      : base_(std::move(base)), params_(std::move(params)), lock_(std::make_unique<std::mutex>()) {
    if (!base_) throw std::invalid_argument("SobolevFamily needs a HermiteFamily");
    if constexpr (FloatScalar<S>) {
      const Real c = base_->norm_constant().c;
      if (params_.convention == MassConvention::kRaw) {
        effective_ = params_.mass / c;
        raw_ = params_.mass;
      } else {
        effective_ = params_.mass;
        raw_ = params_.mass * c;
      }
    } else {
      effective_ = params_.mass;
    }
  }

  const HermiteFamily<S>& base() const { return *base_; }
  const SobolevParams<S>& params() const { return params_; }
  const QContext<S>& context() const { return base_->context(); }
  const S& alpha() const { return params_.alpha; }

  /// lambda~ = lambda / c
  const S& effective_mass() const { return effective_; }

  /// lambda (float mode only)
  const Real& raw_mass() const
    requires FloatScalar<S>
  {
    return raw_;
  }

  /// Exact: sum_k f_k g_k nu_k + lambda~ (D_q f)(alpha)(D_q g)(alpha), f_k, g_k the H-expansions.
  /// Float: Jackson integral of f g + lambda (D_q f)(alpha)(D_q g)(alpha).
  S inner_product(const PolyT& f, const PolyT& g) const {
    const auto& ctx = context();
    const S point = q_derivative(f, ctx).eval(alpha()) * q_derivative(g, ctx).eval(alpha());
    if constexpr (ExactScalar<S>) {
      const auto fe = expand_in_hermite(*base_, f);
      const auto ge = expand_in_hermite(*base_, g);
      S acc(0);
      for (std::size_t k = 0; k < std::min(fe.size(), ge.size()); ++k) {
        if (is_zero(fe[k]) || is_zero(ge[k])) continue;
        acc += fe[k] * ge[k] * base_->norm_sq_normalized(static_cast<long>(k));
      }
      return acc + effective_ * point;
    } else {
      return jackson_weighted_integral(f * g, ctx).value + raw_ * point;
    }
  }

  /// (D_q S_n)(alpha) = [n]_q H_{n-1}(alpha) / (1 + lambda~ K^_{n-1}^(1,1)(alpha, alpha)), n >= 1.
  S dq_s_at_alpha(long n) const {
    if (n < 1) throw std::invalid_argument("dq_s_at_alpha requires n >= 1");
    {
      std::lock_guard<std::mutex> g(*lock_);
      if (auto it = dq_at_alpha_.find(n); it != dq_at_alpha_.end()) return it->second;
    }
    const auto& ctx = context();
    S v = q_number(n, ctx) * base_->eval(n - 1, alpha()) / (S(1) + effective_ * kernel11_at(*base_, n, alpha()));
    std::lock_guard<std::mutex> g(*lock_);
    return dq_at_alpha_.emplace(n, std::move(v)).first->second;
  }

  /// mu_n = lambda~ (D_q S_n)(alpha), the weight of the kernel correction.
  S correction(long n) const { return effective_ * dq_s_at_alpha(n); }

  /// S_n = H_n - mu_n K^_{n-1}^(0,1)(x, alpha); S_0 = 1.
  PolyT s_poly(long n) const {
    if (n < 0) throw std::invalid_argument("s_poly: negative degree");
    if (n == 0) return PolyT::constant(S(1));
    {
      std::lock_guard<std::mutex> g(*lock_);
      if (auto it = s_cache_.find(n); it != s_cache_.end()) return it->second;
    }
    PolyT s = base_->hermite(n) - base_->kernel_poly(n - 1, 0, 1, alpha()) * correction(n);
    std::lock_guard<std::mutex> g(*lock_);
    return s_cache_.emplace(n, std::move(s)).first->second;
  }

  /// D_q S_n = [n]_q H_{n-1} - mu_n K^_{n-1}^(1,1)(x, alpha), n >= 1.
  PolyT dq_s_poly(long n) const {
    if (n < 1) throw std::invalid_argument("dq_s_poly requires n >= 1");
    return base_->dq_hermite(n, 1) - base_->kernel_poly(n - 1, 1, 1, alpha()) * correction(n);
  }

  /// Monic degree-n polynomial orthogonal to 1, x, ..., x^(n-1), from the
  /// moment system of inner_product. Independent of the kernel construction.
  PolyT gram_schmidt_oracle(long n) const
    requires ExactScalar<S>
  {
    if (n < 0) throw std::invalid_argument("gram_schmidt_oracle: negative degree");
    if (n == 0) return PolyT::constant(S(1));
    const auto mono = [](long k) { return PolyT::monomial(S(1), static_cast<std::size_t>(k)); };
    std::vector<std::vector<S>> gram(n, std::vector<S>(n));
    std::vector<S> rhs(n);
    for (long j = 0; j < n; ++j) {
      for (long k = j; k < n; ++k) {
        gram[j][k] = inner_product(mono(k), mono(j));
        gram[k][j] = gram[j][k];
      }
      rhs[j] = -inner_product(mono(n), mono(j));
    }
    auto sol = solve_linear(std::move(gram), std::move(rhs));
    if (sol.status != SolveStatus::kUnique) throw StructuralError("singular Gram matrix for the Sobolev product");
    sol.x.push_back(S(1));
    return PolyT(std::move(sol.x));
  }

  /// E_{1,m}, F_{1,m} with S_m = E_{1,m} H_m + F_{1,m} H_{m-1}, m >= 1.
  std::pair<RationalFn<S>, RationalFn<S>> level_coeffs(long m) const
    requires ExactScalar<S>
  {
    if (m < 1) throw std::invalid_argument("level_coeffs requires m >= 1");
    {
      std::lock_guard<std::mutex> g(*lock_);
      if (auto it = levels_.find(m); it != levels_.end()) return it->second;
    }
    const KernelCoeffs<S> k = coeff_AB(*base_, m, alpha());
    const S mu = correction(m);
    std::pair<RationalFn<S>, RationalFn<S>> ef{RationalFn<S>(PolyT::constant(S(1))) - mu * k.A, -(mu * k.B)};
    std::lock_guard<std::mutex> g(*lock_);
    return levels_.emplace(m, std::move(ef)).first->second;
  }

  /// All connection data for degree n >= 2:
  ///   S_n      = E1 H_n + F1 H_{n-1}
  ///   S_{n-1}  = E2 H_n + F2 H_{n-1},  E2 = -F_{1,n-1}/gamma_{n-1},  F2 = E_{1,n-1} - x E2
  ///   D_q S_n  = E3 H_n + F3 H_{n-1},  E3 = -mu_n C,  F3 = [n]_q - mu_n D
  ///   Xi = E1 F2 - E2 F1,  E4 = -(E2 F3 - E3 F2),  F4 = E1 F3 - E3 F1
  ConnectionCoeffs<S> connection_coeffs(long n) const
    requires ExactScalar<S>
  {
    if (n < 2) throw std::invalid_argument("connection_coeffs requires n >= 2");
    const auto& ctx = context();
    const S mu = correction(n);
    ConnectionCoeffs<S> cc;
    cc.n = n;
    std::tie(cc.E1, cc.F1) = level_coeffs(n);
    const auto [e1_prev, f1_prev] = level_coeffs(n - 1);
    cc.E2 = -(S(S(1) / base_->gamma(n - 1)) * f1_prev);
    cc.F2 = e1_prev - RationalFn<S>(PolyT::x()) * cc.E2;
    const KernelCoeffs<S> k = coeff_CD(*base_, n, alpha());
    cc.E3 = -(mu * k.C);
    cc.F3 = RationalFn<S>(PolyT::constant(q_number(n, ctx))) - mu * k.D;
    recompute_determinants(cc);
    return cc;
  }

 private:
  std::shared_ptr<const HermiteFamily<S>> base_;
  SobolevParams<S> params_;
  S effective_;
  Real raw_;
  std::unique_ptr<std::mutex> lock_;
  mutable std::map<long, PolyT> s_cache_;
  mutable std::map<long, S> dq_at_alpha_;
  mutable std::map<long, std::pair<RationalFn<S>, RationalFn<S>>> levels_;
};

}  // namespace qsob
