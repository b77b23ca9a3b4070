#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qsob::testing {
namespace {

const ExactContext kHalf = ExactContext::exact(R(1, 2));
const ExactContext kThird = ExactContext::exact(R(1, 3));

FloatContext float_ctx(const std::string& q, const std::string& tol = "1e-30") {
  return FloatContext::floating(rat(q), 256, rat(tol));
}

TEST(QNumbers, Examples) {
  EXPECT_EQ(q_number(0, kHalf), R(0));
  EXPECT_EQ(q_number(1, kThird), R(1));
  EXPECT_EQ(q_number(3, kHalf), R(7, 4));
  EXPECT_THROW(q_number(-1, kHalf), std::invalid_argument);
  // [-m]_q = -q^{-m} [m]_q
  EXPECT_EQ(q_number_ext(-2, kHalf), -ipow(R(2), 2) * R(3, 2));
}

TEST(QNumbers, FactorialAndPochhammer) {
  EXPECT_EQ(q_factorial(0, kHalf), R(1));
  EXPECT_EQ(q_factorial(2, kHalf), R(3, 2));
  EXPECT_EQ(q_factorial(3, kHalf), R(21, 8));
  EXPECT_EQ(q_pochhammer(R(1, 2), 0, kHalf), R(1));
  EXPECT_EQ(q_pochhammer(R(1, 2), 2, kHalf), R(3, 8));
  for (long n = 1; n <= 4; ++n) EXPECT_EQ(q_pochhammer(R(1), n, kHalf), R(0));
  EXPECT_EQ(q_pochhammer({R(1, 2), R(-1)}, 2, kHalf), q_pochhammer(R(1, 2), 2, kHalf) * q_pochhammer(R(-1), 2, kHalf));
}

TEST(QNumbers, BinomialFormsAgree) {
  EXPECT_EQ(q_binomial(5, 0, kHalf), R(1));
  EXPECT_EQ(q_binomial(2, 1, kHalf), R(3, 2));
  const R q(1, 2);
  EXPECT_EQ(q_binomial(4, 2, kHalf),
            q_pochhammer(q, 4, kHalf) / (q_pochhammer(q, 2, kHalf) * q_pochhammer(q, 2, kHalf)));
  for (long n = 0; n <= 7; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(q_binomial(n, k, kThird), q_binomial(n, n - k, kThird));
  }
  EXPECT_THROW(q_binomial(3, 4, kHalf), std::invalid_argument);
  EXPECT_THROW(q_binomial(3, -1, kHalf), std::invalid_argument);
}

TEST(QNumbers, FallingFactorial) {
  EXPECT_EQ(q_falling(3, 2, kHalf), R(21, 8));
  EXPECT_EQ(q_falling(5, 3, kHalf), R(3255, 512));
  EXPECT_EQ(q_falling(-2, 2, kHalf), R(84));
  for (long n = 0; n <= 6; ++n) {
    EXPECT_EQ(q_falling(n, 1, kHalf), q_number(n, kHalf));
    EXPECT_EQ(q_falling(n, n + 1, kHalf), R(0));
  }
}

TEST(QSubPower, ExamplesAndBinomialSum) {
  EXPECT_EQ(q_sub_power(R(5), 0, kHalf), poly({"1"}));
  EXPECT_EQ(q_sub_power(R(2), 2, kHalf), poly({"2", "-3", "1"}));
  EXPECT_EQ(q_sub_power(R(-7, 3), 1, kHalf), poly({"7/3", "1"}));

  RandomRationals gen(17);
  for (int t = 0; t < 10; ++t) {
    const R y = gen.next();
    for (long n = 0; n <= 8; ++n) {
      std::vector<R> c(static_cast<std::size_t>(n) + 1);
      for (long k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(n - k)] = q_binomial(n, k, kThird) * ipow(R(1, 3), k * (k - 1) / 2) * ipow(R(-y), k);
      }
      EXPECT_EQ(q_sub_power(y, n, kThird), P(c)) << "n=" << n << " y=" << y;
    }
  }
}

TEST(QDerivative, Examples) {
  EXPECT_EQ(q_derivative(poly({"0", "0", "0", "1"}), kHalf), poly({"0", "0", "7/4"}));
  EXPECT_TRUE(q_derivative(poly({"5"}), kHalf).is_zero());
  // D_q[f(gamma x)] = gamma (D_q f)(gamma x) for f = x^2, gamma = 3.
  const P f = poly({"0", "0", "1"});
  const R gamma(3);
  EXPECT_EQ(q_derivative(f.scaled_argument(gamma), kHalf), q_derivative(f, kHalf).scaled_argument(gamma) * gamma);
  EXPECT_EQ(q_derivative(f.scaled_argument(gamma), kHalf), poly({"0", "27/2"}));
}

TEST(QDerivative, MatchesDifferenceQuotient) {
  RandomRationals gen(23);
  for (const auto& ctx : {kHalf, kThird}) {
    for (int t = 0; t < 20; ++t) {
      const P p = gen.poly(9);
      const R z = gen.nonzero();
      EXPECT_EQ(q_derivative(p, ctx).eval(z), dq_difference_quotient(p, ctx.q(), z));
    }
  }
}

TEST(QDerivative, HigherOrderIsIterated) {
  const P p = poly({"1", "2", "3", "4", "5"});
  EXPECT_EQ(q_derivative(p, 3, kThird), q_derivative(q_derivative(q_derivative(p, kThird), kThird), kThird));
  EXPECT_EQ(q_derivative(p, 0, kThird), p);
}

TEST(QDerivative, InverseOperator) {
  EXPECT_EQ(q_derivative_inv(poly({"0", "0", "1"}), kHalf), poly({"0", "3"}));
  EXPECT_TRUE(q_derivative_inv(poly({"4"}), kHalf).is_zero());
  const P x4 = poly({"0", "0", "0", "0", "1"});
  EXPECT_EQ(q_derivative_inv(q_derivative(x4, kThird), kThird),
            q_derivative(q_derivative_inv(x4, kThird), kThird) * R(1, 3));
}

TEST(QDerivative, ProductRuleBothForms) {
  RandomRationals gen(29);
  const R q(1, 3);
  for (int t = 0; t < 25; ++t) {
    const P f = gen.poly(t % 9);
    const P g = gen.poly((t * 5) % 9);
    const P lhs = q_derivative(f * g, kThird);
    EXPECT_EQ(lhs, f.scaled_argument(q) * q_derivative(g, kThird) + g * q_derivative(f, kThird));
    EXPECT_EQ(lhs, f * q_derivative(g, kThird) + g.scaled_argument(q) * q_derivative(f, kThird));
  }
}

TEST(QDerivative, RationalFunctionBySubstitution) {
  // r = 1/(x - 2), checked pointwise against the difference quotient.
  const auto r = RationalFn<R>::make(poly({"1"}), poly({"-2", "1"}));
  const auto d = q_derivative(r, kHalf);
  for (const R& z : {R(3), R(-5), R(7, 3)}) {
    const R want = (r.eval(R(z / 2)) - r.eval(z)) / (R(-1, 2) * z);
    EXPECT_EQ(d.eval(z), want);
  }
  EXPECT_EQ(q_derivative(RationalFn<R>(poly({"0", "0", "1"})), kHalf), RationalFn<R>(poly({"0", "3/2"})));
}

TEST(QTaylor, RoundTrip) {
  EXPECT_EQ(q_taylor(poly({"5"}), R(2), kHalf), std::vector<R>{R(5)});
  const P x2 = poly({"0", "0", "1"});
  EXPECT_EQ(q_taylor_reconstruct(q_taylor(x2, R(1), kHalf), R(1), kHalf), x2);
  const auto fam = hermite_family("1/2");
  const auto t = q_taylor(fam->hermite(3), R(2), kHalf);
  EXPECT_EQ(t[1], q_derivative(fam->hermite(3), kHalf).eval(R(2)));
  EXPECT_EQ(q_taylor_reconstruct(t, R(2), kHalf), fam->hermite(3));

  RandomRationals gen(31);
  for (int trial = 0; trial < 15; ++trial) {
    const P p = gen.poly(10);
    const R a = gen.next();
    EXPECT_EQ(q_taylor_reconstruct(q_taylor(p, a, kThird), a, kThird), p);
  }
}

TEST(InfiniteProduct, ZeroArgumentAndSelfConvergence) {
  const auto ctx = float_ctx("1/2");
  EXPECT_EQ(q_pochhammer_inf(Real(0L, 256), ctx), Real(1L, 256));
  const auto loose = q_pochhammer_inf_eval(ctx.q(), ctx);
  EXPECT_LE(loose.relative_tail_bound, ctx.tail_tol());
  const auto tight_ctx = float_ctx("1/2", "1e-40");
  const Real tight = q_pochhammer_inf(tight_ctx.q(), tight_ctx);
  EXPECT_LE(abs(loose.value / tight - Real(1L, 256)), ctx.tail_tol());
}

TEST(InfiniteProduct, ProductNotationIsFactorwise) {
  const auto ctx = float_ctx("1/2");
  const Real q = ctx.q();
  const Real joint = q_pochhammer_inf({q, Real(-1L, 256), -q}, ctx);
  const Real separate = q_pochhammer_inf(q, ctx) * q_pochhammer_inf(Real(-1L, 256), ctx) * q_pochhammer_inf(-q, ctx);
  EXPECT_LE(abs(joint / separate - Real(1L, 256)), ctx.tail_tol());
  EXPECT_THROW(q_pochhammer_inf(Real(4L, 256), ctx), std::domain_error);  // 4 q^2 = 1
}

TEST(InfiniteProduct, ClassicalLimitOfQNumber) {
  for (const char* q : {"0.9", "0.99", "0.999"}) {
    const auto ctx = float_ctx(q);
    const Real gap_scale = Real(1L, 256) - ctx.q();
    for (long n = 1; n <= 10; ++n) {
      EXPECT_LE(abs(q_number(n, ctx) - Real(n, 256)), Real(n * n, 256) * gap_scale) << "q=" << q << " n=" << n;
    }
  }
}

TEST(Jackson, WeightIsBoundedAndSymmetric) {
  const auto ctx = float_ctx("7/10");
  const auto w = hermite_weight(Real(R(1, 2), 256), ctx);
  const auto wm = hermite_weight(Real(R(-1, 2), 256), ctx);
  EXPECT_EQ(w.value, wm.value);
  EXPECT_GT(w.value, Real(0L, 256));
  EXPECT_LE(w.tail_bound, ctx.tail_tol());
  EXPECT_EQ(hermite_weight(Real(0L, 256), ctx).value, Real(1L, 256));
  EXPECT_THROW(hermite_weight(Real(2L, 256), ctx), std::domain_error);
}

TEST(Jackson, OddIntegrandVanishes) {
  const auto ctx = float_ctx("1/2");
  const Poly<Real> x3(std::vector<Real>{Real(0L, 256), Real(0L, 256), Real(0L, 256), Real(1L, 256)});
  const auto ji = jackson_weighted_integral(x3, ctx);
  EXPECT_LE(abs(ji.value), ctx.tail_tol());
}

TEST(Jackson, OrthogonalityAtHalf) {
  const auto ctx = float_ctx("1/2");
  HermiteFamily<Real> fam(ctx, 2);
  const Real c = fam.norm_constant().c;
  const auto off = jackson_weighted_integral(fam.hermite(1) * fam.hermite(2), ctx);
  EXPECT_LE(abs(off.value), Real(10L, 256) * ctx.tail_tol());
  const auto diag = jackson_weighted_integral(fam.hermite(2) * fam.hermite(2), ctx);
  // (1-q)(q;q)_2 (q,-1,-q;q)_inf q^1
  const Real q = ctx.q();
  const Real one(1L, 256);
  const Real want = (one - q) * q_pochhammer(q, 2, ctx) * q_pochhammer_inf({q, Real(-1L, 256), -q}, ctx) * q;
  EXPECT_LE(abs(diag.value / want - one), Real(10L, 256) * ctx.tail_tol());
  EXPECT_LE(abs(c * fam.norm_sq_normalized(2) / want - one), Real(10L, 256) * ctx.tail_tol());
}

TEST(Context, RejectsInvalidParameters) {
  EXPECT_THROW(ExactContext::exact(R(0)), std::invalid_argument);
  EXPECT_THROW(ExactContext::exact(R(1)), std::invalid_argument);
  EXPECT_THROW(ExactContext::exact(R(3, 2)), std::invalid_argument);
  EXPECT_THROW(FloatContext::floating(R(1, 2), 32, R(1, 1000)), std::invalid_argument);
  EXPECT_THROW(FloatContext::floating(R(1, 2), 128, R(0)), std::invalid_argument);
  EXPECT_EQ(FloatContext::floating(R(1, 2), 128, R(1, 1000)).precision(), 128);
}

}  // namespace
}  // namespace qsob::testing
