#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qsob::testing {
namespace {

using RF = RationalFn<R>;

TEST(Sobolev, ParamsValidation) {
  EXPECT_THROW(SobolevParams<R>::make(R(1), R(1), MassConvention::kEffective), std::invalid_argument);
  EXPECT_THROW(SobolevParams<R>::make(R(-1, 2), R(1), MassConvention::kEffective), std::invalid_argument);
  EXPECT_THROW(SobolevParams<R>::make(R(2), R(0), MassConvention::kEffective), std::invalid_argument);
  EXPECT_THROW(SobolevParams<R>::make(R(2), R(1), MassConvention::kRaw), std::invalid_argument);
  EXPECT_NO_THROW(SobolevParams<R>::make(R(-3), R(1, 10), MassConvention::kEffective));
}

TEST(Sobolev, InnerProductExamples) {
  const auto sf = sobolev_family("1/2", "2", "1");
  EXPECT_EQ(sf.inner_product(poly({"1"}), poly({"1"})), R(1));
  EXPECT_EQ(sf.inner_product(poly({"0", "1"}), poly({"0", "1"})), R(3, 2));
  EXPECT_EQ(sf.inner_product(poly({"0", "0", "1"}), poly({"0", "1"})), R(3));
}

TEST(Sobolev, InnerProductSymmetricPositive) {
  const auto sf = sobolev_family("1/3", "-5/4", "10");
  RandomRationals gen(43);
  for (int t = 0; t < 15; ++t) {
    const P f = gen.poly(6);
    const P g = gen.poly(5);
    EXPECT_EQ(sf.inner_product(f, g), sf.inner_product(g, f));
    EXPECT_GT(sf.inner_product(f, f), R(0));
    EXPECT_EQ(sf.inner_product(f * R(3) + g, g), sf.inner_product(f, g) * 3 + sf.inner_product(g, g));
  }
}

TEST(Sobolev, FirstPolynomials) {
  const auto sf = sobolev_family("1/2", "2", "1");
  EXPECT_EQ(sf.s_poly(0), poly({"1"}));
  EXPECT_EQ(sf.s_poly(1), poly({"0", "1"}));
  EXPECT_EQ(sf.s_poly(2), poly({"-1/2", "-2", "1"}));
  EXPECT_EQ(sf.gram_schmidt_oracle(0), poly({"1"}));
  EXPECT_EQ(sf.gram_schmidt_oracle(2), poly({"-1/2", "-2", "1"}));
  EXPECT_EQ(sf.dq_s_at_alpha(1), R(1));
  EXPECT_EQ(sf.dq_s_at_alpha(2), R(1));
  EXPECT_EQ(sf.dq_s_at_alpha(3), R(49, 408));
  EXPECT_EQ(sf.dq_s_poly(1), poly({"1"}));
  EXPECT_EQ(sf.dq_s_poly(2), poly({"-2", "3/2"}));
  EXPECT_THROW(sf.dq_s_at_alpha(0), std::invalid_argument);
}

// Frozen values from tests/oracles/brute_force.py (moment-system solve with Python fractions).
TEST(Sobolev, OracleValues) {
  {
    const auto sf = sobolev_family("1/2", "2", "1");
    EXPECT_EQ(sf.s_poly(3), poly({"49/51", "-455/408", "-98/51", "1"}));
    EXPECT_EQ(q_derivative(sf.s_poly(3), sf.context()).eval(R(2)), R(49, 408));
  }
  {
    const auto sf = sobolev_family("1/3", "-3", "1/10");
    EXPECT_EQ(sf.s_poly(4), poly({"4562140/32416443", "-10127824/3601827", "-12686348/10805481", "130200/44467", "1"}));
    EXPECT_EQ(sf.dq_s_at_alpha(4), R(-555520, 10805481));
  }
  {
    const auto sf = sobolev_family("7/10", "5/4", "10");
    EXPECT_EQ(sf.s_poly(5), poly({"-1578468654969009635601/26838534320780368000000",
                                  "806378808274707365971119/2096760493810966250000000",
                                  "1857055674496808256867/2683853432078036800000",
                                  "-11987564408211910383393/8387041975243865000000",
                                  "-10128610777578425/13419267160390184", "1"}));
    EXPECT_EQ(sf.dq_s_at_alpha(5), rat("7937024457736159391529/33548167900975460000000000"));
  }
  {
    const auto sf = sobolev_family("1/2", "2", "1000000");
    EXPECT_EQ(sf.s_poly(2), poly({"-1/2", "-2000000/666667", "1"}));
    EXPECT_EQ(sf.dq_s_at_alpha(2), R(1, 666667));
  }
}

TEST(Sobolev, OrthogonalityAndOracleOnGrid) {
  for (const char* q : {"1/3", "1/2", "7/10"}) {
    for (const char* a : {"5/4", "-3"}) {
      const auto sf = sobolev_family(q, a, "1/10");
      for (long n = 1; n <= 8; ++n) {
        const P s = sf.s_poly(n);
        ASSERT_EQ(s.degree(), n);
        ASSERT_TRUE(s.is_monic());
        for (long k = 0; k < n; ++k) EXPECT_EQ(sf.inner_product(s, P::monomial(R(1), static_cast<std::size_t>(k))), R(0));
        EXPECT_EQ(s, sf.gram_schmidt_oracle(n));
        EXPECT_EQ(q_derivative(s, sf.context()), sf.dq_s_poly(n));
        EXPECT_EQ(sf.dq_s_poly(n).eval(sf.alpha()), sf.dq_s_at_alpha(n));
        EXPECT_EQ(q_derivative(s, sf.context()).eval(sf.alpha()),
                  dq_difference_quotient(s, sf.context().q(), sf.alpha()));
      }
    }
  }
}

TEST(Sobolev, NormIsExtremal) {
  const auto sf = sobolev_family("7/10", "2", "10");
  const auto& fam = sf.base();
  for (long n = 1; n <= 10; ++n) {
    const R dh = q_derivative(fam.hermite(n), sf.context()).eval(sf.alpha());
    const R sobolev_norm_h = fam.norm_sq_normalized(n) + sf.effective_mass() * dh * dh;
    EXPECT_EQ(sf.inner_product(fam.hermite(n), fam.hermite(n)), sobolev_norm_h);
    EXPECT_LE(sf.inner_product(sf.s_poly(n), sf.s_poly(n)), sobolev_norm_h);
  }
}

TEST(Sobolev, ZeroMassRecoversHermite) {
  const auto fam = hermite_family("1/2");
  const SobolevFamily<R> sf(fam, SobolevParams<R>::degenerate_for_testing(R(2)));
  for (long n = 0; n <= 15; ++n) EXPECT_EQ(sf.s_poly(n), fam->hermite(n));
}

TEST(Sobolev, ConnectionIdentities) {
  const auto sf = sobolev_family("1/2", "2", "1");
  const auto& fam = sf.base();
  for (long n = 2; n <= 10; ++n) {
    const auto cc = sf.connection_coeffs(n);
    const RF hn(fam.hermite(n)), hn1(fam.hermite(n - 1)), sn(sf.s_poly(n)), sn1(sf.s_poly(n - 1));
    EXPECT_EQ(cc.E1 * hn + cc.F1 * hn1, sn);
    EXPECT_EQ(cc.E2 * hn + cc.F2 * hn1, sn1);
    EXPECT_EQ(cc.Xi * hn, cc.F2 * sn - cc.F1 * sn1);
    EXPECT_EQ(cc.Xi * hn1, -(cc.E2 * sn - cc.E1 * sn1));
    EXPECT_EQ(cc.E3 * hn + cc.F3 * hn1, RF(sf.dq_s_poly(n)));
    EXPECT_EQ(cc.Xi, det2(cc.E1, cc.E2, cc.F1, cc.F2));
    EXPECT_FALSE(cc.Xi.is_zero());
    EXPECT_FALSE(cc.F4.is_zero());
  }
  EXPECT_THROW(sf.connection_coeffs(1), std::invalid_argument);
}

TEST(Sobolev, ConnectionLevelReuse) {
  const auto sf = sobolev_family("1/3", "-5/4", "1");
  const auto cc = sf.connection_coeffs(5);
  const auto [e1_prev, f1_prev] = sf.level_coeffs(4);
  EXPECT_EQ(cc.E2, -(R(R(1) / sf.base().gamma(4)) * f1_prev));
  EXPECT_EQ(cc.F2, e1_prev - RF(P::x()) * cc.E2);
}

TEST(SobolevFloat, RawAndEffectiveMassAgree) {
  const auto ctx = FloatContext::floating(R(1, 2), 256, rat("1e-30"));
  auto fam = std::make_shared<HermiteFamily<Real>>(ctx, 6);
  const Real c = fam->norm_constant().c;
  const Real alpha(2L, 256);
  const SobolevFamily<Real> eff(fam, SobolevParams<Real>::make(alpha, Real(1L, 256), MassConvention::kEffective));
  const SobolevFamily<Real> raw(fam, SobolevParams<Real>::make(alpha, c, MassConvention::kRaw));
  const auto exact = sobolev_family("1/2", "2", "1");
  const Real tol = ldexp(Real(1L, 256), -180);
  for (long n = 0; n <= 5; ++n) {
    const Poly<Real> pa = eff.s_poly(n);
    const Poly<Real> pb = raw.s_poly(n);
    const P pe = exact.s_poly(n);
    const auto& a = pa.coeffs();
    const auto& b = pb.coeffs();
    const auto& e = pe.coeffs();
    ASSERT_EQ(a.size(), e.size());
    ASSERT_EQ(b.size(), e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      EXPECT_LE(abs(a[k] - Real(e[k], 256)), tol);
      EXPECT_LE(abs(b[k] - Real(e[k], 256)), tol);
    }
  }
  EXPECT_LE(abs(raw.effective_mass() - Real(1L, 256)), tol);
}

TEST(SobolevFloat, JacksonInnerProductOrthogonality) {
  const auto ctx = FloatContext::floating(R(1, 2), 256, rat("1e-30"));
  auto fam = std::make_shared<HermiteFamily<Real>>(ctx, 6);
  const SobolevFamily<Real> sf(fam, SobolevParams<Real>::make(Real(-3L, 256), Real(R(1, 10), 256), MassConvention::kRaw));
  for (long n = 1; n <= 5; ++n) {
    const Real norm = sf.inner_product(sf.s_poly(n), sf.s_poly(n));
    for (long k = 0; k < n; ++k) {
      const Poly<Real> mono = Poly<Real>::monomial(Real(1L, 256), static_cast<std::size_t>(k));
      const Real ip = sf.inner_product(sf.s_poly(n), mono);
      EXPECT_LE(abs(ip), Real(1000L, 256) * ctx.tail_tol() * (norm + Real(1L, 256)));
    }
  }
}

}  // namespace
}  // namespace qsob::testing
