#pragma once

// Verification suites: every module invariant run over a parameter grid,
// collected into a report. Deterministic for a given seed.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsob/io.hpp"
#include "qsob/kernels.hpp"
#include "qsob/ladder.hpp"
#include "qsob/qcalc.hpp"
#include "qsob/qhermite.hpp"
#include "qsob/sobolev.hpp"

namespace qsob::verify {

using nlohmann::json;

struct CaseResult {
  std::string invariant;
  json params;
  bool passed = false;
  std::string witness;
  json extra = json::object();

  std::string key() const { return invariant + "|" + params.dump(); }
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double wall_seconds = 0;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.passed; }));
  }
  std::size_t failed() const { return cases.size() - passed(); }

  json to_json() const {
    json rows = json::array();
    for (const auto& c : cases) {
      json row = {{"invariant", c.invariant}, {"params", c.params}, {"status", c.passed ? "PASS" : "FAIL"}};
      if (!c.witness.empty()) row["witness"] = c.witness;
      for (auto it = c.extra.begin(); it != c.extra.end(); ++it) row[it.key()] = it.value();
      rows.push_back(std::move(row));
    }
    return {{"suite", suite},
            {"cases", rows},
            {"summary", {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}}},
            {"wall_time_s", wall_seconds}};
  }
};

/// Parameter grid and limits. Empty optional bounds mean "use the built-in bound".
struct VerifyOptions {
  std::vector<Rational> qs{Rational(1, 3), Rational(1, 2), Rational(7, 10)};
  std::vector<Rational> alphas{Rational(5, 4), Rational(-5, 4), Rational(2), Rational(-3)};
  std::vector<Rational> masses{Rational(1, 10), Rational(1), Rational(10)};
  std::vector<Rational> kernel_ys{Rational(2), Rational(-3), Rational(5, 4), Rational(-5, 4), Rational(7)};
  std::vector<Rational> float_qs{Rational(1, 2), Rational(7, 10)};
  std::optional<long> n_max;
  long precision_bits = 256;
  Rational tail_tol{1, 1};
  unsigned long seed = 1;
  /// Test hook: corrupts E4 by +1 in the ladder suite, which must then fail.
  bool canary = false;

  VerifyOptions() { mpz_ui_pow_ui(tail_tol.get_den_mpz_t(), 10, 30); }

  long cap(long built_in) const { return n_max ? std::min(*n_max, built_in) : built_in; }
};

namespace detail {

using R = Rational;

inline json rat(const R& v) { return to_string(v); }

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}

  void check(const std::string& invariant, json params, const std::function<std::optional<std::string>()>& body,
             json extra = json::object()) {
    CaseResult c{invariant, std::move(params), false, {}, std::move(extra)};
    try {
      if (auto failure = body()) {
        c.witness = *failure;
      } else {
        c.passed = true;
      }
    } catch (const std::exception& e) {
      c.witness = std::string("exception: ") + e.what();
    }
    r_.cases.push_back(std::move(c));
  }

 private:
  VerifyReport& r_;
};

inline std::optional<std::string> expect_equal(const Poly<R>& got, const Poly<R>& want) {
  if (got == want) return std::nullopt;
  return "got " + got.to_string() + ", expected " + want.to_string();
}

inline std::optional<std::string> expect_zero(const Poly<R>& p) {
  if (p.is_zero()) return std::nullopt;
  return "nonzero " + p.to_string();
}

class Generator {
 public:
  explicit Generator(unsigned long seed) : rng_(seed) {}

  R rational() {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    R r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  Poly<R> poly(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<R> c(static_cast<std::size_t>(deg(rng_)) + 1);
    for (auto& v : c) v = rational();
    return Poly<R>(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

/// Families shared across cases of one suite run.
class FamilyCache {
 public:
  std::shared_ptr<HermiteFamily<R>> hermite(const R& q) {
    auto& slot = hermite_[q.get_str()];
    if (!slot) slot = std::make_shared<HermiteFamily<R>>(ExactContext::exact(q));
    return slot;
  }

  const SobolevFamily<R>& sobolev(const R& q, const R& alpha, const R& mass) {
    const std::string key = q.get_str() + "|" + alpha.get_str() + "|" + mass.get_str();
    auto& slot = sobolev_[key];
    if (!slot) {
      slot = std::make_unique<SobolevFamily<R>>(hermite(q),
                                                SobolevParams<R>::make(alpha, mass, MassConvention::kEffective));
    }
    return *slot;
  }

 private:
  std::map<std::string, std::shared_ptr<HermiteFamily<R>>> hermite_;
  std::map<std::string, std::unique_ptr<SobolevFamily<R>>> sobolev_;
};

inline json grid_params(long n, const R& q, const R& alpha, const R& mass) {
  return {{"n", n}, {"q", rat(q)}, {"alpha", rat(alpha)}, {"mass", rat(mass)}};
}

inline void run_qcalc(const VerifyOptions& o, Recorder& rec) {
  Generator gen(o.seed);
  for (const auto& q : o.qs) {
    const auto ctx = ExactContext::exact(q);
    for (int trial = 0; trial < 10; ++trial) {
      const Poly<R> f = gen.poly(8);
      const Poly<R> g = gen.poly(8);
      rec.check("product_rule", {{"q", rat(q)}, {"trial", trial}}, [&]() -> std::optional<std::string> {
        const Poly<R> lhs = q_derivative(f * g, ctx);
        const Poly<R> form1 = f.scaled_argument(q) * q_derivative(g, ctx) + g * q_derivative(f, ctx);
        const Poly<R> form2 = f * q_derivative(g, ctx) + g.scaled_argument(q) * q_derivative(f, ctx);
        if (auto e = expect_equal(form1, lhs)) return "first form: " + *e;
        if (auto e = expect_equal(form2, lhs)) return "second form: " + *e;
        return std::nullopt;
      });
      const R y = gen.rational();
      rec.check("q_sub_power_binomial_sum", {{"q", rat(q)}, {"y", rat(y)}}, [&]() -> std::optional<std::string> {
        for (long n = 0; n <= 8; ++n) {
          std::vector<R> c(static_cast<std::size_t>(n) + 1);
          for (long k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(n - k)] =
                q_binomial(n, k, ctx) * ipow(q, k * (k - 1) / 2) * ipow(R(-y), k);
          }
          if (auto e = expect_equal(q_sub_power(y, n, ctx), Poly<R>(c))) return "n=" + std::to_string(n) + ": " + *e;
        }
        return std::nullopt;
      });
      const Poly<R> p = gen.poly(10);
      const R a = gen.rational();
      rec.check("q_taylor_round_trip", {{"q", rat(q)}, {"trial", trial}}, [&]() {
        return expect_equal(q_taylor_reconstruct(q_taylor(p, a, ctx), a, ctx), p);
      });
      rec.check("q_derivative_difference_quotient", {{"q", rat(q)}, {"trial", trial}}, [&]() -> std::optional<std::string> {
        R z = gen.rational();
        if (is_zero(z)) z = R(3, 7);
        const R quotient = (p.eval(R(q * z)) - p.eval(z)) / ((q - 1) * z);
        if (q_derivative(p, ctx).eval(z) != quotient) return "mismatch at z=" + to_string(z);
        return std::nullopt;
      });
    }
    rec.check("dq_inverse_commutation", {{"q", rat(q)}}, [&]() -> std::optional<std::string> {
      for (int k = 0; k <= 8; ++k) {
        const Poly<R> p = Poly<R>::monomial(R(1), static_cast<std::size_t>(k));
        const Poly<R> lhs = q_derivative_inv(q_derivative(p, ctx), ctx);
        const Poly<R> rhs = q_derivative(q_derivative_inv(p, ctx), ctx) * q;
        if (auto e = expect_equal(lhs, rhs)) return "x^" + std::to_string(k) + ": " + *e;
      }
      return std::nullopt;
    });
    rec.check("q_falling_product_form", {{"q", rat(q)}}, [&]() -> std::optional<std::string> {
      for (long s = -4; s <= 8; ++s) {
        for (long n = 0; n <= 6; ++n) {
          R prod(1);
          for (long j = 0; j < n; ++j) prod *= q_number_ext(s - j, ctx);
          if (q_falling(s, n, ctx) != prod) return "s=" + std::to_string(s) + " n=" + std::to_string(n);
        }
      }
      return std::nullopt;
    });
  }

  for (const char* qtext : {"0.9", "0.99", "0.999"}) {
    const auto ctx = FloatContext::floating(parse_rational(qtext), o.precision_bits, o.tail_tol);
    rec.check("q_number_classical_limit", {{"q", qtext}}, [&]() -> std::optional<std::string> {
      const Real one_minus_q = Real(1L) - ctx.q();
      for (long n = 1; n <= 10; ++n) {
        const Real gap = abs(q_number(n, ctx) - Real(n));
        if (gap > Real(n * n) * one_minus_q) return "n=" + std::to_string(n) + " gap " + gap.to_string();
      }
      return std::nullopt;
    });
  }

  const long m_max = o.cap(8);
  for (const auto& q : o.float_qs) {
    const auto ctx = FloatContext::floating(q, o.precision_bits, o.tail_tol);
    HermiteFamily<Real> fam(ctx, m_max);
    const Real c = fam.norm_constant().c;
    const Real tol = Real(10L) * ctx.tail_tol();
    for (long m = 0; m <= m_max; ++m) {
      for (long n = m; n <= m_max; ++n) {
        rec.check("jackson_orthogonality", {{"q", rat(q)}, {"m", m}, {"n", n}}, [&]() -> std::optional<std::string> {
          const JacksonIntegral ji = jackson_weighted_integral(fam.hermite(m) * fam.hermite(n), ctx);
          if (m == n) {
            const Real ref = c * fam.norm_sq_normalized(n);
            const Real rel = abs(ji.value / ref - Real(1L));
            if (rel > tol) return "relative error " + rel.to_string();
          } else {
            const Real scale = c * fam.norm_sq_normalized(m) * fam.norm_sq_normalized(n);
            const Real ratio = abs(ji.value) / sqrt(scale);
            if (ratio > tol) return "off-diagonal " + ji.value.to_string();
          }
          return std::nullopt;
        });
      }
    }
  }
}

inline void run_hermite(const VerifyOptions& o, Recorder& rec, FamilyCache& cache) {
  for (const auto& q : o.qs) {
    const auto fam = cache.hermite(q);
    const auto& ctx = fam->context();
    rec.check("parity", {{"q", rat(q)}, {"n_max", o.cap(25)}}, [&]() -> std::optional<std::string> {
      for (long n = 0; n <= o.cap(25); ++n) {
        const Poly<R> h = fam->hermite(n);
        if (h.reflected() != h * R(n % 2 ? -1 : 1)) return "H_" + std::to_string(n);
      }
      return std::nullopt;
    });
    rec.check("forward_shift", {{"q", rat(q)}, {"n_max", o.cap(25)}}, [&]() -> std::optional<std::string> {
      for (long n = 0; n <= o.cap(25); ++n) {
        const Poly<R> want = n == 0 ? Poly<R>() : fam->hermite(n - 1) * q_number(n, ctx);
        if (auto e = expect_equal(q_derivative(fam->hermite(n), ctx), want)) return "n=" + std::to_string(n) + ": " + *e;
        for (long k = 2; k <= std::min(n + 1, 4L); ++k) {
          if (auto e = expect_equal(fam->dq_hermite(n, k), q_derivative(fam->hermite(n), k, ctx))) {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + *e;
          }
        }
      }
      return std::nullopt;
    });
    rec.check("norm_ratio", {{"q", rat(q)}, {"n_max", o.cap(25)}}, [&]() -> std::optional<std::string> {
      for (long n = 0; n <= o.cap(25); ++n) {
        const R direct = q_pochhammer(q, n, ctx) * ipow(q, n * (n - 1) / 2);
        if (fam->norm_sq_normalized(n) != direct) return "nu_" + std::to_string(n);
      }
      return std::nullopt;
    });
    rec.check("difference_equation", {{"q", rat(q)}, {"n_max", o.cap(20)}}, [&]() -> std::optional<std::string> {
      for (long n = 0; n <= o.cap(20); ++n) {
        if (auto e = expect_zero(fam->difference_eq_residual(n))) return "n=" + std::to_string(n) + ": " + *e;
      }
      return std::nullopt;
    });
    rec.check("orthogonality_exact", {{"q", rat(q)}, {"n_max", o.cap(20)}}, [&]() -> std::optional<std::string> {
      for (long m = 0; m <= o.cap(20); ++m) {
        const auto em = expand_in_hermite(*fam, fam->hermite(m));
        for (long n = 0; n <= o.cap(20); ++n) {
          const auto en = expand_in_hermite(*fam, fam->hermite(n));
          R ip(0);
          for (std::size_t k = 0; k < std::min(em.size(), en.size()); ++k) {
            ip += em[k] * en[k] * fam->norm_sq_normalized(static_cast<long>(k));
          }
          const R want = m == n ? fam->norm_sq_normalized(n) : R(0);
          if (ip != want) return "<H_" + std::to_string(m) + ",H_" + std::to_string(n) + ">";
        }
      }
      return std::nullopt;
    });
    for (const auto& y : o.kernel_ys) {
      rec.check("christoffel_darboux", {{"q", rat(q)}, {"y", rat(y)}, {"n_max", o.cap(20)}}, [&]() -> std::optional<std::string> {
        for (long n = 0; n <= o.cap(20); ++n) {
          if (auto e = expect_equal(fam->kernel_cd(n, y), fam->kernel_poly(n, 0, 0, y))) {
            return "n=" + std::to_string(n) + ": " + *e;
          }
        }
        return std::nullopt;
      });
      rec.check("kernel_x_derivative", {{"q", rat(q)}, {"y", rat(y)}, {"n_max", o.cap(15)}}, [&]() -> std::optional<std::string> {
        for (long n = 0; n <= o.cap(15); ++n) {
          for (int j = 0; j <= 1; ++j) {
            if (auto e = expect_equal(q_derivative(fam->kernel_poly(n, 0, j, y), ctx), fam->kernel_poly(n, 1, j, y))) {
              return "n=" + std::to_string(n) + " j=" + std::to_string(j) + ": " + *e;
            }
          }
        }
        return std::nullopt;
      });
    }
  }
}

inline void run_kernels(const VerifyOptions& o, Recorder& rec, FamilyCache& cache) {
  for (const auto& q : o.qs) {
    const auto fam = cache.hermite(q);
    for (const auto& y : o.kernel_ys) {
      for (long n = 2; n <= o.cap(12); ++n) {
        const json params = {{"n", n}, {"q", rat(q)}, {"y", rat(y)}};
        rec.check("kernel01_expansion", params, [&]() -> std::optional<std::string> {
          const auto k = coeff_AB(*fam, n, y);
          const RationalFn<R> lhs = k.A * RationalFn<R>(fam->hermite(n)) + k.B * RationalFn<R>(fam->hermite(n - 1));
          if (lhs != RationalFn<R>(fam->kernel_poly(n - 1, 0, 1, y))) return "A H_n + B H_{n-1} = " + lhs.to_string();
          if (!k.closed_form) return std::string("closed form rejected; linear-system fallback used");
          return std::nullopt;
        });
        rec.check("kernel11_expansion", params, [&]() -> std::optional<std::string> {
          const auto k = coeff_CD(*fam, n, y);
          const RationalFn<R> lhs = k.C * RationalFn<R>(fam->hermite(n)) + k.D * RationalFn<R>(fam->hermite(n - 1));
          if (lhs != RationalFn<R>(fam->kernel_poly(n - 1, 1, 1, y))) return "C H_n + D H_{n-1} = " + lhs.to_string();
          return std::nullopt;
        });
      }
    }
    for (const auto& alpha : o.alphas) {
      rec.check("kernel11_positive_increasing", {{"q", rat(q)}, {"alpha", rat(alpha)}}, [&]() -> std::optional<std::string> {
        R prev = kernel11_at(*fam, 1, alpha);
        for (long n = 2; n <= o.cap(12); ++n) {
          const R cur = kernel11_at(*fam, n, alpha);
          if (sgn(cur) <= 0 || cur <= prev) return "n=" + std::to_string(n) + " value " + to_string(cur);
          prev = cur;
        }
        return std::nullopt;
      });
    }
  }
}

inline void run_sobolev(const VerifyOptions& o, Recorder& rec, FamilyCache& cache) {
  for (const auto& q : o.qs) {
    for (const auto& alpha : o.alphas) {
      for (const auto& mass : o.masses) {
        const auto& sf = cache.sobolev(q, alpha, mass);
        const auto& ctx = sf.context();
        const auto& fam = sf.base();
        for (long n = 1; n <= o.cap(12); ++n) {
          const json params = grid_params(n, q, alpha, mass);
          rec.check("orthogonality", params, [&]() -> std::optional<std::string> {
            const Poly<R> s = sf.s_poly(n);
            if (s.degree() != n || !s.is_monic()) return "S_n not monic of degree n: " + s.to_string();
            for (long k = 0; k < n; ++k) {
              const R ip = sf.inner_product(s, Poly<R>::monomial(R(1), static_cast<std::size_t>(k)));
              if (!is_zero(ip)) return "<S_n, x^" + std::to_string(k) + "> = " + to_string(ip);
            }
            return std::nullopt;
          });
          rec.check("dq_consistency", params, [&]() -> std::optional<std::string> {
            const Poly<R> dq = q_derivative(sf.s_poly(n), ctx);
            if (auto e = expect_equal(dq, sf.dq_s_poly(n))) return e;
            if (dq.eval(alpha) != sf.dq_s_at_alpha(n)) return std::string("(D_q S_n)(alpha) mismatch");
            return std::nullopt;
          });
          rec.check("norm_extremal", params, [&]() -> std::optional<std::string> {
            const Poly<R> s = sf.s_poly(n);
            const R dh = q_derivative(fam.hermite(n), ctx).eval(alpha);
            const R bound = fam.norm_sq_normalized(n) + sf.effective_mass() * dh * dh;
            if (sf.inner_product(s, s) > bound) return "<S_n,S_n> exceeds " + to_string(bound);
            return std::nullopt;
          });
          if (n <= o.cap(10)) {
            rec.check("gram_schmidt_oracle", params, [&]() { return expect_equal(sf.s_poly(n), sf.gram_schmidt_oracle(n)); });
          }
          if (n >= 2 && n <= o.cap(10)) {
            rec.check("connection_identities", params, [&]() -> std::optional<std::string> {
              const auto cc = sf.connection_coeffs(n);
              const RationalFn<R> hn(fam.hermite(n)), hn1(fam.hermite(n - 1));
              const RationalFn<R> sn(sf.s_poly(n)), sn1(sf.s_poly(n - 1));
              if (cc.E1 * hn + cc.F1 * hn1 != sn) return std::string("S_n = E1 H_n + F1 H_{n-1} fails");
              if (cc.E2 * hn + cc.F2 * hn1 != sn1) return std::string("S_{n-1} = E2 H_n + F2 H_{n-1} fails");
              if (cc.Xi * hn != cc.F2 * sn - cc.F1 * sn1) return std::string("Xi H_n determinant identity fails");
              if (cc.Xi * hn1 != -(cc.E2 * sn - cc.E1 * sn1)) return std::string("Xi H_{n-1} determinant identity fails");
              if (cc.E3 * hn + cc.F3 * hn1 != RationalFn<R>(sf.dq_s_poly(n))) return std::string("D_q S_n = E3 H_n + F3 H_{n-1} fails");
              if (cc.Xi.is_zero() || cc.F4.is_zero()) return std::string("Xi or F4 vanishes identically");
              return std::nullopt;
            });
          }
        }
      }
    }
  }
}

inline json residual_extra(const RationalFn<R>& r) {
  R max_abs(0);
  for (const auto& c : r.numerator().coeffs()) max_abs = std::max(max_abs, R(abs(c)));
  return {{"residual_degree", r.is_zero() ? json(nullptr) : json(r.numerator().degree())},
          {"max_abs_numerator_coeff", to_string(max_abs)}};
}

inline void run_ladder(const VerifyOptions& o, Recorder& rec, FamilyCache& cache) {
  constexpr int kMutated = 9;
  bool mutation_seen[kMutated] = {};
  for (const auto& q : o.qs) {
    for (const auto& alpha : o.alphas) {
      for (const auto& mass : o.masses) {
        const auto& sf = cache.sobolev(q, alpha, mass);
        for (long n = 2; n <= o.cap(12); ++n) {
          const json params = grid_params(n, q, alpha, mass);
          ConnectionCoeffs<R> cc;
          std::optional<AnnihilationOperator<R>> op;
          RationalFn<R> res;
          std::string setup_error;
          try {
            cc = sf.connection_coeffs(n);
            op = AnnihilationOperator<R>::from(cc);
            if (o.canary) op->E4 = op->E4 + RationalFn<R>(Poly<R>::constant(R(1)));
            res = residual(*op, sf);
          } catch (const std::exception& e) {
            setup_error = e.what();
          }
          rec.check("annihilation", params, [&]() -> std::optional<std::string> {
            if (!setup_error.empty()) return setup_error;
            if (!res.is_zero()) return "residual " + res.to_string();
            annihilate(*op, sf);
            return std::nullopt;
          }, residual_extra(res));
          if (!op) continue;
          rec.check("mutation_e4", params, [&]() -> std::optional<std::string> {
            AnnihilationOperator<R> bad = *op;
            bad.E4 = bad.E4 + RationalFn<R>(Poly<R>::constant(R(1)));
            const RationalFn<R> r = residual(bad, sf);
            if (r.is_zero()) return std::string("residual stayed zero after corrupting E4");
            if (!o.canary && r != -RationalFn<R>(sf.s_poly(n))) return "residual " + r.to_string() + " is not -S_n";
            return std::nullopt;
          });
          rec.check("linearity", params, [&]() -> std::optional<std::string> {
            const R c(-7, 3);
            const RationalFn<R> lowered = op->apply(sf.s_poly(n) * c, sf.context());
            const RationalFn<R> want(sf.s_poly(n - 1) * c);
            if (!o.canary && lowered != want) return "a_n(c S_n) = " + lowered.to_string();
            return std::nullopt;
          });
          // Corrupt each coefficient function in turn; each must break the identity somewhere.
          for (int which = 0; which < kMutated; ++which) {
            if (mutation_seen[which]) continue;
            ConnectionCoeffs<R> bad = cc;
            RationalFn<R>* slots[kMutated] = {&bad.E1, &bad.F1, &bad.E2, &bad.F2, &bad.E3,
                                              &bad.F3, &bad.Xi, &bad.E4, &bad.F4};
            *slots[which] = *slots[which] + RationalFn<R>(Poly<R>::constant(R(1)));
            if (which < 6) recompute_determinants(bad);
            try {
              if (bad.F4.is_zero() || !residual(AnnihilationOperator<R>::from(bad), sf).is_zero()) {
                mutation_seen[which] = true;
              }
            } catch (const std::exception&) {
              mutation_seen[which] = true;
            }
          }
        }
      }
    }
  }
  const char* names[kMutated] = {"E1", "F1", "E2", "F2", "E3", "F3", "Xi", "E4", "F4"};
  for (int which = 0; which < kMutated; ++which) {
    rec.check("mutation_sensitivity", {{"coefficient", names[which]}}, [&]() -> std::optional<std::string> {
      if (!mutation_seen[which]) return std::string("corruption never changed the residual");
      return std::nullopt;
    });
  }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qcalc", "hermite", "kernels", "sobolev", "ladder"};
  return names;
}

/// Runs one suite ("qcalc", "hermite", "kernels", "sobolev", "ladder").
inline VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  detail::Recorder rec(report);
  detail::FamilyCache cache;
  const auto start = std::chrono::steady_clock::now();
  if (suite == "qcalc") {
    detail::run_qcalc(options, rec);
  } else if (suite == "hermite") {
    detail::run_hermite(options, rec, cache);
  } else if (suite == "kernels") {
    detail::run_kernels(options, rec, cache);
  } else if (suite == "sobolev") {
    detail::run_sobolev(options, rec, cache);
  } else if (suite == "ladder") {
    detail::run_ladder(options, rec, cache);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.key() < b.key(); });
  return report;
}

}  // namespace qsob::verify
