#include <gtest/gtest.h>

#include "entcon/error.hpp"
#include "entcon/growth.hpp"
#include "entcon/roots.hpp"
#include "support.hpp"

using namespace entcon;
using namespace entcon::testing;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
const Poly kZ = Poly::identity();

/// Independent exp partial sum with explicit factorials.
Rational taylor_oracle(const Rational& t, unsigned terms) {
  Rational sum(0);
  mpz_class fact = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) fact *= k;
    sum += t.pow(k) / Rational(fact, mpz_class(1));
  }
  return sum;
}

}  // namespace

TEST(ExpBounds, Examples) {
  EXPECT_EQ(exp_lower(q(0), 5), q(1));
  EXPECT_EQ(exp_lower(q(2), 3), q(19, 3));
  const Rational lo = exp_lower(q(1), 10);
  EXPECT_GT(lo, q(271827, 100000));
  EXPECT_LT(lo, q(271828182845905LL / 1, 100000000000000LL));
  EXPECT_EQ(exp_upper(q(0), 4), q(1));
  const Rational hi = exp_upper(q(1), 10);
  EXPECT_GT(hi, q(271828182845904LL, 100000000000000LL));
  EXPECT_LT(hi, q(271829, 100000));
  EXPECT_THROW(exp_lower(q(-1), 4), DomainError);
  EXPECT_THROW(exp_upper(q(7), 4), DomainError);
}

TEST(ExpBoundsProperty, SandwichAndMonotoneInDepth) {
  Gen g(31);
  for (int i = 0; i < 200; ++i) {
    const Rational t(g.integer(0, 400), g.integer(1, 50));
    const unsigned k = static_cast<unsigned>(g.integer(0, 20));
    const unsigned k2 = static_cast<unsigned>(g.integer(0, 20));
    EXPECT_EQ(exp_lower(t, k), taylor_oracle(t, k));
    EXPECT_LE(exp_lower(t, k), exp_lower(t, k + 1));
    if (t < Rational(k2 + 2)) EXPECT_LE(exp_lower(t, k), exp_upper(t, k2));
    EXPECT_LE(exp_lower(t, 40), growth_upper(GrowthFn{}, t));
  }
}

TEST(Envelope, Examples) {
  const Envelope a = polynomial_envelope(kZ);
  EXPECT_EQ(a.m, 2u);
  EXPECT_EQ(a.c, q(1));
  const Envelope b = polynomial_envelope(kZ.pow(3) - kZ.pow(2));
  EXPECT_EQ(b.m, 4u);
  EXPECT_EQ(b.c, q(16));
  const Envelope c = polynomial_envelope(Poly::constant(3));
  EXPECT_EQ(c.m, 1u);
  EXPECT_EQ(c.c, q(3));
  EXPECT_THROW(polynomial_envelope(Poly{}), DomainError);
}

TEST(EnvelopeProperty, BoundsAtComplexPoints) {
  Gen g(32);
  for (int i = 0; i < 100; ++i) {
    const Poly h = g.poly(static_cast<int>(g.integer(0, 5)));
    const Envelope env = polynomial_envelope(h);
    for (int s = 0; s < 20; ++s) {
      // 3-4-5 scaled points have rational modulus.
      const Rational r(g.integer(0, 60), g.integer(1, 10));
      const GaussianRational z{r * q(3, 5), r * q(4, 5)};
      const Rational lhs = poly_eval(h, z).norm2();
      const Rational rhs = r.pow(env.m) + env.c;
      EXPECT_LE(lhs, rhs * rhs);
    }
  }
}

TEST(SelectAlpha, StageOneOfWorkedExample) {
  const AlphaCertificate a = select_alpha(kZ, 1, GrowthFn{});
  EXPECT_EQ(a.alpha, q(1, 2));
  EXPECT_GE(a.deriv_floor, q(0));
  EXPECT_EQ(a.envelope.m, 2u);
}

TEST(SelectAlpha, StageTwoOfWorkedExample) {
  const AlphaCertificate a = select_alpha(kZ.pow(3) - kZ.pow(2), 2, GrowthFn{});
  EXPECT_LE(a.alpha, q(3, 4));
  EXPECT_LE(a.alpha, q(1, 4) * a.min_ratio_lower_bound);
  EXPECT_LE(a.deriv_floor, q(-1, 3));
  EXPECT_GE(a.alpha * a.deriv_floor, q(-1, 4));
  EXPECT_GT(a.alpha, q(0));
}

TEST(SelectAlpha, UnboundedDerivativeRejected) {
  EXPECT_THROW(select_alpha(kZ.pow(2), 1, GrowthFn{}), DomainError);
  EXPECT_THROW(select_alpha(-kZ.pow(3), 1, GrowthFn{}), DomainError);
}

TEST(SelectAlphaProperty, CertificateInequalitiesAtSamples) {
  Gen g(33);
  for (int i = 0; i < 30; ++i) {
    Poly h = g.poly(2 * static_cast<int>(g.integer(0, 2)) + 1);
    if (h.leading().sign() < 0) h = -h;
    const unsigned n = static_cast<unsigned>(g.integer(1, 8));
    const AlphaCertificate a = select_alpha(h, n, GrowthFn{});
    const Rational bound = Rational::pow2(-static_cast<long>(n));
    ASSERT_GT(a.alpha, q(0));
    ASSERT_LE(a.alpha, bound);
    // Largest power of two: doubling must break one of the constraints.
    const Rational twice = a.alpha * q(2);
    const bool doubled_ok = twice <= bound && twice <= bound * a.min_ratio_lower_bound &&
                            (a.deriv_floor.sign() >= 0 || twice * a.deriv_floor >= -bound);
    EXPECT_FALSE(doubled_ok);
    EXPECT_LE(a.deriv_floor, global_min_lower_bound(h.derivative()) + Rational::pow2(-10));
    for (int s = 0; s < 200; ++s) {
      const Rational t(g.integer(0, 4000 * static_cast<long>(a.envelope.m)), 1000);
      EXPECT_LE(a.alpha * (t.pow(a.envelope.m) + a.envelope.c), bound * exp_lower(t, a.taylor_terms));
      const Rational x(g.integer(-5000, 5000), g.integer(1, 100));
      EXPECT_GE(a.alpha * naive_eval(h.derivative(), x), -bound);
    }
  }
}

TEST(SelectAlphaProperty, DeeperTaylorNeverShrinksAlpha) {
  Gen g(34);
  for (int i = 0; i < 15; ++i) {
    Poly h = g.poly(2 * static_cast<int>(g.integer(0, 2)) + 1);
    if (h.leading().sign() < 0) h = -h;
    const unsigned n = static_cast<unsigned>(g.integer(1, 6));
    GrowthFn shallow, deep;
    shallow.taylor_terms = 8;
    deep.taylor_terms = 14;
    EXPECT_LE(select_alpha(h, n, shallow).alpha, select_alpha(h, n, deep).alpha);
  }
}

TEST(MinRatio, LowerBoundsSampledRatios) {
  Gen g(35);
  for (int i = 0; i < 10; ++i) {
    const unsigned m = static_cast<unsigned>(g.integer(1, 5));
    const Rational c(g.integer(1, 300), g.integer(1, 3));
    const unsigned K = m + 2;
    const Rational L = min_ratio_lower_bound(m, c, K);
    EXPECT_GT(L, q(0));
    for (int s = 0; s < 200; ++s) {
      const Rational t(g.integer(0, 20000), 1000);
      EXPECT_LE(L * (t.pow(m) + c), exp_lower(t, K));
    }
  }
  EXPECT_EQ(min_ratio_lower_bound(2, q(1), 8), q(1));
}

TEST(Dyadic, Floor) {
  EXPECT_EQ(dyadic_floor(q(3, 4)), q(1, 2));
  EXPECT_EQ(dyadic_floor(q(1, 4)), q(1, 4));
  EXPECT_EQ(dyadic_floor(q(5)), q(4));
}
