#include <gtest/gtest.h>

#include "entcon/error.hpp"
#include "entcon/roots.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace entcon;
using namespace entcon::testing;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
const Poly kZ = Poly::identity();

}  // namespace

TEST(Sturm, CountsOnIntervals) {
  const Poly p = kZ * kZ - Poly::constant(2);
  EXPECT_EQ(sturm_count(p, {q(0), q(2)}), 1u);
  EXPECT_EQ(sturm_count(p, {q(-2), q(2)}), 2u);
  EXPECT_EQ(sturm_count(kZ * kZ + Poly::constant(1), {q(-10), q(10)}), 0u);
  EXPECT_THROW(sturm_count(Poly{}, {q(0), q(1)}), DomainError);
}

TEST(Sturm, CountIsHalfOpen) {
  const Poly p = kZ * (kZ - Poly::constant(1));
  EXPECT_EQ(sturm_count(p, {q(0), q(1)}), 1u);
  EXPECT_EQ(sturm_count(p, {q(-1), q(0)}), 1u);
}

TEST(Isolation, Examples) {
  auto two = isolate_real_roots(kZ * (kZ - Poly::constant(1)), q(1, 8));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(two[0].interval.contains(q(0)));
  EXPECT_TRUE(two[1].interval.contains(q(1)));

  auto sqrt2 = isolate_real_roots(kZ * kZ - Poly::constant(2), q(1, 64));
  ASSERT_EQ(sqrt2.size(), 2u);
  const RatInterval& iv = sqrt2[1].interval;
  EXPECT_LE(iv.width(), q(1, 64));
  EXPECT_GT(iv.lo, q(1));
  EXPECT_LT(iv.hi, q(2));
  EXPECT_LT(iv.lo * iv.lo, q(2));
  EXPECT_GT(iv.hi * iv.hi, q(2));

  EXPECT_TRUE(isolate_real_roots(Poly::constant(3), q(1, 8)).empty());
  EXPECT_THROW(isolate_real_roots(Poly{}, q(1, 8)), DomainError);
}

TEST(Isolation, MultipleRootsFlagged) {
  const Poly p = (kZ - Poly::constant(1)).pow(2) * (kZ + Poly::constant(2));
  auto roots = isolate_real_roots(p, q(1, 16));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(roots[0].multiplicity_free);
  EXPECT_FALSE(roots[1].multiplicity_free);
  EXPECT_EQ(squarefree_part(p).degree(), 2);
}

TEST(IsolationProperty, AgreesWithSignScan) {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    const KnownRoots kr = separated_roots_poly(g);
    const auto encl = isolate_real_roots(kr.p, q(1, 32));
    const auto cells = sign_scan(kr.p, q(-9), q(9), q(1, 16));
    ASSERT_EQ(encl.size(), kr.roots.size()) << kr.p.pretty();
    ASSERT_EQ(cells.size(), kr.roots.size()) << kr.p.pretty();
    for (std::size_t i = 0; i < encl.size(); ++i) {
      EXPECT_TRUE(encl[i].interval.contains(kr.roots[i]));
      EXPECT_LE(encl[i].interval.width(), q(1, 32));
      EXPECT_TRUE(cells[i].contains(kr.roots[i]));
      if (i > 0) EXPECT_LT(encl[i - 1].interval.hi, encl[i].interval.lo);
    }
  }
}

TEST(IsolationProperty, CauchyBoundContainsRoots) {
  Gen g(22);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = g.poly(static_cast<int>(g.integer(1, 6)));
    const Rational b = cauchy_bound(p);
    for (const auto& e : isolate_real_roots(p, q(1, 16))) {
      EXPECT_GT(e.interval.lo, -b);
      EXPECT_LT(e.interval.hi, b);
    }
    EXPECT_EQ(sturm_count(p, {-b, b}), sturm_count_real_line(p));
  }
}

TEST(GlobalMin, Examples) {
  const Poly p{q(0), q(-2), q(3)};
  const Rational L = global_min_lower_bound(p);
  EXPECT_LE(L, q(-1, 3));
  EXPECT_GE(L, q(-1, 3) - default_min_slack());
  EXPECT_EQ(global_min_lower_bound(Poly::constant(5)), q(5));
  EXPECT_THROW(global_min_lower_bound(kZ), DomainError);
  EXPECT_THROW(global_min_lower_bound(-(kZ * kZ)), DomainError);
}

TEST(GlobalMinProperty, NeverExceedsSamples) {
  Gen g(23);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = g.poly(2 * static_cast<int>(g.integer(1, 3)));
    if (p.leading().sign() < 0) p = -p;
    const Rational L = global_min_lower_bound(p);
    for (int s = 0; s < 1000; ++s) {
      const Rational x(g.integer(-4000, 4000), g.integer(1, 500));
      ASSERT_LE(L, naive_eval(p, x)) << p.pretty() << " at " << x.str();
    }
  }
}

TEST(CertifyNonnegative, Cases) {
  const Poly sq = (kZ - Poly::constant(1)).pow(2);
  EXPECT_TRUE(certify_nonnegative(sq).has_value());
  EXPECT_TRUE(certify_nonnegative(sq * (kZ * kZ + Poly::constant(1))).has_value());
  EXPECT_FALSE(certify_nonnegative(kZ * kZ - Poly::constant(q(1, 1000000))).has_value());
  EXPECT_FALSE(certify_nonnegative(kZ).has_value());
}

TEST(MonotoneSolve, Examples) {
  const auto a = monotone_solve(kZ.scale(q(5, 3)), q(1), q(1, 1024));
  EXPECT_TRUE(a.interval.is_point());
  EXPECT_EQ(a.interval.lo, q(3, 5));
  const auto b = monotone_solve(kZ.pow(3) + kZ, q(2), q(1, 1024));
  EXPECT_TRUE(b.interval.contains(q(1)));
  const auto c = monotone_solve(kZ, q(-7, 3), q(1, 1024));
  EXPECT_TRUE(c.interval.contains(q(-7, 3)));
  EXPECT_THROW(MonotoneSolver(kZ * kZ, q(1)), DomainError);
}

TEST(MonotoneSolveProperty, BracketsAndAgreesWithBisection) {
  Gen g(24);
  const Rational width = Rational::pow2(-40);
  for (int trial = 0; trial < 50; ++trial) {
    // p' = 3 z^2 + a with a > 0.
    const Poly p{g.rational(), Rational(g.integer(1, 20), g.integer(1, 5)), g.rational(9, 3), Rational(1)};
    const Poly pp = p.derivative();
    if (global_min_lower_bound(pp).sign() <= 0) continue;
    const Rational y = g.rational();
    MonotoneSolver solver(p, y);
    RatInterval prev = solver.enclosure().interval;
    for (long e = 4; e <= 40; e += 12) {
      const RatInterval cur = solver.refine(Rational::pow2(-e)).interval;
      EXPECT_TRUE(prev.contains(cur.lo) && prev.contains(cur.hi));
      prev = cur;
    }
    const RatInterval enc = prev;
    EXPECT_LE(enc.width(), width);
    EXPECT_LE((naive_eval(p, enc.lo) - y).sign(), 0);
    EXPECT_GE((naive_eval(p, enc.hi) - y).sign(), 0);
    const Rational b = cauchy_bound(p - Poly::constant(y));
    const RatInterval oracle = bisect(p, y, -b, b, width);
    EXPECT_LE(oracle.lo, enc.hi);
    EXPECT_LE(enc.lo, oracle.hi);
  }
}

TEST(CertifyNonnegativeProperty, EvenMultiplicityTouchesZero) {
  Gen g(25);
  for (int trial = 0; trial < 50; ++trial) {
    auto roots = g.distinct(static_cast<std::size_t>(g.integer(1, 3)), 20, 7);
    Poly sq = poly_from_roots(roots);
    Poly p = sq * sq * Poly{Rational(g.integer(1, 9)), Rational(0), Rational(1)};
    EXPECT_TRUE(certify_nonnegative(p).has_value()) << p.pretty();
    Poly flipped = p * (Poly::identity() - Poly::constant(roots[0])) * (Poly::identity() - Poly::constant(roots[0] + Rational(1, 3)));
    EXPECT_FALSE(certify_nonnegative(flipped).has_value()) << flipped.pretty();
  }
}
