#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "entcon/poly.hpp"
#include "entcon/rational.hpp"

namespace entcon {

/// Signed remainder sequence p, p', -rem(p, p'), ... Each entry is stored as
/// a primitive integer polynomial (a positive multiple of the exact
/// remainder), so sign variations are unchanged.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  std::span<const Poly> polys() const noexcept { return polys_; }
  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;

 private:
  std::vector<Poly> polys_;
  std::vector<IntPoly> ints_;
};

/// p / gcd(p, p'), made monic. Zero maps to zero.
Poly squarefree_part(const Poly& p);

/// 1 + max |a_i| / |a_lead|; every complex root has modulus strictly below it.
Rational cauchy_bound(const Poly& p);

/// Number of distinct real roots of p in (lo, hi].
std::size_t sturm_count(const Poly& p, const RatInterval& interval);

/// Number of distinct real roots of p on the whole line.
std::size_t sturm_count_real_line(const Poly& p);

struct RootEnclosure {
  RatInterval interval;
  /// False when the enclosed root is a multiple root of the input polynomial.
  bool multiplicity_free = true;
};

/// Disjoint enclosures, sorted ascending, each of width <= eps, covering
/// every distinct real root once. Exact dyadic hits come back as points.
std::vector<RootEnclosure> isolate_real_roots(const Poly& p, const Rational& eps);

/// Default relative slack for global_min_lower_bound, 2^-20.
Rational default_min_slack();

/// Certified L <= p(x) for all real x, within `rel_slack * max(1, |min|)` of
/// the infimum. Throws DomainError("unbounded below") for odd degree or a
/// negative leading coefficient.
Rational global_min_lower_bound(const Poly& p, const Rational& rel_slack = default_min_slack());

/// Certifies p(x) >= 0 on the reals, tightening the minimum bound as needed.
/// Returns the certified lower bound on success, std::nullopt otherwise.
std::optional<Rational> certify_nonnegative(const Poly& p);

/// Bisection solver for p(x) = y with p' certified positive on the real line.
/// Successive refine() calls only ever shrink the current enclosure.
class MonotoneSolver {
 public:
  /// Throws DomainError when the derivative floor cannot be certified positive.
  MonotoneSolver(const Poly& p, const Rational& y);

  const RootEnclosure& refine(const Rational& eps);
  const RootEnclosure& enclosure() const noexcept { return enclosure_; }

 private:
  IntPoly shifted_;
  RootEnclosure enclosure_;
};

/// Enclosure of width <= eps of the unique real x with p(x) = y.
RootEnclosure monotone_solve(const Poly& p, const Rational& y, const Rational& eps);

/// Lower bound of p over [lo, hi] from the Taylor expansion at the midpoint.
Rational lower_bound_on_interval(const Poly& p, const RatInterval& interval);

}  // namespace entcon
