#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "entcon/poly.hpp"
#include "entcon/rational.hpp"
#include "support.hpp"

namespace entcon::testing {

/// Polynomial of degree <= 6 whose real roots are known: distinct multiples of
/// 1/8 in [-8, 8], times an optional positive-definite quadratic.
struct KnownRoots {
  Poly p;
  std::vector<Rational> roots;  // ascending
};

inline KnownRoots separated_roots_poly(Gen& g) {
  const int real_roots = static_cast<int>(g.integer(0, 6));
  std::vector<Rational> roots;
  while (static_cast<int>(roots.size()) < real_roots) {
    Rational r(g.integer(-64, 64), 8);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  Poly p = poly_from_roots(roots).scale(Rational(g.integer(1, 5), g.integer(1, 3)));
  if (real_roots <= 4 && g.integer(0, 1) == 1) {
    // z^2 + a z + b with a^2 < 4b has no real roots.
    Rational a(g.integer(-6, 6), 2);
    Rational b = a * a / Rational(4) + Rational(g.integer(1, 16), 4);
    p = p * Poly{b, a, Rational(1)};
  }
  if (p.is_zero()) p = Poly::constant(1);
  return {p, roots};
}

/// Sign changes of p on the grid lo + (j + 1/2) * step; each cell holds at most
/// one root when roots are further apart than `step`. Returns the cells.
inline std::vector<RatInterval> sign_scan(const Poly& p, const Rational& lo, const Rational& hi, const Rational& step) {
  std::vector<RatInterval> cells;
  Rational x = lo + step / Rational(2);
  int prev = naive_eval(p, x).sign();
  for (Rational next = x + step; next < hi; next += step) {
    const int s = naive_eval(p, next).sign();
    if (s != 0 && prev != 0 && s != prev) cells.emplace_back(next - step, next);
    if (s != 0) prev = s;
    x = next;
  }
  return cells;
}

/// Plain bisection for increasing p with p(lo) < y < p(hi), to width `width`.
inline RatInterval bisect(const Poly& p, const Rational& y, Rational lo, Rational hi, const Rational& width) {
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / Rational(2);
    const int s = (naive_eval(p, mid) - y).sign();
    if (s == 0) return {mid, mid};
    (s < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

/// Brute-force pick: enumerate odd parts o = 1, 3, 5, ... of the denominator
/// 2^i * o; among reduced numerators inside the interval (odd when i > 0) take
/// the smallest |numerator|, positive first.
inline std::optional<Rational> brute_pick(unsigned long i, const RatInterval& iv, unsigned long max_odd = 4001) {
  const mpz_class two_i = mpz_class(1) << static_cast<mp_bitcnt_t>(i);
  for (unsigned long o = 1; o <= max_odd; o += 2) {
    const mpz_class den = two_i * o;
    const Rational lo_n = iv.lo * Rational(den, mpz_class(1));
    const Rational hi_n = iv.hi * Rational(den, mpz_class(1));
    std::optional<mpz_class> best;
    for (mpz_class n = lo_n.floor() + 1; Rational(n, mpz_class(1)) < hi_n; ++n) {
      if (gcd(n, den) != 1) continue;
      if (!best || abs(n) < abs(*best) || (abs(n) == abs(*best) && n > 0)) best = n;
    }
    if (best) return Rational(*best, den);
  }
  return std::nullopt;
}

}  // namespace entcon::testing
