#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "entcon/poly.hpp"
#include "entcon/rational.hpp"
#include "entcon/stage.hpp"

namespace entcon::testing {

/// Seeded generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long num_bound = 50, long den_bound = 50) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  Rational nonzero_rational(long num_bound = 50, long den_bound = 50) {
    for (;;) {
      Rational q = rational(num_bound, den_bound);
      if (!q.is_zero()) return q;
    }
  }

  /// Random polynomial of exact degree `deg` (nonzero leading coefficient).
  Poly poly(int deg, long bound = 9) {
    std::vector<Rational> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(Rational(integer(-bound, bound), integer(1, 4)));
    cs.push_back(nonzero_rational(bound, 4));
    return Poly(std::move(cs));
  }

  std::vector<Rational> distinct(std::size_t count, long num_bound = 50, long den_bound = 50) {
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (out.size() < count) {
      Rational q = rational(num_bound, den_bound);
      if (seen.insert(q).second) out.push_back(q);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Naive sum of a_i x^i with explicit powers; independent of Horner evaluation.
inline Rational naive_eval(const Poly& p, const Rational& x) {
  Rational sum(0);
  Rational power(1);
  for (const auto& c : p.coeffs()) {
    sum += c * power;
    power = power * x;
  }
  return sum;
}

inline ConstructionConfig make_config(Rational x, Rational y, std::vector<Rational> w, int stages = -1) {
  ConstructionConfig c;
  c.x_p = std::move(x);
  c.y_p = std::move(y);
  c.w = std::move(w);
  c.stages = stages < 0 ? static_cast<unsigned>(2 * c.w.size()) : static_cast<unsigned>(stages);
  return c;
}

}  // namespace entcon::testing
