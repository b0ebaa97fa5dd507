#include "entcon/partition.hpp"

#include "entcon/error.hpp"

namespace entcon {

mpz_class min_strip_abscissa(Rational a, Rational b, Rational c, Rational d) {
  if (!(a < c)) throw DomainError("strip must widen: need c > a");
  // x = 0 works iff the open interval (b, d) holds an integer.
  if (Rational(mpq_class(b.floor() + 1)) < d) return 0;

  // Shift y by k*x + j so that 0 <= a < 1 and 0 <= b < 1; then d <= 1.
  const Rational k(mpq_class(a.floor()));
  a -= k;
  c -= k;
  const Rational j(mpq_class(b.floor()));
  b -= j;
  d -= j;
  const Rational one(1);
  if (a.is_zero()) {
    // y = 1 works as soon as c*x + d > 1.
    return ((one - d) / c).floor() + 1;
  }
  // The first feasible row y >= 1 holds the smallest feasible x; rows are
  // found by the transposed problem in y' = y - 1.
  const mpz_class yp = min_strip_abscissa(c.inverse(), (one - d) / c, a.inverse(), (one - b) / a);
  const Rational y(mpq_class(yp + 1));
  return ((y - d) / c).floor() + 1;
}

ColorIndex DyadicValuationPartition::color(const Rational& q) const {
  return ColorIndex{two_adic_valuation(q.den())};
}

Rational DyadicValuationPartition::pick(ColorIndex i, const RatInterval& interval) const {
  if (!(interval.lo < interval.hi)) throw DomainError("pick needs a nonempty open interval");
  const Rational scale = Rational::pow2(static_cast<long>(i.value));
  const Rational lo = interval.lo * scale;
  const Rational hi = interval.hi * scale;
  const Rational half(1, 2);
  const bool odd_numerator = i.value > 0;

  // Denominators run over odd o = 2s + 1; for positive color the numerator is
  // odd as well, which keeps the valuation exactly i.
  mpz_class s;
  if (odd_numerator) {
    s = min_strip_abscissa(lo, (lo - Rational(1)) * half, hi, (hi - Rational(1)) * half);
  } else {
    s = min_strip_abscissa(lo * Rational(2), lo, hi * Rational(2), hi);
  }
  const mpz_class o = 2 * s + 1;
  const Rational lo_n = lo * Rational(mpq_class(o));
  const Rational hi_n = hi * Rational(mpq_class(o));

  // Smallest admissible integer strictly above x, and largest strictly below.
  auto first_above = [&](const Rational& x) {
    mpz_class v = x.floor() + 1;
    if (odd_numerator && mpz_even_p(v.get_mpz_t())) v += 1;
    return v;
  };
  auto last_below = [&](const Rational& x) {
    mpz_class v = x.ceil() - 1;
    if (odd_numerator && mpz_even_p(v.get_mpz_t())) v -= 1;
    return v;
  };

  mpz_class a;
  if (lo_n.sign() >= 0) {
    a = first_above(lo_n);
  } else if (hi_n.sign() <= 0) {
    a = last_below(hi_n);
  } else if (!odd_numerator) {
    a = 0;
  } else {
    a = Rational(1) < hi_n ? mpz_class(1) : mpz_class(-1);
  }
  const Rational result(a, o * scale.num());
  if (!interval.contains_open(result) || color(result).value != i.value) {
    throw ConstructionError("pick failed to land in class " + std::to_string(i.value));
  }
  return result;
}

std::shared_ptr<const DensePartition> make_partition(const std::string& name) {
  if (name == "dyadic-valuation") return std::make_shared<DyadicValuationPartition>();
  throw ConfigError("unknown partition \"" + name + "\" (supported: dyadic-valuation)");
}

}  // namespace entcon
