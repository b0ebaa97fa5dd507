#pragma once

#include <memory>
#include <string>

#include "entcon/rational.hpp"

namespace entcon {

/// Index of one class of a dense partition.
struct ColorIndex {
  unsigned long value = 0;
  friend auto operator<=>(const ColorIndex&, const ColorIndex&) = default;
};

/// Partition of Q into countably many classes, each dense in R.
class DensePartition {
 public:
  virtual ~DensePartition() = default;
  virtual std::string name() const = 0;
  virtual ColorIndex color(const Rational& q) const = 0;
  /// Deterministic member of class `i` strictly inside (interval.lo, interval.hi).
  virtual Rational pick(ColorIndex i, const RatInterval& interval) const = 0;
};

/// Classes by 2-adic valuation of the reduced denominator: q = a / (2^v * odd)
/// has color v.
///
/// pick returns the class member inside the open interval that is smallest by
/// (odd part of the denominator, |numerator|, positive before negative).
class DyadicValuationPartition final : public DensePartition {
 public:
  std::string name() const override { return "dyadic-valuation"; }
  ColorIndex color(const Rational& q) const override;
  Rational pick(ColorIndex i, const RatInterval& interval) const override;
};

/// Looks up a partition by its configuration name.
std::shared_ptr<const DensePartition> make_partition(const std::string& name);

/// Smallest integer x >= 0 such that some integer y satisfies
/// a*x + b < y < c*x + d. Requires c > a.
mpz_class min_strip_abscissa(Rational a, Rational b, Rational c, Rational d);

}  // namespace entcon
