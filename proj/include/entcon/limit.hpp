#pragma once

#include "entcon/growth.hpp"
#include "entcon/rational.hpp"
#include "entcon/stage.hpp"

namespace entcon {

/// Box around the limit value f(z): the true value lies within distance
/// sqrt(radius2) of center.
struct CertifiedBox {
  GaussianRational center;
  Rational radius2;
  /// Stage N whose polynomial supplied the center.
  unsigned stage = 0;
  /// True when the construction handled all of W, so f = f_N exactly.
  bool exact = false;
  bool meets_tolerance = true;
  /// Further stages needed to reach the requested tolerance (0 if met).
  unsigned additional_stages = 0;
};

/// 2^-N * e^r (upper bound), which dominates sum_{n>N} 2^-n p(r).
Rational tail_bound(unsigned stages, const Rational& radius, const GrowthFn& growth = {});

/// Certified value of the limit function at z, |z| <= config.radius.
/// Throws DomainError for z outside the certified disk or eps <= 0.
CertifiedBox eval_limit(const Construction& c, const GaussianRational& z, const Rational& eps);

/// Exact f^{-1}(w) for a w handled by an even stage. Throws NotHandledError otherwise.
Rational inverse_lookup(const Construction& c, const Rational& w);

}  // namespace entcon
