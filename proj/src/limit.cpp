#include "entcon/limit.hpp"

#include "entcon/error.hpp"

namespace entcon {

Rational tail_bound(unsigned stages, const Rational& radius, const GrowthFn& growth) {
  if (radius.sign() < 0) throw DomainError("tail_bound needs r >= 0");
  return Rational::pow2(-static_cast<long>(stages)) * growth_upper(growth, radius);
}

CertifiedBox eval_limit(const Construction& c, const GaussianRational& z, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("tolerance must be positive");
  const Rational& r = c.config.radius;
  if (z.norm2() > r * r) {
    throw DomainError("z lies outside the certified disk |z| <= " + r.str());
  }
  CertifiedBox box;
  box.stage = static_cast<unsigned>(c.stages.size());
  box.center = c.f_at(box.stage).eval(z);
  box.exact = c.complete();
  if (box.exact) return box;

  const Rational tail = tail_bound(box.stage, r, c.config.growth);
  box.radius2 = tail * tail;
  const Rational eps2 = eps * eps;
  box.meets_tolerance = box.radius2 <= eps2;
  if (!box.meets_tolerance) {
    // The tail halves per stage; finishing the schedule makes the box exact.
    const auto remaining = static_cast<unsigned>(2 * c.config.w.size() - c.stages.size());
    Rational t = tail;
    unsigned s = 0;
    while (t * t > eps2 && s < remaining) {
      t /= Rational(2);
      ++s;
    }
    box.additional_stages = s;
  }
  return box;
}

Rational inverse_lookup(const Construction& c, const Rational& w) {
  const PreimageRegistry reg = c.registry_at(static_cast<unsigned>(c.stages.size()));
  const auto it = reg.find(w);
  if (it == reg.end()) throw NotHandledError("w = " + w.str() + " has not been handled by an even stage");
  return it->second;
}

}  // namespace entcon
