#include "entcon/growth.hpp"

#include <algorithm>

#include "entcon/error.hpp"
#include "entcon/roots.hpp"

namespace entcon {

GrowthFn::Kind GrowthFn::parse_kind(const std::string& name) {
  if (name == "exp") return Kind::Exp;
  throw ConfigError("unknown growth kind \"" + name + "\" (supported: exp)");
}

Poly exp_taylor_poly(unsigned terms) {
  std::vector<Rational> c;
  c.reserve(terms + 1);
  mpz_class fact = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) fact *= k;
    c.emplace_back(mpz_class(1), fact);
  }
  return Poly(std::move(c));
}

Rational exp_lower(const Rational& t, unsigned terms) {
  if (t.sign() < 0) throw DomainError("exp_lower requires t >= 0");
  Rational sum(1);
  Rational term(1);
  for (unsigned k = 1; k <= terms; ++k) {
    term = term * t / Rational(static_cast<long>(k));
    sum += term;
  }
  return sum;
}

Rational exp_upper(const Rational& t, unsigned terms) {
  if (t.sign() < 0) throw DomainError("exp_upper requires t >= 0");
  const Rational k2(static_cast<long>(terms) + 2);
  if (!(t < k2)) throw DomainError("exp_upper: t = " + t.str() + " too large for " + std::to_string(terms) + " terms");
  Rational sum(1);
  Rational term(1);
  for (unsigned k = 1; k <= terms + 1; ++k) {
    term = term * t / Rational(static_cast<long>(k));
    if (k <= terms) sum += term;
  }
  // term is now t^(K+1)/(K+1)!; the tail is dominated by a geometric series of ratio t/(K+2).
  return sum + term * k2 / (k2 - t);
}

Rational growth_upper(const GrowthFn& growth, const Rational& t) {
  const mpz_class need = t.ceil() * 2;
  unsigned terms = growth.taylor_terms;
  if (need > terms) terms = static_cast<unsigned>(need.get_ui());
  return exp_upper(t, terms);
}

Envelope polynomial_envelope(const Poly& h) {
  if (h.is_zero()) throw DomainError("envelope of the zero polynomial");
  const Rational s = max(Rational(1), h.abs_coeff_sum());
  const auto e = static_cast<unsigned>(h.degree() + 1);
  return {e, s.pow(e)};
}

Rational dyadic_floor(const Rational& x) {
  if (x.sign() <= 0) throw DomainError("dyadic_floor of a nonpositive value");
  long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  Rational p = Rational::pow2(e);
  while (p > x) p /= Rational(2);
  while (p * Rational(2) <= x) p *= Rational(2);
  return p;
}

namespace {

// Smallest power of two >= x (x > 0).
Rational dyadic_ceil(const Rational& x) {
  Rational p = dyadic_floor(x);
  return p == x ? p : p * Rational(2);
}

}  // namespace

Rational min_ratio_lower_bound(unsigned m, const Rational& c, unsigned terms) {
  if (terms < m + 1) throw DomainError("Taylor depth must exceed the envelope degree");
  if (c.sign() <= 0) throw DomainError("envelope constant must be positive");
  // Rounding c up to a power of two can only lower the ratio.
  const Rational cc = dyadic_ceil(c);
  const Poly taylor = exp_taylor_poly(terms);
  const Poly denom = Poly::monomial(Rational(1), m) + Poly::constant(cc);
  // Numerator of the derivative of taylor/denom.
  const Poly num = taylor.derivative() * denom - taylor * denom.derivative();
  Rational best = cc.inverse();  // value at t = 0
  const Rational slack = Rational::pow2(-20);
  for (const auto& enc : isolate_real_roots(num, Rational(1, 16))) {
    if (enc.interval.hi.sign() <= 0) continue;
    // On [a, b] with a >= 0 both taylor and denom increase, so
    // taylor(a) / denom(b) bounds the ratio from below.
    RatInterval iv = enc.interval;
    Rational lb;
    for (int round = 0; round < 200; ++round) {
      const Rational a = max(iv.lo, Rational(0));
      lb = taylor.eval(a) / denom.eval(iv.hi);
      const Rational mid = max(iv.midpoint(), Rational(0));
      const Rational val = taylor.eval(mid) / denom.eval(mid);
      if (val - lb <= slack * val || iv.is_point()) break;
      // Halve around the root using the sign of num.
      const int s_lo = num.eval(iv.lo).sign();
      const Rational midp = iv.midpoint();
      const int s_mid = num.eval(midp).sign();
      if (s_mid == 0) {
        iv = RatInterval(midp, midp);
      } else if (s_mid == s_lo) {
        iv.lo = midp;
      } else {
        iv.hi = midp;
      }
    }
    best = min(best, lb);
  }
  return best;
}

AlphaCertificate select_alpha(const Poly& h, unsigned stage, const GrowthFn& growth) {
  if (stage < 1) throw DomainError("select_alpha needs stage >= 1");
  if (h.is_zero()) throw DomainError("select_alpha of the zero polynomial");
  AlphaCertificate cert;
  cert.stage = stage;
  cert.envelope = polynomial_envelope(h);

  const Poly dh = h.derivative();
  if (dh.degree() >= 1 && (dh.degree() % 2 == 1 || dh.leading().sign() < 0)) {
    throw DomainError("infimum of h' is not bounded below");
  }
  cert.deriv_floor = global_min_lower_bound(dh);

  unsigned k = std::max(growth.taylor_terms, cert.envelope.m + 2);
  if (k > 64) throw DomainError("Taylor depth exhausted: envelope degree " + std::to_string(cert.envelope.m));
  cert.taylor_terms = k;
  cert.min_ratio_lower_bound = min_ratio_lower_bound(cert.envelope.m, cert.envelope.c, k);

  const Rational scale = Rational::pow2(-static_cast<long>(stage));
  Rational bound = min(Rational(1), cert.min_ratio_lower_bound);
  if (cert.deriv_floor.sign() < 0) bound = min(bound, (-cert.deriv_floor).inverse());
  cert.alpha = dyadic_floor(scale * bound);
  return cert;
}

}  // namespace entcon
