#pragma once

#include <string>

#include "entcon/poly.hpp"
#include "entcon/rational.hpp"

namespace entcon {

/// Growth majorant p used to bound each stage increment. The shipped kind is
/// p(t) = e^t, which is positive, continuous, and outgrows every t^n.
struct GrowthFn {
  enum class Kind { Exp };
  Kind kind = Kind::Exp;
  /// Minimum Taylor depth K used for rational certification of e^t.
  unsigned taylor_terms = 8;

  std::string kind_name() const { return "exp"; }
  static Kind parse_kind(const std::string& name);
};

/// Partial sum sum_{k<=K} t^k/k!, a lower bound for e^t when t >= 0.
Rational exp_lower(const Rational& t, unsigned terms);

/// Partial sum plus the geometric tail bound t^(K+1)/(K+1)! * (K+2)/(K+2-t);
/// an upper bound for e^t, valid for 0 <= t < K+2.
Rational exp_upper(const Rational& t, unsigned terms);

/// exp_upper with the Taylor depth raised as needed so that t < K + 2.
Rational growth_upper(const GrowthFn& growth, const Rational& t);

/// The Taylor partial sum as a polynomial.
Poly exp_taylor_poly(unsigned terms);

struct Envelope {
  unsigned m = 0;
  Rational c;
  friend bool operator==(const Envelope&, const Envelope&) = default;
};

/// |h(z)| <= |z|^m + c for every complex z, with S = max(1, sum|a_i|),
/// m = deg h + 1 and c = S^(deg h + 1).
Envelope polynomial_envelope(const Poly& h);

/// Certified lower bound of inf_{t>=0} T_K(t) / (t^m + c) where T_K is the
/// Taylor partial sum. Requires K >= m + 1 so the ratio diverges.
Rational min_ratio_lower_bound(unsigned m, const Rational& c, unsigned terms);

struct AlphaCertificate {
  unsigned stage = 0;
  Envelope envelope;
  unsigned taylor_terms = 0;
  /// Lower bound of h' on the real line.
  Rational deriv_floor;
  Rational alpha;
  Rational min_ratio_lower_bound;

  friend bool operator==(const AlphaCertificate&, const AlphaCertificate&) = default;
};

/// Largest alpha = 2^-j with alpha <= 2^-n, alpha * (t^m + c) <= 2^-n T_K(t)
/// for t >= 0, and alpha * min(0, inf h') >= -2^-n.
AlphaCertificate select_alpha(const Poly& h, unsigned stage, const GrowthFn& growth);

/// Largest power of two not exceeding a positive rational.
Rational dyadic_floor(const Rational& x);

}  // namespace entcon
