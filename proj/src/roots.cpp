#include "entcon/roots.hpp"

#include <algorithm>
#include <utility>

#include "entcon/error.hpp"

namespace entcon {

namespace {

// Positive multiple of p with coprime integer coefficients, as a Poly.
Poly primitive(const Poly& p) {
  const IntPoly ip(p);
  std::vector<Rational> c;
  c.reserve(ip.coeffs().size());
  for (const auto& v : ip.coeffs()) c.emplace_back(mpq_class(v));
  return Poly(std::move(c));
}

int count_variations(std::span<const int> signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Sturm chain plus the squarefree polynomial it was built from.
struct Isolator {
  Poly sqfree;
  IntPoly sq_int;
  SturmChain chain;

  explicit Isolator(const Poly& p) : sqfree(squarefree_part(p)), sq_int(sqfree), chain(sqfree) {}

  // Roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const {
    const int c = chain.variations_at(a) - chain.variations_at(b);
    return sq_int.sign_at(b) == 0 ? c - 1 : c;
  }

  // Shrinks an open interval holding exactly one root until its width is at
  // most eps (with neither endpoint a root) or the root is hit exactly.
  RatInterval refine(Rational lo, Rational hi, const Rational& eps) const {
    int slo = sq_int.sign_at(lo);
    int shi = sq_int.sign_at(hi);
    while (hi - lo > eps || slo == 0 || shi == 0) {
      Rational mid = (lo + hi) / Rational(2);
      const int sm = sq_int.sign_at(mid);
      if (sm == 0) return {mid, mid};
      bool go_left;
      if (slo != 0 && shi != 0) {
        go_left = (sm != slo);
      } else {
        go_left = count_open(lo, mid) == 1;
      }
      if (go_left) {
        hi = std::move(mid);
        shi = sm;
      } else {
        lo = std::move(mid);
        slo = sm;
      }
    }
    return {lo, hi};
  }
};

}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  polys_.push_back(primitive(p));
  if (p.degree() >= 1) {
    polys_.push_back(primitive(p.derivative()));
    while (polys_.back().degree() > 0) {
      const Poly& a = polys_[polys_.size() - 2];
      const Poly& b = polys_.back();
      Poly r = poly_divrem(a, b).remainder;
      if (r.is_zero()) break;
      polys_.push_back(primitive(-r));
    }
  }
  ints_.reserve(polys_.size());
  for (const auto& q : polys_) ints_.emplace_back(q);
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(ints_.size());
  for (const auto& q : ints_) s.push_back(q.sign_at(x));
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : ints_) s.push_back(q.sign_at_pos_inf());
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : ints_) s.push_back(q.sign_at_neg_inf());
  return count_variations(s);
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return {};
  if (p.degree() < 1) return p.monic();
  const Poly g = poly_gcd(p, p.derivative());
  return poly_divrem(p, g).quotient.monic();
}

Rational cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  const Rational lead = p.leading().abs();
  Rational m;
  for (int i = 0; i < p.degree(); ++i) m = max(m, p.coeff(static_cast<std::size_t>(i)).abs());
  return Rational(1) + m / lead;
}

std::size_t sturm_count(const Poly& p, const RatInterval& interval) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  const SturmChain chain(squarefree_part(p));
  return static_cast<std::size_t>(chain.variations_at(interval.lo) - chain.variations_at(interval.hi));
}

std::size_t sturm_count_real_line(const Poly& p) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  const SturmChain chain(squarefree_part(p));
  return static_cast<std::size_t>(chain.variations_at_neg_inf() - chain.variations_at_pos_inf());
}

std::vector<RootEnclosure> isolate_real_roots(const Poly& p, const Rational& eps) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  if (eps.sign() <= 0) throw DomainError("isolation width must be positive");
  std::vector<RootEnclosure> out;
  if (p.degree() < 1) return out;

  const Isolator iso(p);
  const Rational bound = cauchy_bound(iso.sqfree);

  struct Work {
    Rational lo, hi;
    int count;
  };
  std::vector<Work> stack;
  const int total = iso.count_open(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  std::vector<RatInterval> found;
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.count == 1) {
      found.push_back(iso.refine(w.lo, w.hi, eps));
      continue;
    }
    Rational mid = (w.lo + w.hi) / Rational(2);
    const bool mid_root = iso.sq_int.sign_at(mid) == 0;
    if (mid_root) found.emplace_back(mid, mid);
    const int left = iso.count_open(w.lo, mid);
    const int right = w.count - left - (mid_root ? 1 : 0);
    if (left > 0) stack.push_back({w.lo, mid, left});
    if (right > 0) stack.push_back({mid, w.hi, right});
  }
  std::sort(found.begin(), found.end(), [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });

  // Multiple roots of p are exactly the roots of gcd(p, p').
  const Poly g = p.degree() >= 1 ? poly_gcd(p, p.derivative()) : Poly::constant(Rational(1));
  std::optional<Isolator> giso;
  if (g.degree() >= 1) giso.emplace(g);
  out.reserve(found.size());
  for (auto& iv : found) {
    bool simple = true;
    if (giso) {
      if (iv.is_point()) {
        simple = giso->sq_int.sign_at(iv.lo) != 0;
      } else {
        simple = giso->count_open(iv.lo, iv.hi) == 0;
      }
    }
    out.push_back({std::move(iv), simple});
  }
  return out;
}

Rational default_min_slack() { return Rational::pow2(-20); }

Rational lower_bound_on_interval(const Poly& p, const RatInterval& interval) {
  if (interval.is_point()) return p.eval(interval.lo);
  const Rational r = interval.width() / Rational(2);
  const Poly s = p.taylor_shift(interval.midpoint());
  Rational bound = s.coeff(0);
  Rational rk(1);
  for (int k = 1; k <= s.degree(); ++k) {
    rk *= r;
    bound -= s.coeff(static_cast<std::size_t>(k)).abs() * rk;
  }
  return bound;
}

namespace {

struct MinBounds {
  Rational lower;  // certified: lower <= p(x) for all x
  Rational upper;  // attained: some x has p(x) = upper
};

// Brackets inf p by refining the critical-point enclosures until the gap
// falls under the slack (or the iteration budget runs out).
MinBounds min_bounds(const Poly& p, const Rational& rel_slack, int max_rounds = 400) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  if (p.degree() == 0) return {p.coeff(0), p.coeff(0)};
  if (p.degree() % 2 == 1 || p.leading().sign() < 0) throw DomainError("unbounded below");

  const Poly d = p.derivative();
  const Isolator iso(d);
  std::vector<RatInterval> crit;
  for (auto& e : isolate_real_roots(d, Rational::pow2(-8))) crit.push_back(std::move(e.interval));

  MinBounds b;
  for (int round = 0;; ++round) {
    bool first = true;
    for (const auto& iv : crit) {
      const Rational lb = lower_bound_on_interval(p, iv);
      const Rational ub = p.eval(iv.midpoint());
      if (first || lb < b.lower) b.lower = lb;
      if (first || ub < b.upper) b.upper = ub;
      first = false;
    }
    const Rational scale = max(Rational(1), b.upper.abs());
    if (b.upper - b.lower <= rel_slack * scale || round >= max_rounds) return b;
    for (auto& iv : crit) {
      if (iv.is_point()) continue;
      iv = iso.refine(iv.lo, iv.hi, iv.width() / Rational(4));
    }
  }
}

}  // namespace

Rational global_min_lower_bound(const Poly& p, const Rational& rel_slack) {
  if (rel_slack.sign() <= 0) throw DomainError("slack must be positive");
  return min_bounds(p, rel_slack).lower;
}

namespace {

/// Product of the squarefree factors of odd multiplicity (Yun's algorithm):
/// the real roots where p changes sign.
Poly odd_multiplicity_part(const Poly& p) {
  const Poly dp = p.derivative();
  const Poly a0 = poly_gcd(p, dp);
  Poly b = poly_divrem(p, a0).quotient;
  Poly c = poly_divrem(dp, a0).quotient;
  Poly d = c - b.derivative();
  Poly odd = Poly::constant(1);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const Poly a = poly_gcd(b, d);
    if (i % 2 == 1) odd = odd * a;
    b = poly_divrem(b, a).quotient;
    c = poly_divrem(d, a).quotient;
    d = c - b.derivative();
  }
  return odd;
}

}  // namespace

std::optional<Rational> certify_nonnegative(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  if (p.degree() == 0) {
    if (p.coeff(0).sign() >= 0) return p.coeff(0);
    return std::nullopt;
  }
  if (p.degree() % 2 == 1 || p.leading().sign() < 0) return std::nullopt;
  Rational slack = default_min_slack();
  for (int i = 0; i < 5; ++i) {
    const MinBounds b = min_bounds(p, slack);
    if (b.lower.sign() >= 0) return b.lower;
    if (b.upper.sign() < 0) return std::nullopt;
    slack *= slack;
  }
  // Positive leading coefficient and every real root of even multiplicity.
  const Poly odd = odd_multiplicity_part(p);
  if (odd.degree() < 1 || sturm_count_real_line(odd) == 0) return Rational(0);
  return std::nullopt;
}

MonotoneSolver::MonotoneSolver(const Poly& p, const Rational& y) {
  if (p.degree() < 1) throw DomainError("monotone_solve needs a nonconstant polynomial");
  const Poly dp = p.derivative();
  if (dp.degree() % 2 == 1) throw DomainError("monotone_solve precondition: derivative floor not certifiable");
  const Rational floor = global_min_lower_bound(dp);
  if (floor.sign() <= 0) throw DomainError("monotone_solve precondition: derivative floor not certifiably positive");
  const Poly q = p - Poly::constant(y);
  shifted_ = IntPoly(q);
  const Rational b = cauchy_bound(q);
  enclosure_.interval = RatInterval(-b, b);
  if (shifted_.sign_at(-b) == 0) enclosure_.interval = RatInterval(-b, -b);
  if (shifted_.sign_at(b) == 0) enclosure_.interval = RatInterval(b, b);
}

const RootEnclosure& MonotoneSolver::refine(const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("enclosure width must be positive");
  RatInterval& iv = enclosure_.interval;
  while (!iv.is_point() && iv.width() > eps) {
    Rational mid = iv.midpoint();
    const int s = shifted_.sign_at(mid);
    if (s == 0) {
      iv = RatInterval(mid, mid);
    } else if (s > 0) {
      iv.hi = std::move(mid);
    } else {
      iv.lo = std::move(mid);
    }
  }
  return enclosure_;
}

RootEnclosure monotone_solve(const Poly& p, const Rational& y, const Rational& eps) {
  MonotoneSolver solver(p, y);
  return solver.refine(eps);
}

}  // namespace entcon
