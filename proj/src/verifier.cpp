#include "entcon/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "entcon/error.hpp"
#include "entcon/growth.hpp"
#include "entcon/roots.hpp"

namespace entcon {

bool VerificationReport::pass() const {
  return std::all_of(stage_checks.begin(), stage_checks.end(), [](const auto& r) { return r.pass; }) &&
         std::all_of(theorem.begin(), theorem.end(), [](const auto& r) { return r.pass; }) &&
         std::all_of(cauchy.begin(), cauchy.end(), [](const auto& r) { return r.pass; });
}

std::vector<CheckResult> VerificationReport::failures() const {
  std::vector<CheckResult> out;
  for (const auto& r : stage_checks) {
    if (!r.pass) out.push_back(r);
  }
  return out;
}

const CheckResult* VerificationReport::find(unsigned stage, const std::string& invariant) const {
  const CheckResult* first = nullptr;
  for (const auto& r : stage_checks) {
    if (r.stage == stage && r.invariant == invariant) {
      if (!r.pass) return &r;
      if (!first) first = &r;
    }
  }
  return first;
}

namespace {

// Collects the first failure of one invariant; later failures are dropped.
class Check {
 public:
  void fail(const std::string& witness) {
    if (pass_) witness_ = witness;
    pass_ = false;
  }
  void require(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
  CheckResult result(unsigned stage, const char* label) const { return {stage, label, pass_, witness_}; }

 private:
  bool pass_ = true;
  std::string witness_;
};

std::vector<unsigned> sorted(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string set_str(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform-ish rational in [lo, hi] with denominator at most 64.
  Rational in(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<long> dd(1, 64);
    const long den = dd(rng_);
    const mpz_class a = (lo * Rational(den)).ceil();
    const mpz_class b = (hi * Rational(den)).floor();
    if (b < a) return lo;
    const mpz_class span = b - a;
    std::uniform_int_distribution<unsigned long> pick(0, span.fits_ulong_p() ? span.get_ui() : ~0UL);
    return Rational(mpz_class(a + pick(rng_)), mpz_class(den));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Points with rational modulus t: t * (p^2 - q^2, 2pq) / (p^2 + q^2).
GaussianRational on_circle(const Rational& t, long p, long q) {
  const Rational s(p * p + q * q);
  return {t * Rational(p * p - q * q) / s, t * Rational(2 * p * q) / s};
}

struct StageView {
  const Construction& c;
  unsigned n;
  const Poly& f() const { return c.f_at(n); }
  const Poly& prev() const { return c.f_at(n - 1); }
  std::vector<unsigned> a_set(unsigned m) const { return m == 0 ? std::vector<unsigned>{} : c.stages[m - 1].a_set; }
  std::vector<unsigned> b_set(unsigned m) const { return m == 0 ? std::vector<unsigned>{} : c.stages[m - 1].b_set; }
};

// Pinned set before stage n: x_P, the handled w_a and registered preimages of B.
std::vector<Rational> pinned_before(const StageView& v) {
  const auto& cfg = v.c.config;
  std::vector<Rational> pts{cfg.x_p};
  for (unsigned a : v.a_set(v.n - 1)) {
    if (a < cfg.w.size()) pts.push_back(cfg.w[a]);
  }
  const PreimageRegistry reg = v.c.registry_at(v.n - 1);
  for (unsigned b : v.b_set(v.n - 1)) {
    if (b >= cfg.w.size()) continue;
    const auto it = reg.find(cfg.w[b]);
    if (it != reg.end()) pts.push_back(it->second);
  }
  return pts;
}

void check_increment(const StageView& v, const VerifyOptions& opts, Check& chk) {
  const unsigned n = v.n;
  const StageRecord& rec = v.c.stages[n - 1];
  const Poly diff = v.f() - v.prev();
  const Rational scale = Rational::pow2(-static_cast<long>(n));

  if (rec.case_tag == CaseTag::B) {
    chk.require(diff.is_zero(), "Case B stage changed f: f_n - f_{n-1} = " + diff.pretty());
    chk.require(rec.m_n.is_zero(), "Case B stage with M_n = " + rec.m_n.str());
    return;
  }
  if (!rec.h || !rec.alpha) {
    chk.fail("Case A stage without h_n or alpha certificate");
    return;
  }
  const Poly& h = *rec.h;
  const AlphaCertificate& cert = *rec.alpha;
  const Rational& alpha = cert.alpha;
  const Rational& m = rec.m_n;
  chk.require(m.sign() >= 0 && m <= Rational(1), "M_n = " + m.str() + " outside [0, 1]");
  chk.require(diff == h.scale(alpha * m), "f_n - f_{n-1} != M_n * alpha_n * h_n");
  chk.require(alpha.sign() > 0 && alpha <= scale, "alpha_n = " + alpha.str() + " outside (0, 2^-n]");
  chk.require(cert.stage == n, "certificate stage " + std::to_string(cert.stage) + " != " + std::to_string(n));
  unsigned beta = 0;
  const Poly expected_h = correction_polynomial(v.c.config.x_p, pinned_before(v), beta);
  chk.require(h == expected_h, "h_n = " + h.pretty() + " does not vanish exactly on the pinned set");
  chk.require(rec.beta == beta, "beta_n = " + std::to_string(rec.beta) + ", expected " + std::to_string(beta));
  if (h.is_zero() || alpha.sign() <= 0) return;

  // Envelope and ratio bound re-derived from h alone.
  const Envelope env = polynomial_envelope(h);
  chk.require(env.m == cert.envelope.m && env.c == cert.envelope.c,
              "envelope mismatch: recorded (" + std::to_string(cert.envelope.m) + ", " + cert.envelope.c.str() +
                  "), derived (" + std::to_string(env.m) + ", " + env.c.str() + ")");
  const unsigned terms = cert.taylor_terms;
  const unsigned expected_terms = std::max(v.c.config.growth.taylor_terms, env.m + 2);
  chk.require(terms == expected_terms,
              "Taylor depth " + std::to_string(terms) + ", expected " + std::to_string(expected_terms));
  if (terms < env.m + 1 || terms > 64) {
    chk.fail("Taylor depth " + std::to_string(terms) + " cannot certify envelope degree " + std::to_string(env.m));
    return;
  }
  const Rational ratio = min_ratio_lower_bound(env.m, env.c, terms);
  chk.require(alpha <= scale * ratio,
              "alpha_n = " + alpha.str() + " exceeds 2^-n * inf T_K/(t^m+c) >= " + (scale * ratio).str());
  chk.require(cert.min_ratio_lower_bound == ratio,
              "recorded ratio bound " + cert.min_ratio_lower_bound.str() + " != " + ratio.str());

  const Poly dh = h.derivative();
  if (dh.degree() >= 1 && (dh.degree() % 2 == 1 || dh.leading().sign() < 0)) {
    chk.fail("h_n' unbounded below");
    return;
  }
  const Rational floor = global_min_lower_bound(dh);
  chk.require(alpha * min(Rational(0), floor) >= -scale,
              "alpha_n * inf h_n' = " + (alpha * floor).str() + " < -2^-n");
  chk.require(cert.deriv_floor == floor, "recorded inf h_n' bound " + cert.deriv_floor.str() + " != " + floor.str());
  Rational bound = min(Rational(1), ratio);
  if (floor.sign() < 0) bound = min(bound, (-floor).inverse());
  const Rational largest = dyadic_floor(scale * bound);
  chk.require(alpha == largest, "alpha_n = " + alpha.str() + " is not the largest admissible 2^-j = " + largest.str());

  Sampler sampler(opts.seed ^ (0x9e37ULL * n));
  const Poly taylor = exp_taylor_poly(terms);
  const Rational tmax(4L * static_cast<long>(env.m));
  for (unsigned s = 0; s < opts.samples; ++s) {
    const Rational t = sampler.in(Rational(0), tmax);
    const Rational lhs = alpha * (t.pow(env.m) + env.c);
    const Rational rhs = scale * taylor.eval(t);
    if (!(lhs <= rhs)) {
      chk.fail("alpha_n (t^m + c) > 2^-n T_K(t) at t = " + t.str());
      break;
    }
  }
  for (unsigned s = 0; s < opts.samples; ++s) {
    const Rational x = sampler.in(Rational(-64), Rational(64));
    if (alpha * dh.eval(x) < -scale) {
      chk.fail("alpha_n h_n'(x) < -2^-n at x = " + x.str());
      break;
    }
  }
  // Spot check of the increment on circles of rational radius.
  const long pq[][2] = {{2, 1}, {3, 2}, {4, 1}, {1, 1}, {5, 2}};
  for (unsigned s = 0; s < opts.samples / 8; ++s) {
    const Rational t = sampler.in(Rational(0), tmax);
    const auto& e = pq[s % 5];
    const GaussianRational z = on_circle(t, e[0], (s % 2) ? -e[1] : e[1]);
    const Rational lhs = diff.eval(z).norm2();
    const Rational bound = scale * taylor.eval(t);
    if (!(lhs <= bound * bound)) {
      chk.fail("|f_n - f_{n-1}|^2 > (2^-n T_K(|z|))^2 at |z| = " + t.str());
      break;
    }
  }
}

}  // namespace

std::vector<CheckResult> check_stage(const Construction& c, unsigned n, const VerifyOptions& opts) {
  if (n > c.stages.size()) throw DomainError("stage " + std::to_string(n) + " not recorded");
  const auto& cfg = c.config;
  const StageView v{c, n};
  const Poly& f = v.f();
  const auto& part = *cfg.partition;
  Check i1, i2, i3, i4, i5, i6, i7;

  // (I) a polynomial with rational coefficients, canonically encoded.
  for (const auto& issue : n > 0 ? c.stages[n - 1].encoding_issues : c.f0_encoding_issues) i1.fail(issue);
  i1.require(f.is_zero() || !f.leading().is_zero(), "leading coefficient is zero");

  // (II)
  const Rational at_p = f.eval(cfg.x_p);
  i2.require(at_p == cfg.y_p, "f_n(x_P) = " + at_p.str() + " != y_P = " + cfg.y_p.str());

  // (III) f_n' - (1/2 + 2^-n) >= 0 on the real line.
  const Rational floor = Rational(1, 2) + Rational::pow2(-static_cast<long>(n));
  const Poly slack = f.derivative() - Poly::constant(floor);
  const auto cert = certify_nonnegative(slack);
  i3.require(cert.has_value(), "cannot certify f_n' >= " + floor.str());

  if (n > 0) {
    const StageRecord& rec = c.stages[n - 1];
    const unsigned k = rec.k;
    const unsigned expected_k = (n - 1) / 2;
    const bool odd = n % 2 == 1;
    const auto out_of_range = [&](const std::vector<unsigned>& v) {
      return std::any_of(v.begin(), v.end(), [&](unsigned i) { return i >= cfg.w.size(); });
    };
    const bool bad_index = out_of_range(v.a_set(n)) || out_of_range(v.b_set(n)) || out_of_range(v.a_set(n - 1)) ||
                           out_of_range(v.b_set(n - 1)) || (rec.witness && *rec.witness >= cfg.w.size());
    if (k != expected_k || (rec.parity == Parity::Odd) != odd || k >= cfg.w.size()) {
      const std::string msg = "stage schedule mismatch: k = " + std::to_string(k);
      i5.fail(msg);
      i6.fail(msg);
    } else if (bad_index) {
      const std::string msg = "A, B or witness index outside W";
      (odd ? i5 : i6).fail(msg);
      i7.fail(msg);
    } else {
      // (IV)
      check_increment(v, opts, i4);

      const Rational& wk = cfg.w[k];
      const auto a_prev = sorted(v.a_set(n - 1));
      const auto b_prev = sorted(v.b_set(n - 1));
      const auto a_now = sorted(rec.a_set);
      const auto b_now = sorted(rec.b_set);
      const PreimageRegistry reg_prev = c.registry_at(n - 1);
      const PreimageRegistry reg_now = c.registry_at(n);

      if (odd) {
        // (V)
        auto a_exp = a_prev;
        a_exp.push_back(k);
        a_exp = sorted(a_exp);
        i5.require(a_now == a_exp, "A_n = " + set_str(a_now) + ", expected " + set_str(a_exp));
        i5.require(b_now == b_prev, "B_n = " + set_str(b_now) + ", expected " + set_str(b_prev));
        const auto pinned = pinned_before(v);
        const bool expect_b = std::find(pinned.begin(), pinned.end(), wk) != pinned.end();
        i5.require((rec.case_tag == CaseTag::B) == expect_b,
                   "case " + to_string(rec.case_tag) + ", expected " + (expect_b ? "B" : "A"));
        if (rec.case_tag == CaseTag::B && wk != cfg.x_p) {
          const bool ok = rec.witness && std::find(b_prev.begin(), b_prev.end(), *rec.witness) != b_prev.end() &&
                          reg_prev.count(cfg.w[*rec.witness]) && reg_prev.at(cfg.w[*rec.witness]) == wk;
          i5.require(ok, "w_k = " + wk.str() + " is not the registered preimage of the recorded witness");
        }
        if (rec.case_tag == CaseTag::A && rec.h && rec.alpha) {
          const Rational fw0 = v.prev().eval(wk);
          const Rational fw1 = fw0 + rec.h->eval(wk) * rec.alpha->alpha;
          const RatInterval expected(min(fw0, fw1), max(fw0, fw1));
          const bool ok = rec.target_interval && rec.target_interval->lo == expected.lo &&
                          rec.target_interval->hi == expected.hi && rec.target && expected.lo < *rec.target &&
                          *rec.target < expected.hi;
          i5.require(ok, "target interval is not the open interval between f_{n-1}(w_k) and (f_{n-1} + g_n)(w_k)");
          if (ok) {
            i5.require(*rec.target == part.pick(part.color(wk), expected),
                       "recorded target " + rec.target->str() + " is not the pick from the target interval");
          }
        }
        if (wk != cfg.x_p) {
          const Rational fw = f.eval(wk);
          i5.require(part.color(fw) == part.color(wk),
                     "f_n(w_k) = " + fw.str() + " has color " + std::to_string(part.color(fw).value) +
                         ", w_k has color " + std::to_string(part.color(wk).value));
          if (rec.target) i5.require(*rec.target == fw, "recorded target " + rec.target->str() + " != f_n(w_k)");
        }
      } else {
        // (VI)
        auto b_exp = b_prev;
        b_exp.push_back(k);
        b_exp = sorted(b_exp);
        i6.require(a_now == a_prev, "A_n = " + set_str(a_now) + ", expected " + set_str(a_prev));
        i6.require(b_now == b_exp, "B_n = " + set_str(b_now) + ", expected " + set_str(b_exp));
        std::optional<Rational> expected_preimage;
        std::optional<unsigned> expected_witness;
        if (wk == cfg.y_p) {
          expected_preimage = cfg.x_p;
        } else {
          for (unsigned a : a_prev) {
            if (v.prev().eval(cfg.w[a]) == wk) {
              expected_witness = a;
              expected_preimage = cfg.w[a];
            }
          }
        }
        const bool expect_b = expected_preimage.has_value();
        i6.require((rec.case_tag == CaseTag::B) == expect_b,
                   "case " + to_string(rec.case_tag) + ", expected " + (expect_b ? "B" : "A"));
        if (rec.case_tag == CaseTag::B) {
          i6.require(rec.witness == expected_witness, "recorded witness does not map onto w_k under f_{n-1}");
        }
        if (rec.case_tag == CaseTag::A && rec.h && rec.alpha) {
          // Every point of the gap lies between f_{n-1}^{-1}(w_k) and (f_{n-1} + g_n)^{-1}(w_k).
          const Poly& before = v.prev();
          const Poly after = before + rec.h->scale(rec.alpha->alpha);
          const auto between = [&](const Rational& t) { return (before.eval(t) - wk) * (after.eval(t) - wk) <= 0; };
          const bool ok = rec.target_interval && rec.target && rec.target_interval->lo < *rec.target &&
                          *rec.target < rec.target_interval->hi && between(rec.target_interval->lo) &&
                          between(rec.target_interval->hi);
          i6.require(ok, "target interval does not separate the preimages of w_k under f_{n-1} and f_{n-1} + g_n");
          if (ok) {
            const auto gap = separating_gap(before, after, wk);
            i6.require(gap && gap->lo == rec.target_interval->lo && gap->hi == rec.target_interval->hi,
                       "target interval differs from the re-derived separating gap");
            i6.require(*rec.target == part.pick(part.color(wk), *rec.target_interval),
                       "recorded target " + rec.target->str() + " is not the pick from the target interval");
          }
        }
        const auto it = reg_now.find(wk);
        if (it == reg_now.end()) {
          i6.fail("no registered preimage for w_k = " + wk.str());
        } else {
          const Rational& x = it->second;
          const Rational fx = f.eval(x);
          i6.require(fx == wk, "f_n(" + x.str() + ") = " + fx.str() + " != w_k = " + wk.str());
          if (rec.case_tag == CaseTag::A && rec.target) {
            i6.require(*rec.target == x, "recorded target " + rec.target->str() + " != registered preimage");
          }
          if (wk != cfg.y_p) {
            i6.require(part.color(x) == part.color(wk),
                       "f_n^{-1}(w_k) = " + x.str() + " has color " + std::to_string(part.color(x).value) +
                           ", w_k has color " + std::to_string(part.color(wk).value));
          }
        }
      }

      // (VII) f_n agrees with f_{n-1} on A_{n-1}; preimages of B_{n-1} unchanged.
      const Poly& prev = v.prev();
      for (unsigned a : a_prev) {
        const Rational& x = cfg.w[a];
        const Rational now = f.eval(x);
        const Rational before = prev.eval(x);
        if (now != before) {
          i7.fail("f_n(w_" + std::to_string(a) + ") = " + now.str() + " != f_{n-1}(w_" + std::to_string(a) +
                  ") = " + before.str());
        }
      }
      for (unsigned b : b_prev) {
        const Rational& wb = cfg.w[b];
        const auto before = reg_prev.find(wb);
        const auto now = reg_now.find(wb);
        if (before == reg_prev.end() || now == reg_now.end()) {
          i7.fail("registry lost w_" + std::to_string(b));
          continue;
        }
        i7.require(before->second == now->second, "registered preimage of w_" + std::to_string(b) + " moved");
        const Rational fx = f.eval(now->second);
        i7.require(fx == wb, "f_n(f_{n-1}^{-1}(w_" + std::to_string(b) + ")) = " + fx.str() + " != " + wb.str());
      }
    }
  }
  return {i1.result(n, "I"),  i2.result(n, "II"), i3.result(n, "III"), i4.result(n, "IV"),
          i5.result(n, "V"),  i6.result(n, "VI"), i7.result(n, "VII")};
}

std::vector<TheoremResult> check_theorem_conclusions(const Construction& c) {
  const auto& cfg = c.config;
  const auto& part = *cfg.partition;
  const auto big_n = static_cast<unsigned>(c.stages.size());
  std::vector<TheoremResult> out;
  const Poly& final_f = c.f_at(big_n);

  {
    const Rational v = final_f.eval(cfg.x_p);
    out.push_back({-1, "interpolation", v == cfg.y_p, v == cfg.y_p ? "" : "f_N(x_P) = " + v.str()});
  }
  {
    const auto ok = certify_nonnegative(final_f.derivative() - Poly::constant(Rational(1, 2)));
    out.push_back({-1, "derivative-floor", ok.has_value(), ok ? "" : "cannot certify f_N' >= 1/2"});
  }

  for (unsigned i = 0; 2 * i + 2 <= big_n && i < cfg.w.size(); ++i) {
    const Rational& wi = cfg.w[i];
    const long idx = static_cast<long>(i);

    TheoremResult fwd{idx, "forward-constancy", true, ""};
    const Rational value = c.f_at(2 * i + 1).eval(wi);
    for (unsigned n = 2 * i + 2; n <= big_n; ++n) {
      const Rational now = c.f_at(n).eval(wi);
      if (now != value) {
        fwd = {idx, "forward-constancy", false,
               "f_" + std::to_string(n) + "(w_i) = " + now.str() + " != " + value.str()};
        break;
      }
    }
    out.push_back(fwd);

    TheoremResult bwd{idx, "backward-constancy", true, ""};
    std::optional<Rational> pre;
    for (unsigned n = 2 * i + 2; n <= big_n; ++n) {
      const auto reg = c.registry_at(n);
      const auto it = reg.find(wi);
      if (it == reg.end()) {
        bwd = {idx, "backward-constancy", false, "no preimage registered at stage " + std::to_string(n)};
        break;
      }
      if (pre && *pre != it->second) {
        bwd = {idx, "backward-constancy", false, "preimage moved at stage " + std::to_string(n)};
        break;
      }
      pre = it->second;
      if (c.f_at(n).eval(*pre) != wi) {
        bwd = {idx, "backward-constancy", false, "f_" + std::to_string(n) + "(" + pre->str() + ") != w_i"};
        break;
      }
    }
    out.push_back(bwd);

    if (wi != cfg.x_p) {
      const Rational fw = final_f.eval(wi);
      const bool ok = part.color(fw) == part.color(wi);
      out.push_back({idx, "forward-color", ok, ok ? "" : "f(w_i) = " + fw.str() + " outside D_i"});
    } else {
      out.push_back({idx, "forward-color", true, "vacuous: w_i = x_P"});
    }
    if (wi != cfg.y_p) {
      if (!pre) {
        out.push_back({idx, "backward-color", false, "no registered preimage"});
      } else {
        const bool ok = part.color(*pre) == part.color(wi);
        out.push_back({idx, "backward-color", ok, ok ? "" : "f^{-1}(w_i) = " + pre->str() + " outside D_i"});
      }
    } else {
      out.push_back({idx, "backward-color", true, "vacuous: w_i = y_P"});
    }
  }
  return out;
}

std::vector<GaussianRational> disk_grid(const Rational& radius, std::size_t count) {
  const auto side = static_cast<long>(std::lround(std::sqrt(static_cast<double>(count))));
  if (side < 1 || static_cast<std::size_t>(side * side) != count) {
    throw DomainError("grid size must be a positive perfect square");
  }
  // Coordinates (i - h) / h * (7/10) r with h = (side - 1) / 2 (times two to
  // stay integral); the corners have |z|^2 = 0.98 r^2.
  std::vector<GaussianRational> grid;
  grid.reserve(count);
  const long h2 = side - 1;
  for (long i = 0; i < side; ++i) {
    for (long j = 0; j < side; ++j) {
      if (h2 == 0) {
        grid.emplace_back(Rational(0), Rational(0));
        continue;
      }
      grid.emplace_back(radius * Rational(7 * (2 * i - h2), 10 * h2), radius * Rational(7 * (2 * j - h2), 10 * h2));
    }
  }
  return grid;
}

std::vector<CauchyResult> check_cauchy_on_disk(const Construction& c, const Rational& radius,
                                               std::span<const GaussianRational> grid) {
  const Rational r2 = radius * radius;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].norm2() > r2) throw DomainError("grid point " + std::to_string(i) + " outside the disk");
  }
  const Rational upper = growth_upper(c.config.growth, radius);
  std::vector<CauchyResult> out;
  for (unsigned n = 1; n <= c.stages.size(); ++n) {
    const Poly diff = c.f_at(n) - c.f_at(n - 1);
    const Rational bound = Rational::pow2(-static_cast<long>(n)) * upper;
    const Rational bound2 = bound * bound;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Rational d2 = diff.eval(grid[i]).norm2();
      const bool ok = d2 <= bound2;
      out.push_back({n, i, ok, ok ? "" : "|f_n - f_{n-1}|^2 = " + d2.approx(12) + " > " + bound2.approx(12)});
    }
  }
  return out;
}

VerificationReport verify(const Construction& c, const VerifyOptions& opts) {
  VerificationReport rep;
  for (unsigned n = 0; n <= c.stages.size(); ++n) {
    auto r = check_stage(c, n, opts);
    rep.stage_checks.insert(rep.stage_checks.end(), r.begin(), r.end());
  }
  rep.theorem = check_theorem_conclusions(c);
  const auto grid = disk_grid(c.config.radius, opts.grid_points);
  rep.cauchy = check_cauchy_on_disk(c, c.config.radius, grid);
  return rep;
}

}  // namespace entcon
