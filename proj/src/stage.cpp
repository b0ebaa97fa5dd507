#include "entcon/stage.hpp"

#include <algorithm>
#include <set>

#include "entcon/error.hpp"
#include "entcon/roots.hpp"

namespace entcon {

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }
std::string to_string(CaseTag c) { return c == CaseTag::A ? "A" : "B"; }

void ConstructionConfig::validate() const {
  std::set<Rational> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!seen.insert(w[i]).second) {
      throw ConfigError("duplicate entry in w at index " + std::to_string(i) + ": " + w[i].str());
    }
  }
  if (stages > 2 * w.size()) {
    throw ConfigError("stages = " + std::to_string(stages) + " exceeds 2|w| = " + std::to_string(2 * w.size()));
  }
  if (!partition) throw ConfigError("no partition configured");
  if (radius.sign() < 0) throw ConfigError("radius must be nonnegative");
}

const Poly& Construction::f_at(unsigned n) const {
  if (n == 0) return f0;
  if (n > stages.size()) throw DomainError("stage " + std::to_string(n) + " not present");
  return stages[n - 1].f;
}

PreimageRegistry Construction::registry_at(unsigned n) const {
  PreimageRegistry reg;
  for (unsigned i = 0; i < n && i < stages.size(); ++i) {
    for (const auto& [w, x] : stages[i].registry_delta) reg[w] = x;
  }
  return reg;
}

ConstructionState init(const ConstructionConfig& config) {
  config.validate();
  ConstructionState st;
  st.config = config;
  st.f = Poly({config.y_p - Rational(3, 2) * config.x_p, Rational(3, 2)});
  return st;
}

Poly correction_polynomial(const Rational& x_p, const std::vector<Rational>& pinned, unsigned& beta) {
  std::set<Rational> roots(pinned.begin(), pinned.end());
  roots.erase(x_p);
  const std::vector<Rational> rv(roots.begin(), roots.end());
  beta = rv.size() % 2 == 0 ? 1 : 2;
  return Poly::linear_factor(x_p).pow(beta) * poly_from_roots(rv);
}

std::optional<RatInterval> separating_gap(const Poly& before, const Poly& after, const Rational& w) {
  // The gap between the two enclosures lies strictly between the true preimages.
  MonotoneSolver s0(before, w);
  MonotoneSolver s1(after, w);
  Rational eps = Rational::pow2(-8);
  for (int round = 0; round < 64; ++round) {
    const RatInterval& e0 = s0.refine(eps).interval;
    const RatInterval& e1 = s1.refine(eps).interval;
    if (e0.hi < e1.lo) return RatInterval(e0.hi, e1.lo);
    if (e1.hi < e0.lo) return RatInterval(e1.hi, e0.lo);
    eps *= eps;
  }
  return std::nullopt;
}

namespace {

// {x_P} and A are W values; B entries contribute their registered preimages.
std::vector<Rational> pinned_points(const ConstructionState& st) {
  std::vector<Rational> pts{st.config.x_p};
  for (unsigned a : st.a_set) pts.push_back(st.config.w[a]);
  for (unsigned b : st.b_set) pts.push_back(st.registry.at(st.config.w[b]));
  return pts;
}

void check_stage_order(const ConstructionState& st, unsigned k, unsigned n) {
  if (st.n + 1 != n) {
    throw ConstructionError("stage " + std::to_string(n) + " requested after stage " + std::to_string(st.n));
  }
  if (k >= st.config.w.size()) throw ConstructionError("w index " + std::to_string(k) + " out of range");
}

StageRecord begin_record(const ConstructionState& st, unsigned n, unsigned k, Parity parity) {
  StageRecord rec;
  rec.n = n;
  rec.k = k;
  rec.parity = parity;
  (void)st;
  return rec;
}

void finish_record(ConstructionState& st, StageRecord& rec) {
  st.n = rec.n;
  rec.f = st.f;
  rec.a_set = st.a_set;
  rec.b_set = st.b_set;
}

}  // namespace

StageRecord odd_step(ConstructionState& st, unsigned k) {
  const unsigned n = 2 * k + 1;
  check_stage_order(st, k, n);
  const auto& cfg = st.config;
  const Rational& wk = cfg.w[k];
  StageRecord rec = begin_record(st, n, k, Parity::Odd);

  const std::vector<Rational> pinned = pinned_points(st);
  const bool pinned_already = std::find(pinned.begin(), pinned.end(), wk) != pinned.end();

  if (pinned_already) {
    rec.case_tag = CaseTag::B;
    if (wk != cfg.x_p) {
      // w_k must be the registered preimage of exactly one earlier w_j.
      std::vector<unsigned> hits;
      for (unsigned b : st.b_set) {
        if (st.registry.at(cfg.w[b]) == wk) hits.push_back(b);
      }
      if (hits.size() != 1) {
        throw ConstructionError("stage " + std::to_string(n) + ": expected a unique registry witness for w_" +
                                std::to_string(k) + ", found " + std::to_string(hits.size()));
      }
      rec.witness = hits.front();
      if (st.f.eval(wk) != cfg.w[hits.front()]) {
        throw ConstructionError("stage " + std::to_string(n) + ": registry witness does not evaluate exactly");
      }
    }
  } else {
    rec.case_tag = CaseTag::A;
    unsigned beta = 0;
    Poly h = correction_polynomial(cfg.x_p, pinned, beta);
    AlphaCertificate cert = select_alpha(h, n, cfg.growth);
    const Poly g = h.scale(cert.alpha);
    const Rational fw = st.f.eval(wk);
    const Rational gw = g.eval(wk);
    if (gw.is_zero()) throw ConstructionError("stage " + std::to_string(n) + ": g_n vanishes at w_k");
    const Rational other = fw + gw;
    RatInterval interval(min(fw, other), max(fw, other));
    const Rational d = cfg.partition->pick(cfg.partition->color(wk), interval);
    const Rational m = (d - fw) / gw;
    if (!(m.sign() > 0 && m < Rational(1))) {
      throw ConstructionError("stage " + std::to_string(n) + ": M_n = " + m.str() + " outside (0, 1)");
    }
    st.f = st.f + g.scale(m);
    if (st.f.eval(wk) != d) throw ConstructionError("stage " + std::to_string(n) + ": f_n(w_k) != d");
    rec.h = std::move(h);
    rec.beta = beta;
    rec.alpha = std::move(cert);
    rec.m_n = m;
    rec.target = d;
    rec.target_interval = std::move(interval);
  }
  st.a_set.push_back(k);
  finish_record(st, rec);
  return rec;
}

StageRecord even_step(ConstructionState& st, unsigned k) {
  const unsigned n = 2 * k + 2;
  check_stage_order(st, k, n);
  const auto& cfg = st.config;
  const Rational& wk = cfg.w[k];
  StageRecord rec = begin_record(st, n, k, Parity::Even);

  // Case B iff w_k is y_P or f_{n-1}(w_j) for a handled w_j (B never holds w_k).
  std::optional<Rational> preimage;
  if (wk == cfg.y_p) {
    preimage = cfg.x_p;
  } else {
    std::vector<unsigned> hits;
    for (unsigned a : st.a_set) {
      if (st.f.eval(cfg.w[a]) == wk) hits.push_back(a);
    }
    if (hits.size() > 1) {
      throw ConstructionError("stage " + std::to_string(n) + ": f_{n-1} is not injective on A");
    }
    if (!hits.empty()) {
      rec.witness = hits.front();
      preimage = cfg.w[hits.front()];
    }
  }

  if (preimage) {
    rec.case_tag = CaseTag::B;
    rec.registry_delta.emplace_back(wk, *preimage);
  } else {
    rec.case_tag = CaseTag::A;
    unsigned beta = 0;
    Poly h = correction_polynomial(cfg.x_p, pinned_points(st), beta);
    AlphaCertificate cert = select_alpha(h, n, cfg.growth);
    const Poly g = h.scale(cert.alpha);

    const std::optional<RatInterval> gap = separating_gap(st.f, st.f + g, wk);
    if (!gap) {
      throw ConstructionError("stage " + std::to_string(n) + ": preimage enclosures failed to separate");
    }
    const Rational d = cfg.partition->pick(cfg.partition->color(wk), *gap);
    const Rational m = (wk - st.f.eval(d)) / g.eval(d);
    if (!(m.sign() > 0 && m < Rational(1))) {
      throw ConstructionError("stage " + std::to_string(n) + ": M_n = " + m.str() + " outside (0, 1)");
    }
    st.f = st.f + g.scale(m);
    if (st.f.eval(d) != wk) throw ConstructionError("stage " + std::to_string(n) + ": f_n(d) != w_k");
    rec.h = std::move(h);
    rec.beta = beta;
    rec.alpha = std::move(cert);
    rec.m_n = m;
    rec.target = d;
    rec.target_interval = *gap;
    rec.registry_delta.emplace_back(wk, d);
  }
  for (const auto& [w, x] : rec.registry_delta) st.registry[w] = x;
  st.b_set.push_back(k);
  finish_record(st, rec);
  return rec;
}

std::vector<StageRecord> run(const ConstructionConfig& config) {
  ConstructionState st = init(config);
  std::vector<StageRecord> out;
  out.reserve(config.stages);
  for (unsigned n = 1; n <= config.stages; ++n) {
    const unsigned k = (n - 1) / 2;
    out.push_back(n % 2 == 1 ? odd_step(st, k) : even_step(st, k));
  }
  return out;
}

Construction construct(const ConstructionConfig& config) {
  Construction c;
  c.config = config;
  c.f0 = init(config).f;
  c.stages = run(config);
  return c;
}

}  // namespace entcon
