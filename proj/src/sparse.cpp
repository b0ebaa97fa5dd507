#include "entcon/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "entcon/error.hpp"
#include "entcon/roots.hpp"

namespace entcon {

void SystemConfig::validate() const {
  std::set<Rational> seen(reals.begin(), reals.end());
  if (seen.size() != reals.size()) throw ConfigError("duplicate entry in reals");
  if (radius.sign() < 0) throw ConfigError("radius must be nonnegative");
  if (!stages_per_function.empty()) {
    if (stages_per_function.size() != points.size())
      throw ConfigError("stage schedule length must match the number of points");
    for (std::size_t a = 0; a < points.size(); ++a)
      if (stages_per_function[a] > 2 * prefix_length(a))
        throw ConfigError("stage schedule exceeds 2|W_alpha| for alpha = " + std::to_string(a));
  }
}

std::size_t SystemConfig::prefix_length(std::size_t alpha) const { return std::min(alpha, reals.size()); }

unsigned SystemConfig::stages_for(std::size_t alpha) const {
  if (!stages_per_function.empty()) return stages_per_function.at(alpha);
  return static_cast<unsigned>(2 * prefix_length(alpha));
}

ConstructionConfig SystemConfig::construction_config(std::size_t alpha) const {
  ConstructionConfig c;
  c.x_p = points.at(alpha).first;
  c.y_p = points.at(alpha).second;
  c.w.assign(reals.begin(), reals.begin() + static_cast<std::ptrdiff_t>(prefix_length(alpha)));
  c.partition = partition;
  c.growth = growth;
  c.stages = stages_for(alpha);
  c.radius = radius;
  return c;
}

const Poly& SparseSample::f(std::size_t alpha) const {
  const Construction& c = constructions.at(alpha);
  return c.f_at(static_cast<unsigned>(c.stages.size()));
}

bool SparseSample::handled(std::size_t alpha, std::size_t xi) const {
  const Construction& c = constructions.at(alpha);
  return xi < c.config.w.size() && 2 * xi + 2 <= c.stages.size();
}

std::optional<Rational> SparseSample::preimage(std::size_t alpha, std::size_t xi) const {
  if (!handled(alpha, xi)) return std::nullopt;
  const Construction& c = constructions[alpha];
  auto reg = c.registry_at(static_cast<unsigned>(c.stages.size()));
  auto it = reg.find(config.reals[xi]);
  if (it == reg.end()) return std::nullopt;
  return it->second;
}

SparseSample build_finite_system(const SystemConfig& config, unsigned workers) {
  config.validate();
  const std::size_t count = config.points.size();
  SparseSample sample;
  sample.config = config;
  sample.constructions.resize(count);
  sample.reports.resize(count);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t a = next++; a < count; a = next++) {
      try {
        sample.constructions[a] = construct(config.construction_config(a));
        sample.reports[a] = verify(sample.constructions[a]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return sample;
}

bool SparsenessReport::pass() const {
  if (!constructions_verified) return false;
  for (const auto& cell : cells)
    if (!cell.pass) return false;
  for (std::size_t xi = 0; xi < exceptional_counts.size(); ++xi)
    if (exceptional_counts[xi] > xi + 1) return false;
  return true;
}

SparsenessReport check_sparseness(const SparseSample& sample) {
  SparsenessReport report;
  const auto& cfg = sample.config;
  const auto& part = *cfg.partition;
  for (const auto& r : sample.reports)
    if (!r.pass()) report.constructions_verified = false;

  report.exceptional_counts.assign(cfg.reals.size(), 0);
  for (std::size_t xi = 0; xi < cfg.reals.size(); ++xi) {
    const Rational& w = cfg.reals[xi];
    const unsigned long cw = part.color(w).value;
    for (std::size_t a = 0; a < sample.constructions.size(); ++a) {
      SparsenessCell cell;
      cell.alpha = a;
      cell.xi = xi;
      if (!sample.handled(a, xi)) {
        cell.exceptional = true;
        ++report.exceptional_counts[xi];
        report.cells.push_back(std::move(cell));
        continue;
      }
      const auto& [a_pt, b_pt] = cfg.points[a];
      const Poly& f = sample.f(a);
      if (w != a_pt) {
        Rational v = f.eval(w);
        cell.forward_color = part.color(v).value;
        if (*cell.forward_color != cw) {
          cell.pass = false;
          cell.witness = "color(f(w)) = " + std::to_string(*cell.forward_color) + " != " + std::to_string(cw);
        }
      }
      if (w != b_pt) {
        auto pre = sample.preimage(a, xi);
        if (!pre) {
          cell.pass = false;
          cell.witness = "no registered preimage of " + w.str();
        } else if (f.eval(*pre) != w) {
          cell.pass = false;
          cell.witness = "f(" + pre->str() + ") != " + w.str();
        } else {
          cell.backward_color = part.color(*pre).value;
          if (*cell.backward_color != cw) {
            cell.pass = false;
            cell.witness = "color(f^-1(w)) = " + std::to_string(*cell.backward_color) + " != " + std::to_string(cw);
          }
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

EquivGraph::EquivGraph(std::vector<Rational> universe, std::vector<Edge> edges)
    : universe_(std::move(universe)), edges_(std::move(edges)), parent_(universe_.size()) {
  std::sort(edges_.begin(), edges_.end());
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  for (const Edge& e : edges_) {
    std::size_t ra = find(e.from), rb = find(e.to);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }
}

std::size_t EquivGraph::find(std::size_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

std::optional<std::size_t> EquivGraph::index_of(const Rational& x) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), x);
  if (it == universe_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - universe_.begin());
}

bool EquivGraph::same_component(std::size_t a, std::size_t b) const { return find(a) == find(b); }

bool EquivGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.from == from && e.to == to; });
}

std::vector<std::vector<std::size_t>> EquivGraph::components() const {
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < universe_.size(); ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> default_universe(const SparseSample& sample) {
  std::set<Rational> u(sample.config.reals.begin(), sample.config.reals.end());
  for (std::size_t a = 0; a < sample.constructions.size(); ++a) {
    u.insert(sample.config.points[a].first);
    u.insert(sample.config.points[a].second);
    const Construction& c = sample.constructions[a];
    for (const auto& s : c.stages) {
      if (s.target) u.insert(*s.target);
      for (const auto& [w, x] : s.registry_delta) u.insert(x);
    }
  }
  return {u.begin(), u.end()};
}

EquivGraph build_equiv_graph(const SparseSample& sample, std::span<const Rational> universe) {
  std::vector<Rational> pts(universe.begin(), universe.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < sample.constructions.size(); ++a) {
    const auto& [a_pt, b_pt] = sample.config.points[a];
    const Poly& f = sample.f(a);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] == a_pt) continue;
      Rational v = f.eval(pts[i]);
      if (v == b_pt) continue;
      auto it = std::lower_bound(pts.begin(), pts.end(), v);
      if (it != pts.end() && *it == v) edges.push_back({i, static_cast<std::size_t>(it - pts.begin()), a});
    }
  }
  return EquivGraph(std::move(pts), std::move(edges));
}

UpperLowerReport check_upper_lower_sets(const EquivGraph& graph, const SparseSample& sample, const Rational& z) {
  UpperLowerReport rep;
  rep.z = z;
  auto zi = graph.index_of(z);
  if (!zi) throw DomainError("point " + z.str() + " is not in the universe");
  const auto uni = graph.universe();
  for (const Edge& e : graph.edges()) {
    if (e.from == *zi) rep.upper.push_back(uni[e.to]);
    if (e.to == *zi) rep.lower.push_back(uni[e.from]);
  }
  auto dedupe = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(rep.upper);
  dedupe(rep.lower);

  // Direct images and preimages, the latter solved independently of the edge list.
  std::set<Rational> images, preimages;
  const Rational eps = Rational::pow2(-64);
  for (std::size_t a = 0; a < sample.constructions.size(); ++a) {
    const auto& [a_pt, b_pt] = sample.config.points[a];
    const Poly& f = sample.f(a);
    if (z != a_pt) {
      Rational v = f.eval(z);
      images.insert(v);
      auto vi = graph.index_of(v);
      if (!vi) {
        ++rep.images_outside;
      } else if (v != b_pt && !(graph.has_edge(*zi, *vi) && graph.same_component(*zi, *vi))) {
        rep.edges_present = false;
        rep.witness = "f_" + std::to_string(a) + "(" + z.str() + ") = " + v.str() + " not joined to z";
      }
    }
    if (z != b_pt) {
      const RootEnclosure enc = monotone_solve(f, z, eps);
      if (enc.interval.is_point()) {
        preimages.insert(enc.interval.lo);
        continue;
      }
      bool found = false;
      for (const Rational& u : uni) {
        if (u < enc.interval.lo) continue;
        if (u > enc.interval.hi) break;
        if (f.eval(u) == z) {
          preimages.insert(u);
          found = true;
        }
      }
      if (!found) ++rep.preimages_outside;
    }
  }
  for (const Rational& v : rep.upper)
    if (!images.contains(v)) {
      rep.upper_contained = false;
      rep.witness = v.str() + " in z^up is not a direct image";
    }
  for (const Rational& u : rep.lower)
    if (!preimages.contains(u)) {
      rep.lower_contained = false;
      rep.witness = u.str() + " in z_down is not a direct preimage";
    }
  return rep;
}

}  // namespace entcon
