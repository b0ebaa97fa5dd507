#include <gtest/gtest.h>

#include <algorithm>

#include "entcon/error.hpp"
#include "entcon/sparse.hpp"
#include "support.hpp"

using namespace entcon;
using namespace entcon::testing;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
const DyadicValuationPartition kPart;

SystemConfig system(std::vector<std::pair<Rational, Rational>> points, std::vector<Rational> reals) {
  SystemConfig c;
  c.points = std::move(points);
  c.reals = std::move(reals);
  return c;
}

SystemConfig random_system(std::uint64_t seed, unsigned count) {
  Gen g(seed);
  SystemConfig c;
  for (unsigned a = 0; a < count; ++a) c.points.emplace_back(g.rational(), g.rational());
  c.reals = g.distinct(count);
  return c;
}

}  // namespace

TEST(SystemConfig, Validation) {
  EXPECT_THROW(system({{q(0), q(0)}}, {q(1), q(1)}).validate(), ConfigError);
  auto c = system({{q(0), q(0)}, {q(1), q(1)}}, {q(1)});
  c.stages_per_function = {0};
  EXPECT_THROW(c.validate(), ConfigError);
  c.stages_per_function = {0, 3};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(FiniteSystem, FirstFunctionIsAffineBase) {
  const SparseSample s = build_finite_system(system({{q(1), q(2)}, {q(0), q(0)}}, {q(3), q(4)}), 1);
  EXPECT_TRUE(s.constructions[0].stages.empty());
  EXPECT_EQ(s.f(0), (Poly{q(1, 2), q(3, 2)}));
  EXPECT_EQ(s.constructions[1].stages.size(), 2u);
}

TEST(FiniteSystem, EmptySystemIsVacuousPass) {
  const SparseSample s = build_finite_system(system({}, {}), 1);
  EXPECT_TRUE(check_sparseness(s).pass());
  EXPECT_TRUE(build_equiv_graph(s, default_universe(s)).universe().empty());
}

TEST(FiniteSystem, ThreeByThree) {
  const SparseSample s = build_finite_system(random_system(61, 3), 2);
  ASSERT_EQ(s.constructions.size(), 3u);
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_TRUE(s.reports[a].pass());
    EXPECT_EQ(s.constructions[a].config.w.size(), a);
  }
  EXPECT_TRUE(check_sparseness(s).pass());
}

TEST(Sparseness, FullColorTable) {
  const SparseSample s = build_finite_system(random_system(62, 5), 0);
  const SparsenessReport r = check_sparseness(s);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.cells.size(), 25u);
  for (std::size_t xi = 0; xi < 5; ++xi) EXPECT_EQ(r.exceptional_counts[xi], xi + 1);
  // Recompute every asserted cell by direct evaluation.
  for (const auto& cell : r.cells) {
    EXPECT_EQ(cell.exceptional, cell.alpha <= cell.xi);
    if (cell.exceptional) continue;
    const Rational& w = s.config.reals[cell.xi];
    const auto& [a_pt, b_pt] = s.config.points[cell.alpha];
    if (w != a_pt) EXPECT_EQ(kPart.color(s.f(cell.alpha).eval(w)), kPart.color(w));
    if (w != b_pt) {
      const Rational x = s.constructions[cell.alpha].registry_at(static_cast<unsigned>(2 * cell.alpha)).at(w);
      EXPECT_EQ(s.f(cell.alpha).eval(x), w);
      EXPECT_EQ(kPart.color(x), kPart.color(w));
    }
  }
}

TEST(Sparseness, SingleFunctionVacuous) {
  const SparseSample s = build_finite_system(system({{q(0), q(1)}}, {q(5)}), 1);
  const SparsenessReport r = check_sparseness(s);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.exceptional_counts, std::vector<std::size_t>{1});
}

TEST(Sparseness, TamperedTargetNamesCell) {
  SparseSample s = build_finite_system(random_system(63, 3), 1);
  auto& delta = s.constructions[2].stages[1].registry_delta.at(0);
  delta.second = delta.second + q(1, 3);
  const SparsenessReport r = check_sparseness(s);
  EXPECT_FALSE(r.pass());
  const auto bad = std::find_if(r.cells.begin(), r.cells.end(), [](const SparsenessCell& c) { return !c.pass; });
  ASSERT_NE(bad, r.cells.end());
  EXPECT_EQ(bad->alpha, 2u);
  EXPECT_EQ(bad->xi, 0u);
}

TEST(Sparseness, ShortScheduleExceedsExceptionalBound) {
  auto cfg = random_system(64, 3);
  cfg.stages_per_function = {0, 2, 2};
  const SparsenessReport r = check_sparseness(build_finite_system(cfg, 1));
  EXPECT_EQ(r.exceptional_counts[1], 3u);
  EXPECT_FALSE(r.pass());
}

TEST(EquivGraph, WorkedExampleEdge) {
  const SparseSample s = build_finite_system(system({{q(3), q(3)}, {q(0), q(0)}}, {q(1)}), 1);
  const auto g = build_equiv_graph(s, default_universe(s));
  const auto from = g.index_of(q(1)), to = g.index_of(q(5, 3));
  ASSERT_TRUE(from && to);
  EXPECT_TRUE(g.has_edge(*from, *to));
  EXPECT_TRUE(g.same_component(*from, *to));
  const auto edge = std::find_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.from == *from && e.to == *to; });
  EXPECT_EQ(edge->alpha, 1u);
}

TEST(EquivGraph, ExceptionsExcludeBasePoint) {
  const SparseSample s = build_finite_system(system({{q(2), q(7)}}, {}), 1);
  const std::vector<Rational> universe{q(2)};
  EXPECT_TRUE(build_equiv_graph(s, universe).edges().empty());
  // Also when the image lands in the universe: (x_P, y_P) is never an edge.
  const std::vector<Rational> both{q(2), q(7)};
  EXPECT_TRUE(build_equiv_graph(s, both).edges().empty());
}

TEST(EquivGraphProperty, ComponentsAreAnEquivalenceIndependentOfOrder) {
  Gen g(65);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 15));
    std::vector<Rational> universe = g.distinct(n);
    std::sort(universe.begin(), universe.end());
    std::vector<Edge> edges;
    for (int e = 0; e < g.integer(0, 12); ++e)
      edges.push_back({static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1)),
                       static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1)), 0});
    std::vector<Edge> shuffled = edges;
    std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
    const EquivGraph a(universe, edges), b(universe, shuffled);
    EXPECT_EQ(a.components(), b.components());
    std::size_t total = 0;
    for (const auto& comp : a.components()) {
      total += comp.size();
      // Component size bounded by 1 + edges touching it.
      std::size_t touching = 0;
      for (const auto& e : edges)
        if (std::binary_search(comp.begin(), comp.end(), e.from)) ++touching;
      EXPECT_LE(comp.size(), 1 + touching);
    }
    EXPECT_EQ(total, n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(a.same_component(i, i));
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(a.same_component(i, j), a.same_component(j, i));
    }
    for (const auto& e : edges) EXPECT_TRUE(a.same_component(e.from, e.to));
  }
}

TEST(UpperLower, ContainmentsAndPartTwo) {
  const SparseSample s = build_finite_system(random_system(66, 3), 1);
  const auto g = build_equiv_graph(s, default_universe(s));
  for (const auto& z : g.universe()) {
    const UpperLowerReport r = check_upper_lower_sets(g, s, z);
    EXPECT_TRUE(r.pass()) << z.str() << ": " << r.witness;
    EXPECT_LE(r.upper.size(), 3u);
    EXPECT_LE(r.lower.size(), 3u);
  }
  const UpperLowerReport w0 = check_upper_lower_sets(g, s, s.config.reals[0]);
  EXPECT_TRUE(w0.pass());
  EXPECT_THROW(check_upper_lower_sets(g, s, q(1000)), DomainError);
}

TEST(UpperLower, BasePointOfEveryFunction) {
  const SparseSample s = build_finite_system(system({{q(1), q(0)}, {q(1), q(2)}}, {q(3)}), 1);
  const auto g = build_equiv_graph(s, default_universe(s));
  const UpperLowerReport r = check_upper_lower_sets(g, s, q(1));
  EXPECT_TRUE(r.upper.empty());
  EXPECT_TRUE(r.pass());
}
