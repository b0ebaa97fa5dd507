#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entcon/partition.hpp"
#include "entcon/stage.hpp"
#include "entcon/verifier.hpp"

namespace entcon {

/// A finite family of constructions f_alpha through P_alpha = (a_alpha, b_alpha),
/// where f_alpha handles the prefix W_alpha = (w_0, ..., w_{alpha-1}).
struct SystemConfig {
  std::vector<std::pair<Rational, Rational>> points;
  std::vector<Rational> reals;
  std::shared_ptr<const DensePartition> partition = std::make_shared<DyadicValuationPartition>();
  GrowthFn growth;
  Rational radius{2};
  /// Stages run for f_alpha; empty means the full 2 * |W_alpha|.
  std::vector<unsigned> stages_per_function;

  /// Throws ConfigError on duplicate reals or a malformed schedule.
  void validate() const;
  std::size_t prefix_length(std::size_t alpha) const;
  unsigned stages_for(std::size_t alpha) const;
  ConstructionConfig construction_config(std::size_t alpha) const;
};

struct SparseSample {
  SystemConfig config;
  std::vector<Construction> constructions;
  std::vector<VerificationReport> reports;

  const Poly& f(std::size_t alpha) const;
  /// True when f_alpha handled w_xi both ways (2 xi + 2 <= N_alpha).
  bool handled(std::size_t alpha, std::size_t xi) const;
  /// Registered f_alpha^{-1}(w_xi), if handled.
  std::optional<Rational> preimage(std::size_t alpha, std::size_t xi) const;
};

/// Runs and verifies every construction; `workers` = 0 uses the hardware concurrency.
SparseSample build_finite_system(const SystemConfig& config, unsigned workers = 0);

struct SparsenessCell {
  std::size_t alpha = 0;
  std::size_t xi = 0;
  bool exceptional = false;
  /// Color of f_alpha(w_xi) and of f_alpha^{-1}(w_xi) (when asserted).
  std::optional<unsigned long> forward_color;
  std::optional<unsigned long> backward_color;
  bool pass = true;
  std::string witness;
};

struct SparsenessReport {
  std::vector<SparsenessCell> cells;
  /// Exceptional indices per xi, each bounded by xi + 1.
  std::vector<std::size_t> exceptional_counts;
  bool constructions_verified = true;
  bool pass() const;
};

SparsenessReport check_sparseness(const SparseSample& sample);

/// Edge (u, v) of the generator set X, witnessed by construction alpha:
/// u != a_alpha, v != b_alpha and f_alpha(u) = v.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t alpha = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class EquivGraph {
 public:
  EquivGraph(std::vector<Rational> universe, std::vector<Edge> edges);

  std::span<const Rational> universe() const noexcept { return universe_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<std::size_t> index_of(const Rational& x) const;
  bool same_component(std::size_t a, std::size_t b) const;
  bool has_edge(std::size_t from, std::size_t to) const;
  /// Components as sorted index lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;

 private:
  std::size_t find(std::size_t x) const;
  std::vector<Rational> universe_;
  std::vector<Edge> edges_;
  mutable std::vector<std::size_t> parent_;
};

/// W values, the points a_alpha, b_alpha, recorded targets and registered preimages.
std::vector<Rational> default_universe(const SparseSample& sample);

EquivGraph build_equiv_graph(const SparseSample& sample, std::span<const Rational> universe);

struct UpperLowerReport {
  Rational z;
  std::vector<Rational> upper;  // z^up = {v : (z, v) in X}
  std::vector<Rational> lower;  // z_down = {u : (u, z) in X}
  bool upper_contained = true;
  bool lower_contained = true;
  bool edges_present = true;
  /// Images f_alpha(z) that fall outside the universe (edge presence not assertable there).
  std::size_t images_outside = 0;
  /// Preimages certified outside the universe: no universe point in the enclosure maps to z.
  std::size_t preimages_outside = 0;
  std::string witness;
  bool pass() const { return upper_contained && lower_contained && edges_present; }
};

UpperLowerReport check_upper_lower_sets(const EquivGraph& graph, const SparseSample& sample, const Rational& z);

}  // namespace entcon
