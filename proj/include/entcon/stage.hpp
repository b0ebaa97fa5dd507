#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "entcon/growth.hpp"
#include "entcon/partition.hpp"
#include "entcon/poly.hpp"
#include "entcon/rational.hpp"

namespace entcon {

/// Inputs of one staged construction: the point P = (x_P, y_P), the finite
/// injective list W, the dense partition, the growth majorant, and the number
/// of stages to run (at most 2|W|).
struct ConstructionConfig {
  Rational x_p;
  Rational y_p;
  std::vector<Rational> w;
  std::shared_ptr<const DensePartition> partition = std::make_shared<DyadicValuationPartition>();
  GrowthFn growth;
  unsigned stages = 0;
  /// Radius of the disk |z| <= r on which evaluations are certified.
  Rational radius{2};

  /// Throws ConfigError on duplicate W entries or too many stages.
  void validate() const;
};

enum class Parity { Odd, Even };
enum class CaseTag { A, B };

/// Exact preimage bookkeeping: handled w maps to the rational x with f_n(x) = w.
using PreimageRegistry = std::map<Rational, Rational>;

/// Trace of stage n of the construction.
struct StageRecord {
  unsigned n = 0;
  /// Index of the W entry handled at this stage (n = 2k+1 or n = 2k+2).
  unsigned k = 0;
  Parity parity = Parity::Odd;
  CaseTag case_tag = CaseTag::B;

  // Case A data.
  std::optional<Poly> h;
  unsigned beta = 0;
  std::optional<AlphaCertificate> alpha;
  /// Zero in Case B.
  Rational m_n;
  /// Chosen target: f_n(w_k) for odd stages, f_n^{-1}(w_k) for even stages.
  std::optional<Rational> target;
  /// Open interval the target was picked from.
  std::optional<RatInterval> target_interval;

  // Case B data: index j of the W entry that already pins w_k.
  std::optional<unsigned> witness;

  Poly f;
  std::vector<unsigned> a_set;
  std::vector<unsigned> b_set;
  std::vector<std::pair<Rational, Rational>> registry_delta;

  /// Non-canonical encodings seen when the record was loaded from disk.
  std::vector<std::string> encoding_issues;
};

/// Mutable state threaded through the stages.
struct ConstructionState {
  ConstructionConfig config;
  unsigned n = 0;
  Poly f;
  std::vector<unsigned> a_set;
  std::vector<unsigned> b_set;
  PreimageRegistry registry;
};

/// A finished run: the configuration, f_0, and the stage records 1..N.
struct Construction {
  ConstructionConfig config;
  Poly f0;
  std::vector<StageRecord> stages;
  /// Non-canonical encodings of f_0 seen when loaded from disk.
  std::vector<std::string> f0_encoding_issues;

  /// f_n for 0 <= n <= N.
  const Poly& f_at(unsigned n) const;
  /// Registry after stage n, rebuilt from the recorded deltas.
  PreimageRegistry registry_at(unsigned n) const;
  /// True when every W entry was handled both ways, so the limit equals f_N.
  bool complete() const { return stages.size() >= 2 * config.w.size(); }
};

/// f_0(z) = (3/2)(z - x_P) + y_P with empty A, B and registry.
ConstructionState init(const ConstructionConfig& config);

/// Stage n = 2k+1: make f_n(w_k) land in the class of w_k.
StageRecord odd_step(ConstructionState& state, unsigned k);

/// Stage n = 2k+2: make f_n^{-1}(w_k) land in the class of w_k.
StageRecord even_step(ConstructionState& state, unsigned k);

/// Runs config.stages stages.
std::vector<StageRecord> run(const ConstructionConfig& config);

/// run() packaged with f_0 and the config.
Construction construct(const ConstructionConfig& config);

/// The correction polynomial (z - x_P)^beta * prod (z - r) over the distinct
/// pinned points r != x_P; beta in {1, 2} makes the degree odd.
Poly correction_polynomial(const Rational& x_p, const std::vector<Rational>& pinned, unsigned& beta);

/// Interval strictly between before^{-1}(w) and after^{-1}(w) for increasing
/// polynomials with distinct preimages: enclosures start at width 2^-8 and the
/// width is squared each round, 64 rounds at most.
std::optional<RatInterval> separating_gap(const Poly& before, const Poly& after, const Rational& w);

std::string to_string(Parity p);
std::string to_string(CaseTag c);

}  // namespace entcon
