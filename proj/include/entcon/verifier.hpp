#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entcon/rational.hpp"
#include "entcon/stage.hpp"

namespace entcon {

/// Labels of the seven per-stage invariants, "I" through "VII".
inline constexpr const char* kInvariantLabels[7] = {"I", "II", "III", "IV", "V", "VI", "VII"};

struct CheckResult {
  unsigned stage = 0;
  std::string invariant;
  bool pass = true;
  /// Empty on PASS; otherwise the failing quantity and values.
  std::string witness;
};

struct TheoremResult {
  /// W index, or -1 for conclusions about f as a whole.
  long index = -1;
  std::string item;
  bool pass = true;
  std::string witness;
};

struct CauchyResult {
  unsigned stage = 0;
  std::size_t point = 0;
  bool pass = true;
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> stage_checks;
  std::vector<TheoremResult> theorem;
  std::vector<CauchyResult> cauchy;

  bool pass() const;
  std::vector<CheckResult> failures() const;
  /// Check for (stage, invariant), a failing one first; nullptr if absent.
  const CheckResult* find(unsigned stage, const std::string& invariant) const;
};

struct VerifyOptions {
  /// Random sample points per replayed inequality.
  unsigned samples = 200;
  std::uint64_t seed = 0x5eed;
  /// Number of grid points on the certified disk.
  std::size_t grid_points = 25;
};

/// Re-checks (I)..(VII) at stage n from the recorded polynomials and
/// certificates only. Always returns seven results, in label order.
std::vector<CheckResult> check_stage(const Construction& c, unsigned n, const VerifyOptions& opts = {});

/// Eventual constancy, color memberships of f(w_i) and f^{-1}(w_i), interpolation at P and the
/// limit derivative floor, for every i with 2i + 2 <= N.
std::vector<TheoremResult> check_theorem_conclusions(const Construction& c);

/// |f_n(z) - f_{n-1}(z)|^2 <= (2^-n * e^r upper)^2 at every grid point, every stage.
/// Throws DomainError if a grid point lies outside |z| <= r.
std::vector<CauchyResult> check_cauchy_on_disk(const Construction& c, const Rational& radius,
                                               std::span<const GaussianRational> grid);

/// Square grid of `count` (a perfect square) Gaussian rationals inside |z| <= r.
std::vector<GaussianRational> disk_grid(const Rational& radius, std::size_t count = 25);

/// Full report: every stage 0..N, theorem conclusions, Cauchy certificates.
VerificationReport verify(const Construction& c, const VerifyOptions& opts = {});

}  // namespace entcon
