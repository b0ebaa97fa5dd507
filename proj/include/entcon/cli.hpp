#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "entcon/rational.hpp"
#include "entcon/sparse.hpp"
#include "entcon/stage.hpp"

namespace entcon::cli {

/// Exit codes shared by every command.
enum Exit : int { kOk = 0, kInputError = 1, kConstructionError = 2, kVerifyFailed = 3 };

/// Environment variable that redirects every output file into one directory.
inline constexpr const char* kOutDirEnv = "ENTCON_OUT_DIR";

/// `path` with its directory replaced by $ENTCON_OUT_DIR when that is set.
std::filesystem::path resolve_output(const std::filesystem::path& path);

struct Overrides {
  std::optional<unsigned> stages;
  std::optional<Rational> radius;
};

int cmd_construct(const std::filesystem::path& config, const std::filesystem::path& out, const Overrides& overrides = {});
/// Writes the JSON report to `report`, or next to the records when empty.
int cmd_verify(const std::filesystem::path& records, const std::filesystem::path& report = {});
/// `z` is "re" or "re,im".
int cmd_eval(const std::filesystem::path& records, const std::string& z, const std::string& eps, unsigned digits = 20);
int cmd_invert(const std::filesystem::path& records, const std::string& w);
int cmd_sparse(const std::filesystem::path& config, const std::filesystem::path& out_dir, unsigned workers = 0);
/// Inputs are verify reports or records files (verified on the fly).
int cmd_report(const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& csv);
int cmd_gen_config(std::uint64_t seed, unsigned size, const std::filesystem::path& out);

/// Random config: P and |W| = size distinct rationals with |num|, den <= 50, 2|W| stages.
ConstructionConfig random_config(std::uint64_t seed, unsigned size);

/// Random system with `functions` points and `reals` distinct reals, same ranges.
SystemConfig random_system(std::uint64_t seed, unsigned functions, unsigned reals);

}  // namespace entcon::cli
