#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entcon/limit.hpp"
#include "entcon/sparse.hpp"
#include "entcon/stage.hpp"
#include "entcon/verifier.hpp"

namespace entcon::io {

using nlohmann::json;

const char* tool_version();

json to_json(const Rational& q);
json to_json(const Poly& p);

/// Strict parse; non-canonical text is accepted and canonicalized.
/// Throws ParseError for malformed text, ConfigError for a non-string value.
Rational rational_from_json(const json& j, const std::string& where);

/// Lenient parse for records: non-canonical encodings are appended to `issues`.
Rational rational_from_json(const json& j, const std::string& where, std::vector<std::string>& issues);
Poly poly_from_json(const json& j, const std::string& where, std::vector<std::string>& issues);

json config_to_json(const ConstructionConfig& c);
/// `stages` defaults to 2|w| and `radius` to 2 when absent.
ConstructionConfig config_from_json(const json& j);

/// Pretty-printed with sorted keys and a trailing newline.
std::string canonical(const json& j);

/// SHA-256 (hex) of the compact canonical config encoding.
std::string config_digest(const ConstructionConfig& c);

struct RunManifest {
  std::string config_digest;
  std::string tool_version;
  std::string partition;
  GrowthFn growth;
  unsigned stages = 0;
  Rational radius;
  std::vector<std::string> outputs;
};

RunManifest make_manifest(const ConstructionConfig& c, std::vector<std::string> outputs);
json to_json(const RunManifest& m);

json to_json(const AlphaCertificate& a);
json to_json(const StageRecord& s);
StageRecord stage_from_json(const json& j);

/// Records document: manifest, config, f0 and the stage array.
json to_json(const Construction& c, const RunManifest& m);
Construction construction_from_json(const json& j);

json to_json(const VerificationReport& r);
/// Columns stage, invariant, status, witness; one row per stage and invariant.
std::string report_csv(const VerificationReport& r);
/// The same rows, rebuilt from a serialized report.
std::string report_csv(const json& report);

json to_json(const CertifiedBox& b, unsigned digits);

json system_config_to_json(const SystemConfig& c);
SystemConfig system_config_from_json(const json& j);

/// Rows xi, columns alpha; each cell "forward/backward" colors, "-" where not
/// asserted and "x" for exceptional indices.
std::string sparseness_csv(const SparseSample& sample, const SparsenessReport& report);
json to_json(const SparsenessReport& r);
json components_to_json(const EquivGraph& g, const std::vector<UpperLowerReport>& checks);

std::string read_file(const std::filesystem::path& path);
/// Throws ConfigError on I/O or syntax errors.
json load_json(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace entcon::io
