#include "entcon/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <openssl/sha.h>

#include "entcon/error.hpp"

#ifndef ENTCON_VERSION
#define ENTCON_VERSION "0.0.0"
#endif

namespace entcon::io {

namespace {

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a rational string");
  return j.get_ref<const std::string&>();
}

Rational parse_at(const std::string& text, const std::string& where, bool& canonical) {
  try {
    return Rational::parse(text, canonical);
  } catch (const ParseError& e) {
    throw ParseError(where + ": malformed rational \"" + text + "\"", e.position());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(where + ": missing field \"" + key + "\"");
  return *it;
}

unsigned as_unsigned(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ConfigError(where + ": expected a nonnegative integer");
  return j.get<unsigned>();
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

json growth_to_json(const GrowthFn& g) { return {{"kind", g.kind_name()}, {"taylorTerms", g.taylor_terms}}; }

GrowthFn growth_from_json(const json& j) {
  GrowthFn g;
  if (j.is_null()) return g;
  g.kind = GrowthFn::parse_kind(field(j, "kind", "growth").get<std::string>());
  if (j.contains("taylorTerms")) g.taylor_terms = as_unsigned(j["taylorTerms"], "growth.taylorTerms");
  return g;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<unsigned> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<unsigned> out;
  for (const auto& e : j) out.push_back(as_unsigned(e, where));
  return out;
}

}  // namespace

const char* tool_version() { return ENTCON_VERSION; }

json to_json(const Rational& q) { return q.str(); }

json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Rational rational_from_json(const json& j, const std::string& where) {
  bool canonical = true;
  return parse_at(as_string(j, where), where, canonical);
}

Rational rational_from_json(const json& j, const std::string& where, std::vector<std::string>& issues) {
  bool canonical = true;
  const std::string& text = as_string(j, where);
  Rational q = parse_at(text, where, canonical);
  if (!canonical) issues.push_back(where + ": non-canonical encoding \"" + text + "\"");
  return q;
}

Poly poly_from_json(const json& j, const std::string& where, std::vector<std::string>& issues) {
  if (!j.is_array()) throw ConfigError(where + ": expected a coefficient array");
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < j.size(); ++i)
    cs.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]", issues));
  if (!cs.empty() && cs.back().is_zero()) issues.push_back(where + ": trailing zero coefficient");
  return Poly(std::move(cs));
}

json config_to_json(const ConstructionConfig& c) {
  json w = json::array();
  for (const auto& x : c.w) w.push_back(x.str());
  return {{"point", {c.x_p.str(), c.y_p.str()}},
          {"w", w},
          {"partition", c.partition->name()},
          {"growth", growth_to_json(c.growth)},
          {"stages", c.stages},
          {"radius", c.radius.str()}};
}

ConstructionConfig config_from_json(const json& j) {
  ConstructionConfig c;
  const json& point = field(j, "point", "config");
  if (!point.is_array() || point.size() != 2) throw ConfigError("config.point: expected two rational strings");
  c.x_p = rational_from_json(point[0], "config.point[0]");
  c.y_p = rational_from_json(point[1], "config.point[1]");
  const json& w = field(j, "w", "config");
  if (!w.is_array()) throw ConfigError("config.w: expected an array");
  for (std::size_t i = 0; i < w.size(); ++i) c.w.push_back(rational_from_json(w[i], "config.w[" + std::to_string(i) + "]"));
  if (j.contains("partition")) c.partition = make_partition(j["partition"].get<std::string>());
  if (j.contains("growth")) c.growth = growth_from_json(j["growth"]);
  c.stages = j.contains("stages") ? as_unsigned(j["stages"], "config.stages") : static_cast<unsigned>(2 * c.w.size());
  if (j.contains("radius")) c.radius = rational_from_json(j["radius"], "config.radius");
  c.validate();
  return c;
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

std::string config_digest(const ConstructionConfig& c) {
  const std::string bytes = config_to_json(c).dump();
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  std::ostringstream out;
  for (unsigned char b : md) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
  return out.str();
}

RunManifest make_manifest(const ConstructionConfig& c, std::vector<std::string> outputs) {
  return {config_digest(c), tool_version(), c.partition->name(), c.growth, c.stages, c.radius, std::move(outputs)};
}

json to_json(const RunManifest& m) {
  return {{"configDigest", m.config_digest},
          {"toolVersion", m.tool_version},
          {"partition", m.partition},
          {"growth", growth_to_json(m.growth)},
          {"stages", m.stages},
          {"radius", m.radius.str()},
          {"outputs", m.outputs}};
}

json to_json(const AlphaCertificate& a) {
  return {{"stage", a.stage},
          {"envelope", {{"m", a.envelope.m}, {"c", a.envelope.c.str()}}},
          {"taylorTerms", a.taylor_terms},
          {"derivFloor", a.deriv_floor.str()},
          {"alpha", a.alpha.str()},
          {"minRatioLowerBound", a.min_ratio_lower_bound.str()}};
}

json to_json(const StageRecord& s) {
  json delta = json::array();
  for (const auto& [w, x] : s.registry_delta) delta.push_back({w.str(), x.str()});
  json interval = s.target_interval ? json{s.target_interval->lo.str(), s.target_interval->hi.str()} : json(nullptr);
  return {{"n", s.n},
          {"k", s.k},
          {"parity", to_string(s.parity)},
          {"case", to_string(s.case_tag)},
          {"h", opt(s.h)},
          {"beta", s.beta},
          {"alpha", opt(s.alpha)},
          {"M", s.m_n.str()},
          {"target", opt(s.target)},
          {"targetInterval", interval},
          {"witness", s.witness ? json(*s.witness) : json(nullptr)},
          {"f", to_json(s.f)},
          {"A", s.a_set},
          {"B", s.b_set},
          {"registryDelta", delta}};
}

StageRecord stage_from_json(const json& j) {
  StageRecord s;
  s.n = as_unsigned(field(j, "n", "stage"), "stage.n");
  const std::string at = "stage " + std::to_string(s.n);
  auto& issues = s.encoding_issues;
  s.k = as_unsigned(field(j, "k", at), at + ".k");
  const std::string parity = field(j, "parity", at).get<std::string>();
  if (parity != "odd" && parity != "even") throw ConfigError(at + ": unknown parity \"" + parity + "\"");
  s.parity = parity == "odd" ? Parity::Odd : Parity::Even;
  const std::string tag = field(j, "case", at).get<std::string>();
  if (tag != "A" && tag != "B") throw ConfigError(at + ": unknown case \"" + tag + "\"");
  s.case_tag = tag == "A" ? CaseTag::A : CaseTag::B;
  if (const json& h = field(j, "h", at); !h.is_null()) s.h = poly_from_json(h, at + ".h", issues);
  s.beta = as_unsigned(field(j, "beta", at), at + ".beta");
  if (const json& a = field(j, "alpha", at); !a.is_null()) {
    AlphaCertificate cert;
    const std::string w = at + ".alpha";
    cert.stage = as_unsigned(field(a, "stage", w), w + ".stage");
    const json& env = field(a, "envelope", w);
    cert.envelope.m = as_unsigned(field(env, "m", w), w + ".envelope.m");
    cert.envelope.c = rational_from_json(field(env, "c", w), w + ".envelope.c", issues);
    cert.taylor_terms = as_unsigned(field(a, "taylorTerms", w), w + ".taylorTerms");
    cert.deriv_floor = rational_from_json(field(a, "derivFloor", w), w + ".derivFloor", issues);
    cert.alpha = rational_from_json(field(a, "alpha", w), w + ".alpha", issues);
    cert.min_ratio_lower_bound = rational_from_json(field(a, "minRatioLowerBound", w), w + ".minRatioLowerBound", issues);
    s.alpha = cert;
  }
  s.m_n = rational_from_json(field(j, "M", at), at + ".M", issues);
  if (const json& t = field(j, "target", at); !t.is_null()) s.target = rational_from_json(t, at + ".target", issues);
  if (const json& iv = field(j, "targetInterval", at); !iv.is_null()) {
    if (!iv.is_array() || iv.size() != 2) throw ConfigError(at + ".targetInterval: expected two rationals");
    s.target_interval = RatInterval{rational_from_json(iv[0], at + ".targetInterval[0]", issues),
                                    rational_from_json(iv[1], at + ".targetInterval[1]", issues)};
  }
  if (const json& w = field(j, "witness", at); !w.is_null()) s.witness = as_unsigned(w, at + ".witness");
  s.f = poly_from_json(field(j, "f", at), at + ".f", issues);
  s.a_set = index_list(field(j, "A", at), at + ".A");
  s.b_set = index_list(field(j, "B", at), at + ".B");
  const json& delta = field(j, "registryDelta", at);
  if (!delta.is_array()) throw ConfigError(at + ".registryDelta: expected an array");
  for (const auto& pair : delta) {
    if (!pair.is_array() || pair.size() != 2) throw ConfigError(at + ".registryDelta: expected pairs");
    s.registry_delta.emplace_back(rational_from_json(pair[0], at + ".registryDelta", issues),
                                  rational_from_json(pair[1], at + ".registryDelta", issues));
  }
  return s;
}

json to_json(const Construction& c, const RunManifest& m) {
  json stages = json::array();
  for (const auto& s : c.stages) stages.push_back(to_json(s));
  return {{"manifest", to_json(m)}, {"config", config_to_json(c.config)}, {"f0", to_json(c.f0)}, {"stages", stages}};
}

Construction construction_from_json(const json& j) {
  Construction c;
  c.config = config_from_json(field(j, "config", "records"));
  c.f0 = poly_from_json(field(j, "f0", "records"), "f0", c.f0_encoding_issues);
  const json& stages = field(j, "stages", "records");
  if (!stages.is_array()) throw ConfigError("records.stages: expected an array");
  for (const auto& s : stages) c.stages.push_back(stage_from_json(s));
  for (std::size_t i = 0; i < c.stages.size(); ++i)
    if (c.stages[i].n != i + 1) throw ConfigError("records.stages: stage " + std::to_string(i + 1) + " missing or out of order");
  if (c.stages.size() != c.config.stages)
    throw ConfigError("records: config announces " + std::to_string(c.config.stages) + " stages, found " +
                      std::to_string(c.stages.size()));
  return c;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.stage_checks)
    checks.push_back({{"stage", c.stage}, {"invariant", c.invariant}, {"status", c.pass ? "PASS" : "FAIL"}, {"witness", c.witness}});
  json theorem = json::array();
  for (const auto& t : r.theorem)
    theorem.push_back({{"index", t.index}, {"item", t.item}, {"status", t.pass ? "PASS" : "FAIL"}, {"witness", t.witness}});
  json cauchy = json::array();
  for (const auto& c : r.cauchy)
    cauchy.push_back({{"stage", c.stage}, {"point", c.point}, {"status", c.pass ? "PASS" : "FAIL"}, {"witness", c.witness}});
  return {{"status", r.pass() ? "PASS" : "FAIL"}, {"stageChecks", checks}, {"theorem", theorem}, {"cauchy", cauchy}};
}

std::string report_csv(const json& report) {
  std::string out = "stage,invariant,status,witness\n";
  for (const auto& c : field(report, "stageChecks", "report")) {
    out += std::to_string(c.at("stage").get<unsigned>()) + "," + c.at("invariant").get<std::string>() + "," +
           c.at("status").get<std::string>() + "," + csv_field(c.at("witness").get<std::string>()) + "\n";
  }
  return out;
}

std::string report_csv(const VerificationReport& r) { return report_csv(to_json(r)); }

json to_json(const CertifiedBox& b, unsigned digits) {
  const int d = static_cast<int>(digits);
  return {{"center", {{"re", b.center.re.str()}, {"im", b.center.im.str()}}},
          {"radius2", b.radius2.str()},
          {"stage", b.stage},
          {"exact", b.exact},
          {"meetsTolerance", b.meets_tolerance},
          {"additionalStages", b.additional_stages},
          {"approximate (not certified)",
           {{"re", b.center.re.approx(d)}, {"im", b.center.im.approx(d)}, {"radius2", b.radius2.approx(d)}}}};
}

json system_config_to_json(const SystemConfig& c) {
  json points = json::array();
  for (const auto& [a, b] : c.points) points.push_back({a.str(), b.str()});
  json reals = json::array();
  for (const auto& x : c.reals) reals.push_back(x.str());
  json j = {{"points", points},
            {"reals", reals},
            {"partition", c.partition->name()},
            {"growth", growth_to_json(c.growth)},
            {"radius", c.radius.str()}};
  if (!c.stages_per_function.empty()) j["stagesPerFunction"] = c.stages_per_function;
  return j;
}

SystemConfig system_config_from_json(const json& j) {
  SystemConfig c;
  const json& points = field(j, "points", "system");
  if (!points.is_array()) throw ConfigError("system.points: expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string at = "system.points[" + std::to_string(i) + "]";
    if (!points[i].is_array() || points[i].size() != 2) throw ConfigError(at + ": expected two rational strings");
    c.points.emplace_back(rational_from_json(points[i][0], at), rational_from_json(points[i][1], at));
  }
  const json& reals = field(j, "reals", "system");
  if (!reals.is_array()) throw ConfigError("system.reals: expected an array");
  for (std::size_t i = 0; i < reals.size(); ++i)
    c.reals.push_back(rational_from_json(reals[i], "system.reals[" + std::to_string(i) + "]"));
  if (j.contains("partition")) c.partition = make_partition(j["partition"].get<std::string>());
  if (j.contains("growth")) c.growth = growth_from_json(j["growth"]);
  if (j.contains("radius")) c.radius = rational_from_json(j["radius"], "system.radius");
  if (j.contains("stagesPerFunction")) c.stages_per_function = index_list(j["stagesPerFunction"], "system.stagesPerFunction");
  c.validate();
  return c;
}

std::string sparseness_csv(const SparseSample& sample, const SparsenessReport& report) {
  const std::size_t count = sample.constructions.size();
  std::ostringstream out;
  out << "xi,w,color";
  for (std::size_t a = 0; a < count; ++a) out << ",alpha_" << a;
  out << "\n";
  std::map<std::pair<std::size_t, std::size_t>, const SparsenessCell*> cells;
  for (const auto& cell : report.cells) cells[{cell.xi, cell.alpha}] = &cell;
  for (std::size_t xi = 0; xi < sample.config.reals.size(); ++xi) {
    const Rational& w = sample.config.reals[xi];
    out << xi << "," << w.str() << "," << sample.config.partition->color(w).value;
    for (std::size_t a = 0; a < count; ++a) {
      const SparsenessCell& cell = *cells.at({xi, a});
      out << ",";
      if (cell.exceptional) {
        out << "x";
        continue;
      }
      out << (cell.forward_color ? std::to_string(*cell.forward_color) : "-") << "/"
          << (cell.backward_color ? std::to_string(*cell.backward_color) : "-");
      if (!cell.pass) out << "!";
    }
    out << "\n";
  }
  return out.str();
}

json to_json(const SparsenessReport& r) {
  json failures = json::array();
  for (const auto& c : r.cells)
    if (!c.pass) failures.push_back({{"alpha", c.alpha}, {"xi", c.xi}, {"witness", c.witness}});
  return {{"status", r.pass() ? "PASS" : "FAIL"},
          {"constructionsVerified", r.constructions_verified},
          {"exceptionalCounts", r.exceptional_counts},
          {"failures", failures}};
}

json components_to_json(const EquivGraph& g, const std::vector<UpperLowerReport>& checks) {
  json universe = json::array();
  for (const auto& x : g.universe()) universe.push_back(x.str());
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"from", g.universe()[e.from].str()}, {"to", g.universe()[e.to].str()}, {"alpha", e.alpha}});
  json comps = json::array();
  for (const auto& comp : g.components()) {
    json members = json::array();
    for (std::size_t i : comp) members.push_back(g.universe()[i].str());
    comps.push_back(members);
  }
  json points = json::array();
  bool all = true;
  for (const auto& r : checks) {
    all = all && r.pass();
    json up = json::array(), down = json::array();
    for (const auto& v : r.upper) up.push_back(v.str());
    for (const auto& u : r.lower) down.push_back(u.str());
    points.push_back({{"z", r.z.str()},
                      {"upper", up},
                      {"lower", down},
                      {"upperContained", r.upper_contained},
                      {"lowerContained", r.lower_contained},
                      {"edgesPresent", r.edges_present},
                      {"imagesOutside", r.images_outside},
                      {"preimagesOutside", r.preimages_outside},
                      {"witness", r.witness}});
  }
  return {{"status", all ? "PASS" : "FAIL"}, {"universe", universe}, {"edges", edges}, {"components", comps}, {"points", points}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": invalid JSON", e.byte);
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
  if (!out) throw ConfigError("write failed for " + path.string());
}

}  // namespace entcon::io
