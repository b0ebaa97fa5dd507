#include "entcon/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <random>
#include <set>

#include "entcon/error.hpp"
#include "entcon/io.hpp"
#include "entcon/limit.hpp"
#include "entcon/verifier.hpp"

namespace entcon::cli {

namespace fs = std::filesystem;

namespace {

/// Maps exceptions to the exit-code contract, printing a diagnostic.
template <class F>
int guarded(const char* command, F&& body, int domain_code = kConstructionError) {
  try {
    return body();
  } catch (const ConstructionError& e) {
    std::cerr << command << ": construction error: " << e.what() << "\n";
    return kConstructionError;
  } catch (const NotHandledError& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return kConstructionError;
  } catch (const DomainError& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return domain_code;
  } catch (const Error& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << command << ": malformed document: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return kInputError;
  }
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  return Rational(num(rng), den(rng));
}

fs::path sibling(const fs::path& p, const std::string& suffix) {
  std::string stem = p.filename().string();
  for (const char* ext : {".records.json", ".json"}) {
    if (stem.size() > std::string(ext).size() && stem.ends_with(ext)) {
      stem.resize(stem.size() - std::string(ext).size());
      break;
    }
  }
  return p.parent_path() / (stem + suffix);
}

}  // namespace

fs::path resolve_output(const fs::path& path) {
  const char* dir = std::getenv(kOutDirEnv);
  if (dir == nullptr || *dir == '\0') return path;
  return fs::path(dir) / path.filename();
}

int cmd_construct(const fs::path& config, const fs::path& out, const Overrides& overrides) {
  return guarded("construct", [&] {
    ConstructionConfig cfg = io::config_from_json(io::load_json(config));
    if (overrides.stages) cfg.stages = *overrides.stages;
    if (overrides.radius) cfg.radius = *overrides.radius;
    cfg.validate();
    const fs::path target = resolve_output(out.empty() ? sibling(config, ".records.json") : out);
    const Construction c = construct(cfg);
    io::write_file(target, io::canonical(io::to_json(c, io::make_manifest(cfg, {target.filename().string()}))));
    std::cout << "constructed " << c.stages.size() << " stages -> " << target.string() << "\n";
    return int(kOk);
  });
}

int cmd_verify(const fs::path& records, const fs::path& report) {
  return guarded("verify", [&] {
    const Construction c = io::construction_from_json(io::load_json(records));
    const VerificationReport r = verify(c);
    const fs::path target = resolve_output(report.empty() ? sibling(records, ".report.json") : report);
    io::write_file(target, io::canonical(io::to_json(r)));
    for (const auto& f : r.failures())
      std::cerr << "FAIL stage " << f.stage << " invariant " << f.invariant << ": " << f.witness << "\n";
    for (const auto& t : r.theorem)
      if (!t.pass) std::cerr << "FAIL theorem " << t.item << " index " << t.index << ": " << t.witness << "\n";
    for (const auto& k : r.cauchy)
      if (!k.pass) std::cerr << "FAIL cauchy stage " << k.stage << " point " << k.point << ": " << k.witness << "\n";
    std::cout << (r.pass() ? "PASS" : "FAIL") << " -> " << target.string() << "\n";
    return int(r.pass() ? kOk : kVerifyFailed);
  });
}

int cmd_eval(const fs::path& records, const std::string& z, const std::string& eps, unsigned digits) {
  return guarded("eval", [&] {
    const Construction c = io::construction_from_json(io::load_json(records));
    GaussianRational point;
    if (auto comma = z.find(','); comma == std::string::npos) {
      point = {Rational::parse(z), Rational(0)};
    } else {
      point = {Rational::parse(z.substr(0, comma)), Rational::parse(z.substr(comma + 1))};
    }
    const CertifiedBox box = eval_limit(c, point, Rational::parse(eps));
    std::cout << io::canonical(io::to_json(box, digits));
    return int(kOk);
  });
}

int cmd_invert(const fs::path& records, const std::string& w) {
  return guarded("invert", [&] {
    const Construction c = io::construction_from_json(io::load_json(records));
    std::cout << inverse_lookup(c, Rational::parse(w)).str() << "\n";
    return int(kOk);
  });
}

int cmd_sparse(const fs::path& config, const fs::path& out_dir, unsigned workers) {
  return guarded("sparse", [&] {
    const SystemConfig cfg = io::system_config_from_json(io::load_json(config));
    const SparseSample sample = build_finite_system(cfg, workers);
    const fs::path dir = resolve_output(out_dir.empty() ? fs::path(".") / "" : out_dir / "");
    for (std::size_t a = 0; a < sample.constructions.size(); ++a) {
      const std::string name = "construction_" + std::to_string(a) + ".records.json";
      const auto& c = sample.constructions[a];
      io::write_file(dir / name, io::canonical(io::to_json(c, io::make_manifest(c.config, {name}))));
    }
    const SparsenessReport sparse = check_sparseness(sample);
    io::write_file(dir / "sparseness.csv", io::sparseness_csv(sample, sparse));
    io::write_file(dir / "sparseness.json", io::canonical(io::to_json(sparse)));
    const auto universe = default_universe(sample);
    const EquivGraph graph = build_equiv_graph(sample, universe);
    std::vector<UpperLowerReport> checks;
    bool ok = sparse.pass();
    for (const auto& z : graph.universe()) {
      checks.push_back(check_upper_lower_sets(graph, sample, z));
      ok = ok && checks.back().pass();
    }
    io::write_file(dir / "components.json", io::canonical(io::components_to_json(graph, checks)));
    std::cout << (ok ? "PASS" : "FAIL") << ": " << sample.constructions.size() << " constructions, "
              << graph.universe().size() << " universe points, " << graph.components().size() << " components -> "
              << dir.string() << "\n";
    return int(ok ? kOk : kVerifyFailed);
  });
}

int cmd_report(const std::vector<fs::path>& inputs, const fs::path& csv) {
  return guarded("report", [&] {
    std::string out = "stage,invariant,status,witness\n";
    for (const auto& in : inputs) {
      const auto doc = io::load_json(in);
      const std::string rows =
          doc.contains("stageChecks") ? io::report_csv(doc) : io::report_csv(verify(io::construction_from_json(doc)));
      out += rows.substr(rows.find('\n') + 1);
    }
    const fs::path target = resolve_output(csv);
    io::write_file(target, out);
    std::cout << "wrote " << target.string() << "\n";
    return int(kOk);
  });
}

ConstructionConfig random_config(std::uint64_t seed, unsigned size) {
  std::mt19937_64 rng(seed);
  ConstructionConfig c;
  c.x_p = random_rational(rng);
  c.y_p = random_rational(rng);
  std::set<Rational> seen;
  while (c.w.size() < size) {
    Rational w = random_rational(rng);
    if (seen.insert(w).second) c.w.push_back(w);
  }
  c.stages = 2 * size;
  return c;
}

SystemConfig random_system(std::uint64_t seed, unsigned functions, unsigned reals) {
  std::mt19937_64 rng(seed);
  SystemConfig c;
  for (unsigned a = 0; a < functions; ++a) {
    Rational x = random_rational(rng);
    c.points.emplace_back(x, random_rational(rng));
  }
  std::set<Rational> seen;
  while (c.reals.size() < reals) {
    Rational w = random_rational(rng);
    if (seen.insert(w).second) c.reals.push_back(w);
  }
  return c;
}

int cmd_gen_config(std::uint64_t seed, unsigned size, const fs::path& out) {
  return guarded("gen-config", [&] {
    const fs::path target = resolve_output(out);
    io::write_file(target, io::canonical(io::config_to_json(random_config(seed, size))));
    std::cout << "wrote " << target.string() << "\n";
    return int(kOk);
  });
}

}  // namespace entcon::cli
