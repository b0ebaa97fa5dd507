#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entcon/error.hpp"
#include "entcon/io.hpp"
#include "entcon/limit.hpp"
#include "entcon/partition.hpp"
#include "entcon/roots.hpp"
#include "entcon/sparse.hpp"
#include "entcon/stage.hpp"
#include "entcon/verifier.hpp"

namespace py = pybind11;
using namespace entcon;

namespace {

Poly poly_of(const std::vector<std::string>& coeffs) {
  std::vector<Rational> cs;
  for (const auto& c : coeffs) cs.push_back(Rational::parse(c));
  return Poly(std::move(cs));
}

Construction load_records(const std::string& records) {
  return io::construction_from_json(io::json::parse(records));
}

}  // namespace

PYBIND11_MODULE(entcon, m) {
  m.doc() = "Exact staged construction of entire functions with prescribed color classes";
  m.attr("__version__") = io::tool_version();

  auto base = py::register_exception<Error>(m, "EntconError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<NotHandledError>(m, "NotHandledError", base.ptr());

  m.def(
      "construct",
      [](const std::string& config, std::optional<unsigned> stages) {
        ConstructionConfig cfg = io::config_from_json(io::json::parse(config));
        if (stages) {
          cfg.stages = *stages;
          cfg.validate();
        }
        Construction c;
        {
          py::gil_scoped_release release;
          c = construct(cfg);
        }
        return io::canonical(io::to_json(c, io::make_manifest(cfg, {})));
      },
      py::arg("config"), py::arg("stages") = py::none(),
      "Run the construction for a JSON config; returns the records document as JSON text.");

  m.def(
      "verify",
      [](const std::string& records) {
        const Construction c = load_records(records);
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify(c);
        }
        return py::make_tuple(r.pass(), io::canonical(io::to_json(r)));
      },
      py::arg("records"), "Verify a records document; returns (passed, report JSON).");

  m.def(
      "eval_limit",
      [](const std::string& records, const std::string& re, const std::string& im, const std::string& eps) {
        const CertifiedBox b = eval_limit(load_records(records), {Rational::parse(re), Rational::parse(im)}, Rational::parse(eps));
        py::dict d;
        d["re"] = b.center.re.str();
        d["im"] = b.center.im.str();
        d["radius2"] = b.radius2.str();
        d["stage"] = b.stage;
        d["exact"] = b.exact;
        d["meets_tolerance"] = b.meets_tolerance;
        d["additional_stages"] = b.additional_stages;
        return d;
      },
      py::arg("records"), py::arg("re"), py::arg("im") = "0", py::arg("eps") = "1/1000000",
      "Certified box (center, radius squared) around the limit value at re + i im.");

  m.def(
      "inverse_lookup",
      [](const std::string& records, const std::string& w) { return inverse_lookup(load_records(records), Rational::parse(w)).str(); },
      py::arg("records"), py::arg("w"), "Exact preimage of a handled w.");

  m.def(
      "color", [](const std::string& q) { return DyadicValuationPartition().color(Rational::parse(q)).value; }, py::arg("q"),
      "Dyadic-valuation class of a rational.");

  m.def(
      "pick",
      [](unsigned long color, const std::string& lo, const std::string& hi) {
        return DyadicValuationPartition().pick(ColorIndex{color}, RatInterval{Rational::parse(lo), Rational::parse(hi)}).str();
      },
      py::arg("color"), py::arg("lo"), py::arg("hi"), "Deterministic member of a class inside the open interval (lo, hi).");

  m.def(
      "isolate_real_roots",
      [](const std::vector<std::string>& coeffs, const std::string& eps) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : isolate_real_roots(poly_of(coeffs), Rational::parse(eps)))
          out.emplace_back(e.interval.lo.str(), e.interval.hi.str());
        return out;
      },
      py::arg("coeffs"), py::arg("eps") = "1/1024", "Disjoint enclosures of the real roots (ascending coefficients).");

  m.def(
      "global_min_lower_bound",
      [](const std::vector<std::string>& coeffs) { return global_min_lower_bound(poly_of(coeffs)).str(); }, py::arg("coeffs"),
      "Certified lower bound of the minimum over the real line.");

  m.def(
      "sparse_system",
      [](const std::string& config, unsigned workers) {
        const SystemConfig cfg = io::system_config_from_json(io::json::parse(config));
        SparseSample sample;
        {
          py::gil_scoped_release release;
          sample = build_finite_system(cfg, workers);
        }
        const SparsenessReport sparse = check_sparseness(sample);
        const EquivGraph graph = build_equiv_graph(sample, default_universe(sample));
        std::vector<UpperLowerReport> checks;
        for (const auto& z : graph.universe()) checks.push_back(check_upper_lower_sets(graph, sample, z));
        py::dict d;
        d["sparseness"] = io::canonical(io::to_json(sparse));
        d["sparseness_csv"] = io::sparseness_csv(sample, sparse);
        d["components"] = io::canonical(io::components_to_json(graph, checks));
        return d;
      },
      py::arg("config"), py::arg("workers") = 0, "Build and check a finite sparse system; returns JSON/CSV artifacts.");
}
