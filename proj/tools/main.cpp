#include <CLI11.hpp>

#include <iostream>

#include "entcon/cli.hpp"
#include "entcon/error.hpp"

using namespace entcon;

int main(int argc, char** argv) {
  CLI::App app{"Staged construction of entire functions with prescribed color classes"};
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + cli::kOutDirEnv +
             " redirects every output file into the given directory.\n"
             "Exit codes: 0 ok, 1 input/config error, 2 construction error or unhandled point, 3 verification failed.");

  std::string config, out, records, z = "0", eps = "1/1000000", w;
  std::vector<std::string> inputs;
  std::optional<unsigned> stages;
  std::optional<std::string> radius;
  unsigned workers = 0, digits = 20, size = 6;
  std::uint64_t seed = 1;

  auto* construct = app.add_subcommand("construct", "Run the staged construction and write the records file");
  construct->add_option("--config", config, "Run configuration (JSON)")->required();
  construct->add_option("--out", out, "Records file (default: <config>.records.json)");
  construct->add_option("--stages", stages, "Override the number of stages");
  construct->add_option("--radius", radius, "Override the certified disk radius r (rational)");

  auto* verify = app.add_subcommand("verify", "Re-check every stage invariant from a records file");
  verify->add_option("records", records, "Records file")->required();
  verify->add_option("--out", out, "Report file (default: <records>.report.json)");

  auto* eval = app.add_subcommand("eval", "Certified box around the limit value f(z)");
  eval->add_option("records", records, "Records file")->required();
  eval->add_option("--z", z, "Point as \"re\" or \"re,im\" with rational parts")->capture_default_str();
  eval->add_option("--eps", eps, "Requested radius tolerance")->capture_default_str();
  eval->add_option("--digits", digits, "Digits in the labeled decimal approximation")->capture_default_str();

  auto* invert = app.add_subcommand("invert", "Exact preimage of a handled w");
  invert->add_option("records", records, "Records file")->required();
  invert->add_option("w", w, "Rational value")->required();

  auto* sparse = app.add_subcommand("sparse", "Build and check a finite sparse system");
  sparse->add_option("--config", config, "System configuration (JSON)")->required();
  sparse->add_option("--out", out, "Output directory")->required();
  sparse->add_option("--workers", workers, "Parallel constructions (0 = number of processors)")->capture_default_str();

  auto* report = app.add_subcommand("report", "Flatten verify reports or records into CSV");
  report->add_option("inputs", inputs, "Report or records files")->required();
  report->add_option("--out", out, "CSV file")->required();

  auto* gen = app.add_subcommand("gen-config", "Write a randomized run configuration");
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--size", size, "Number of W entries")->capture_default_str();
  gen->add_option("--out", out, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  if (*construct) {
    cli::Overrides o;
    o.stages = stages;
    if (radius) {
      try {
        o.radius = Rational::parse(*radius);
      } catch (const Error& e) {
        std::cerr << "construct: --radius: " << e.what() << "\n";
        return cli::kInputError;
      }
    }
    return cli::cmd_construct(config, out, o);
  }
  if (*verify) return cli::cmd_verify(records, out);
  if (*eval) return cli::cmd_eval(records, z, eps, digits);
  if (*invert) return cli::cmd_invert(records, w);
  if (*sparse) return cli::cmd_sparse(config, out, workers);
  if (*report) return cli::cmd_report({inputs.begin(), inputs.end()}, out);
  if (*gen) return cli::cmd_gen_config(seed, size, out);
  return cli::kInputError;
}
