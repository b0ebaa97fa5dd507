#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "entcon/cli.hpp"
#include "entcon/io.hpp"

using namespace entcon;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("entcon_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv(cli::kOutDirEnv);
  }
  void TearDown() override {
    ::unsetenv(cli::kOutDirEnv);
    fs::remove_all(dir_);
  }
  fs::path write(const std::string& name, const std::string& text) {
    io::write_file(dir_ / name, text);
    return dir_ / name;
  }
  fs::path e1_records() {
    const auto cfg = write("e1.json", R"({"point": ["0", "0"], "w": ["1", "2"], "stages": 2})");
    EXPECT_EQ(cli::cmd_construct(cfg, dir_ / "e1.records.json"), cli::kOk);
    return dir_ / "e1.records.json";
  }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructIsByteReproducible) {
  const auto records = e1_records();
  const std::string first = io::read_file(records);
  EXPECT_EQ(cli::cmd_construct(dir_ / "e1.json", dir_ / "again.records.json"), cli::kOk);
  json a = json::parse(first), b = json::parse(io::read_file(dir_ / "again.records.json"));
  a["manifest"].erase("outputs");
  b["manifest"].erase("outputs");
  EXPECT_EQ(a, b);
  EXPECT_EQ(cli::cmd_construct(dir_ / "e1.json", records), cli::kOk);
  EXPECT_EQ(io::read_file(records), first);
  EXPECT_EQ(json::parse(first)["stages"].size(), 2u);
}

TEST_F(Cli, ConstructInputErrors) {
  EXPECT_EQ(cli::cmd_construct(write("bad.json", R"({"point": ["1/x", "0"], "w": []})"), dir_ / "o.json"), cli::kInputError);
  EXPECT_EQ(cli::cmd_construct(write("dup.json", R"({"point": ["0", "0"], "w": ["1", "1"]})"), dir_ / "o.json"),
            cli::kInputError);
  EXPECT_EQ(cli::cmd_construct(write("broken.json", R"({"point": ["0", )"), dir_ / "o.json"), cli::kInputError);
  EXPECT_EQ(cli::cmd_construct(dir_ / "missing.json", dir_ / "o.json"), cli::kInputError);
  cli::Overrides too_many;
  too_many.stages = 9;
  EXPECT_EQ(cli::cmd_construct(write("ok.json", R"({"point": ["0", "0"], "w": ["1"]})"), dir_ / "o.json", too_many),
            cli::kInputError);
  EXPECT_FALSE(fs::exists(dir_ / "o.json"));
}

TEST_F(Cli, VerifyExitCodes) {
  const auto records = e1_records();
  EXPECT_EQ(cli::cmd_verify(records, dir_ / "report.json"), cli::kOk);
  EXPECT_EQ(json::parse(io::read_file(dir_ / "report.json"))["status"], "PASS");

  json doc = json::parse(io::read_file(records));
  doc["stages"][1]["M"] = "2/1";
  const auto tampered = write("tampered.json", io::canonical(doc));
  EXPECT_EQ(cli::cmd_verify(tampered, dir_ / "tampered.report.json"), cli::kVerifyFailed);
  const json report = json::parse(io::read_file(dir_ / "tampered.report.json"));
  bool named = false;
  for (const auto& c : report["stageChecks"])
    if (c["stage"] == 2 && c["invariant"] == "IV" && c["status"] == "FAIL") named = true;
  EXPECT_TRUE(named);

  const std::string text = io::read_file(records);
  EXPECT_EQ(cli::cmd_verify(write("truncated.json", text.substr(0, text.size() / 2))), cli::kInputError);
}

TEST_F(Cli, EvalAndInvert) {
  const auto records = e1_records();
  EXPECT_EQ(cli::cmd_eval(records, "0", "1/100"), cli::kOk);
  EXPECT_EQ(cli::cmd_eval(records, "1/2,-1/2", "1/100"), cli::kOk);
  EXPECT_EQ(cli::cmd_eval(records, "3", "1/100"), cli::kConstructionError);
  EXPECT_EQ(cli::cmd_eval(records, "x", "1/100"), cli::kInputError);
  EXPECT_EQ(cli::cmd_invert(records, "1"), cli::kOk);
  EXPECT_EQ(cli::cmd_invert(records, "2"), cli::kConstructionError);
}

TEST_F(Cli, SparseWritesArtifacts) {
  const auto cfg = write("sys.json", R"({"points": [["0", "0"], ["1", "2"], ["-1/2", "3"]], "reals": ["1", "5/2", "-3"]})");
  EXPECT_EQ(cli::cmd_sparse(cfg, dir_ / "out", 1), cli::kOk);
  for (int a = 0; a < 3; ++a) EXPECT_TRUE(fs::exists(dir_ / "out" / ("construction_" + std::to_string(a) + ".records.json")));
  for (const char* f : {"sparseness.csv", "sparseness.json", "components.json"}) EXPECT_TRUE(fs::exists(dir_ / "out" / f));
  EXPECT_EQ(cli::cmd_verify(dir_ / "out" / "construction_2.records.json"), cli::kOk);

  const auto empty = write("empty.json", R"({"points": [], "reals": []})");
  EXPECT_EQ(cli::cmd_sparse(empty, dir_ / "empty"), cli::kOk);
  EXPECT_EQ(json::parse(io::read_file(dir_ / "empty" / "sparseness.json"))["status"], "PASS");
}

TEST_F(Cli, ReportRowCount) {
  const auto records = e1_records();
  ASSERT_EQ(cli::cmd_verify(records, dir_ / "r.json"), cli::kOk);
  EXPECT_EQ(cli::cmd_report({dir_ / "r.json"}, dir_ / "r.csv"), cli::kOk);
  const std::string csv = io::read_file(dir_ / "r.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 3 * 7);
  EXPECT_EQ(cli::cmd_report({records}, dir_ / "r2.csv"), cli::kOk);
  EXPECT_EQ(io::read_file(dir_ / "r2.csv"), csv);
  EXPECT_EQ(cli::cmd_report({dir_ / "nope.json"}, dir_ / "r3.csv"), cli::kInputError);
}

TEST_F(Cli, OutputDirectoryOverride) {
  const auto cfg = write("e1.json", R"({"point": ["0", "0"], "w": ["1"]})");
  fs::create_directories(dir_ / "redirect");
  ::setenv(cli::kOutDirEnv, (dir_ / "redirect").c_str(), 1);
  EXPECT_EQ(cli::cmd_construct(cfg, dir_ / "elsewhere" / "x.records.json"), cli::kOk);
  EXPECT_TRUE(fs::exists(dir_ / "redirect" / "x.records.json"));
  EXPECT_FALSE(fs::exists(dir_ / "elsewhere"));
}

TEST_F(Cli, GenConfigDeterministic) {
  EXPECT_EQ(cli::cmd_gen_config(7, 6, dir_ / "a.json"), cli::kOk);
  EXPECT_EQ(cli::cmd_gen_config(7, 6, dir_ / "b.json"), cli::kOk);
  EXPECT_EQ(io::read_file(dir_ / "a.json"), io::read_file(dir_ / "b.json"));
  const auto cfg = io::config_from_json(io::load_json(dir_ / "a.json"));
  EXPECT_EQ(cfg.w.size(), 6u);
  EXPECT_EQ(cfg.stages, 12u);
  for (const auto& w : cfg.w) {
    EXPECT_LE(abs(w.num()), 50);
    EXPECT_LE(w.den(), 50);
  }
}
