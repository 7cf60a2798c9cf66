#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "tropos/cli.hpp"
#include "tropos/json_io.hpp"

namespace tropos::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tropos_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int call(Command c, const std::string& input, Json& doc, RunConfig cfg = {}) {
    cfg.command = c;
    if (!input.empty()) cfg.inputs = {input};
    std::ostringstream out;
    const int status = run(cfg, out);
    doc = parse_json_exact(out.str());
    return status;
  }

  fs::path dir_;
};

constexpr const char* kTp2x2 = R"({"rows":2,"cols":2,"entries":[[2,1],[1,2]]})";
constexpr const char* kGap = R"({"rows":2,"cols":4,"entries":[[0,-1,-2,-3],[0,0,0,0]]})";

TEST_F(CliTest, ClassifyReportsMemberships) {
  Json doc;
  EXPECT_EQ(call(Command::Classify, write("a.json", kTp2x2), doc), kOk);
  EXPECT_EQ(doc["tp_trop"], Json(true));
  EXPECT_EQ(doc["tn_trop"], Json(true));
  const std::string path = write("b.json", R"({"rows":2,"cols":2,"entries":[[1,1],[0,0]]})");
  EXPECT_EQ(call(Command::Classify, path, doc), kOk);
  RunConfig strict;
  strict.strict = true;
  EXPECT_EQ(call(Command::Classify, path, doc, strict), kNegative);
}

TEST_F(CliTest, PluckerAndStiefelInvert) {
  Json doc;
  EXPECT_EQ(call(Command::Plucker, write("d.json", kGap), doc), kOk);
  std::vector<Json> values;
  for (const auto& c : doc["coords"]) values.push_back(c["value"]);
  EXPECT_EQ(Json(values).dump(), "[0,0,0,-1,-1,-2]");
  Json inv;
  EXPECT_EQ(call(Command::StiefelInvert, write("v.json", doc.dump()), inv), kNegative);
  EXPECT_EQ(inv["mismatch"]["subset"].dump(), "[3,4]");
}

TEST_F(CliTest, FactorProductAndNetworkAgree) {
  Json factors, product, net, weights;
  ASSERT_EQ(call(Command::Factor, write("a.json", kTp2x2), factors), kOk);
  const std::string fpath = write("f.json", factors.dump());
  ASSERT_EQ(call(Command::Product, fpath, product), kOk);
  EXPECT_EQ(product, parse_json_exact(kTp2x2));
  ASSERT_EQ(call(Command::FactorToNetwork, fpath, net), kOk);
  ASSERT_EQ(call(Command::NetworkWeight, write("n.json", net.dump()), weights), kOk);
  EXPECT_EQ(weights, parse_json_exact(kTp2x2));
}

TEST_F(CliTest, SpectrumWithLiftIsDeterministic) {
  RunConfig cfg;
  cfg.lift = LiftKind::Random;
  cfg.seed = 42;
  Json a, b;
  const std::string path = write("a.json", kTp2x2);
  EXPECT_EQ(call(Command::Spectrum, path, a, cfg), kOk);
  EXPECT_EQ(call(Command::Spectrum, path, b, cfg), kOk);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["coeffs"].dump(), "[0,2,4]");
  EXPECT_EQ(a["lift_check"]["pass"], Json(true));
}

TEST_F(CliTest, ExitStatusesForErrors) {
  Json doc;
  EXPECT_EQ(call(Command::Classify, write("bad.json", "{\"rows\": 2"), doc), kUsage);
  EXPECT_EQ(doc["error"]["type"], Json("ParseError"));
  EXPECT_EQ(call(Command::Classify, (dir_ / "absent.json").string(), doc), kUsage);
  EXPECT_EQ(call(Command::Factor, write("nt.json", R"({"rows":2,"cols":2,"entries":[[0,3],[3,0]]})"), doc),
            kNegative);
  EXPECT_EQ(doc["error"]["type"], Json("NotTN"));
  EXPECT_EQ(call(Command::Staircase, write("nm.json", R"({"rows":2,"cols":2,"entries":[[0,3],[3,0]]})"), doc),
            kNegative);
  RunConfig zero_cap;
  zero_cap.cap = 0;
  EXPECT_EQ(call(Command::Classify, write("a.json", kTp2x2), doc, zero_cap), kUsage);
}

TEST_F(CliTest, VerifyPassesEveryExample) {
  Json doc;
  EXPECT_EQ(call(Command::Verify, "", doc), kOk);
  EXPECT_EQ(doc["passed"], doc["total"]);
  EXPECT_GT(doc["total"].get<int>(), 20);
}

TEST_F(CliTest, OutPathAndArgumentParsing) {
  const std::string in = write("a.json", kTp2x2);
  const std::string out = (dir_ / "report.json").string();
  std::vector<std::string> args{"tropos", "spectrum", in, "--lift", "hadamard", "--out", out};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream sout, serr;
  EXPECT_EQ(main_entry(static_cast<int>(argv.size()), argv.data(), sout, serr), kOk);
  EXPECT_TRUE(sout.str().empty());
  EXPECT_EQ(read_json_file(out)["lift_check"]["lift"], Json("hadamard"));

  std::vector<std::string> bad{"tropos", "spectrum", in, "--lift", "sideways"};
  argv.clear();
  for (auto& a : bad) argv.push_back(a.data());
  EXPECT_EQ(main_entry(static_cast<int>(argv.size()), argv.data(), sout, serr), kUsage);
}

}  // namespace
}  // namespace tropos::cli
