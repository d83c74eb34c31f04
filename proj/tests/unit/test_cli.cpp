#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ltower/corpus.hpp"
#include "ltower/tower_spec.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ltower::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("ltower_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string example(const std::string& id) {
    return write(id + ".json", ltower::serialize_tower_spec(ltower::corpus_example(id).spec));
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, ValidateExitCodes) {
  const Outcome ok = run({"validate", example("b3-ell5")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("valid"), std::string::npos);

  // A single vertex with one loop has chi = 0.
  const Outcome chi0 = run({"validate", write("chi0.json",
      R"({"ell": 3, "precision": 2, "vertices": ["a"], "edges": [{"tail": "a", "head": "a", "voltage": "1"}]})")});
  EXPECT_EQ(chi0.code, 1);
  EXPECT_NE(chi0.out.find("invalid"), std::string::npos);

  const Outcome unit_free = run({"validate", write("stuck.json",
      R"({"ell": 3, "precision": 2, "vertices": ["a"], "edges": [{"tail": "a", "head": "a", "voltage": "3"},
          {"tail": "a", "head": "a", "voltage": "6"}]})")});
  EXPECT_EQ(unit_free.code, 1);

  EXPECT_EQ(run({"validate", write("bad.json", "{\"ell\": 3")}).code, 2);
  EXPECT_EQ(run({"validate", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, CountPrintsKappas) {
  const Outcome o = run({"count", example("theta-ell5"), "--levels", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("kappa_1 = 240"), std::string::npos);
  EXPECT_NE(o.out.find("2^24 * 3 * 5^2"), std::string::npos);
  const Outcome j = run({"count", example("theta-ell5"), "--levels", "1", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"kappa\": \"240\""), std::string::npos);
  EXPECT_EQ(run({"count", example("theta-ell5"), "--levels", "9"}).code, 1);
}

TEST_F(CliTest, AnalyzeReportsLaw) {
  const Outcome o = run({"analyze", example("b4-1122-ell3"), "--p", "2", "--p", "17", "--levels", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("ord_2(kappa_n) = 3^n + 1 for n >= 1"), std::string::npos);
  EXPECT_NE(o.out.find("ord_17(kappa_n) = 2 for n >= 2"), std::string::npos);
  EXPECT_EQ(run({"analyze", example("b4-1122-ell3")}).code, 2);
  EXPECT_EQ(run({"analyze", example("b4-1122-ell3"), "--p", "9"}).code, 1);
}

TEST_F(CliTest, ClassifyVerdicts) {
  const Outcome u = run({"classify", example("b4-1122-ell3"), "--levels", "2"});
  EXPECT_EQ(u.code, 0);
  EXPECT_NE(u.out.find("unbounded"), std::string::npos);
  const Outcome b = run({"classify", example("theta-ell5"), "--levels", "1", "--json"});
  EXPECT_NE(b.out.find("\"verdict\": \"bounded\""), std::string::npos);
  const Outcome i = run({"classify", example("sqrt17-ell2"), "--levels", "1"});
  EXPECT_EQ(i.code, 0);
  EXPECT_NE(i.out.find("inapplicable"), std::string::npos);
}

TEST_F(CliTest, ReportAndSelftest) {
  const Outcome r = run({"report", example("b3-ell5"), "--levels", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ord_3(kappa_n) = 5^n - 1"), std::string::npos);
  const Outcome s = run({"selftest", "--budget-ms", "0"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, SquareRoot) {
  const Outcome o = run({"sqrt", "17", "--ell", "2", "--precision", "8", "--branch", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("233 mod 256"), std::string::npos);
  EXPECT_EQ(run({"sqrt", "17", "--ell", "2", "--precision", "8"}).code, 1);
  EXPECT_EQ(run({"sqrt", "2", "--ell", "3", "--precision", "4", "--branch", "1"}).code, 1);
  EXPECT_EQ(run({"sqrt", "2", "--ell", "3"}).code, 2);
}
