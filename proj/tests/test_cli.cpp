#include "cli.hpp"

#include "qwb/engine.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qwb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto o = run(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return json::parse(o.out);
}

}  // namespace

TEST(Cli, DimsTable) {
  json j = run_json({"dims", "--r", "2", "--s", "1", "--field", "generic"});
  EXPECT_EQ(j["schema_version"], qwb::cli::kSchemaVersion);
  const auto& res = j["runs"][0]["result"];
  EXPECT_EQ(res["dim"], 6);
  std::vector<int> squares;
  for (const auto& l : res["labels"]) squares.push_back(l["dim_squared"]);
  std::sort(squares.begin(), squares.end());
  EXPECT_EQ(squares, (std::vector<int>{1, 1, 4}));
}

TEST(Cli, SemisimpleExamples) {
  json a = run_json({"semisimple", "--r", "2", "--s", "1", "--field", "q-power:1"});
  EXPECT_FALSE(a["runs"][0]["result"]["semisimple"]);
  EXPECT_EQ(a["runs"][0]["result"]["reason"], "rho-power coincidence");
  EXPECT_EQ(a["runs"][0]["result"]["coincidence_a"], 1);
  json b = run_json({"semisimple", "--r", "3", "--s", "1", "--field", "delta-zero", "--gram"});
  EXPECT_TRUE(b["runs"][0]["result"]["semisimple"]);
  EXPECT_TRUE(b["runs"][0]["result"]["gram_computed"]);
}

TEST(Cli, Rho2SpecGivesBothBranches) {
  json j = run_json({"simples", "--r", "1", "--s", "1", "--field", "rho2:0", "--check-gram"});
  ASSERT_EQ(j["runs"].size(), 2u);
  EXPECT_EQ(j["runs"][0]["field"], "q-power:0");
  EXPECT_EQ(j["runs"][1]["field"], "q-power:0:neg");
  EXPECT_EQ(j["runs"][0]["result"]["count"], 1);
  EXPECT_TRUE(j["pass"]);
}

TEST(Cli, EverySubcommandSucceeds) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"relations", "--r", "2", "--s", "2"}, {"cellular", "--r", "2", "--s", "1"},
        {"gram", "1", "[[1],[]]", "--r", "2", "--s", "1"}, {"central", "--r", "2", "--s", "2"},
        {"simples", "--r", "2", "--s", "1", "--field", "gfp:7,3,2", "--check-gram"},
        {"branch", "1", "[[1],[1]]", "--r", "2", "--s", "2"}, {"sweep", "--r", "2", "--s", "1", "--gram"}})
    for (const char* fmt : {"text", "csv", "json"}) {
      auto full = args;
      full.push_back("--format");
      full.push_back(fmt);
      auto o = run(full);
      EXPECT_EQ(o.code, 0) << args[0] << " " << fmt << ": " << o.err;
      EXPECT_FALSE(o.out.empty());
    }
}

TEST(Cli, GramReportsDeterminant) {
  json j = run_json({"gram", "1", "[[1],[]]", "--r", "2", "--s", "1", "--field", "q-power:1"});
  EXPECT_EQ(j["runs"][0]["result"]["det"], "0");
  EXPECT_EQ(j["runs"][0]["result"]["size"], 2);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"central", "--r", "2", "--s", "2", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, qwb::cli::kUsage);
  EXPECT_EQ(run({"dims", "--r", "0"}).code, qwb::cli::kUsage);
  EXPECT_EQ(run({"dims", "--format", "xml"}).code, qwb::cli::kUsage);
  EXPECT_EQ(run({"gram", "1", "[[2],[]]", "--r", "2", "--s", "1"}).code, qwb::cli::kUsage);
  EXPECT_EQ(run({"gram", "0", "[[2],[x]]", "--r", "2", "--s", "1"}).code, qwb::cli::kUsage);
  EXPECT_EQ(run({"dims", "--field", "nonsense"}).code, qwb::cli::kUsage);
  EXPECT_EQ(run({"branch", "1", "[[],[]]", "--r", "1", "--s", "1"}).code, qwb::cli::kUsage);
  auto big = run({"dims", "--r", "4", "--s", "2"});
  EXPECT_EQ(big.code, qwb::cli::kUsage);
  EXPECT_NE(big.err.find("exceeds"), std::string::npos);
  EXPECT_EQ(run({"relations", "--field", "gfp:5,1,2"}).code, qwb::cli::kUsage);
}

TEST(Cli, CacheRoundTrip) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qwb-cli-cache-test";
  fs::remove_all(dir);
  std::vector<std::string> args{"cellular", "--r", "2", "--s", "2", "--field", "gfp:101,7,5", "--format", "json",
                                "--cache-dir", dir.string()};
  auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  std::vector<fs::path> files(fs::directory_iterator(dir), fs::directory_iterator{});
  ASSERT_EQ(files.size(), 1u);
  auto second = run(args);
  EXPECT_EQ(first.out, second.out);
  std::ifstream in(files.front());
  auto cached = qwb::AlgebraEngine::from_json(json::parse(in));
  auto built = qwb::AlgebraEngine::build(2, 2, qwb::Field::parse("gfp:101,7,5"));
  for (int gen = 0; gen < built->generators().count(); ++gen) EXPECT_EQ(cached->right_matrix(gen), built->right_matrix(gen));
  fs::remove_all(dir);
}
