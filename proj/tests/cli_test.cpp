#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  Result r;
  FILE* pipe = ::popen((std::string(GREENSEQ_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("greenseq_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

const char* kMarkov =
    "quiver 3 0\n"
    "label 1 1\n"
    "label 2 2\n"
    "label 3 3\n"
    "arrow 1 2 2\n"
    "arrow 2 3 2\n"
    "arrow 3 1 2\n";

}  // namespace

TEST_F(Cli, GenMarkov) {
  const auto r = run("gen qabc 2 2 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kMarkov);
}

TEST_F(Cli, VerifyExitCodes) {
  const auto q3 = file("q3.quiver", run("gen hyperbolic 3").out);
  EXPECT_EQ(run("verify " + q3 + " 'diamond,1,2,diamond,star,3,2,1,star,diamond'").code, 0);
  EXPECT_EQ(run("verify " + q3 + " 'diamond 1'").code, 1);
  EXPECT_EQ(run("verify " + q3 + " 'diamond 1' --kind green").code, 0);
  EXPECT_EQ(run("verify " + q3 + " moon").code, 2);
  EXPECT_EQ(run("verify " + q3 + " 1 --kind purple").code, 2);
  EXPECT_EQ(run("verify " + dir_.string() + "/missing 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, StructuredVerify) {
  const auto a2 = file("a2.quiver", "quiver 2 0\narrow 1 2 1\n");
  const auto r = run("--format structured verify " + a2 + " '1 2' --indices");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["result"]["verdict"], "maximal-green");
  EXPECT_EQ(j["result"]["permutation"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(j["witnesses"].size(), 1u);
  EXPECT_EQ(j["input_digest"].get<std::string>().size(), 16u);
  const auto again = nlohmann::json::parse(run("--format structured verify " + a2 + " '1 2' --indices").out);
  EXPECT_EQ(again["input_digest"], j["input_digest"]);
}

TEST_F(Cli, MutateAndOverflow) {
  const auto m = file("markov.quiver", kMarkov);
  const auto r = run("mutate " + m + " 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("arrow 1 3 2"), std::string::npos);
  EXPECT_EQ(run("mutate " + m + " '1 1'").out, kMarkov);
  const auto big = file("big.quiver",
                        "quiver 3 0\narrow 1 2 4294967296\narrow 2 3 4294967296\narrow 3 1 4294967296\n");
  EXPECT_EQ(run("mutate " + big + " 1").code, 4);
}

TEST_F(Cli, SearchAndExplore) {
  const auto m = file("markov.quiver", kMarkov);
  EXPECT_EQ(run("search-mgs " + m + " --max-len 6").code, 1);
  const auto sq = file("sq.quiver", run("gen squid 2 2 3").out);
  const auto r = run("--format structured explore " + sq);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["class_size"], 40);
  const auto store = (dir_ / "store").string();
  EXPECT_EQ(run("explore " + sq + " --order breadth --store " + store).code, 0);
  EXPECT_EQ(std::distance(fs::directory_iterator(store), fs::directory_iterator{}), 40);
  EXPECT_EQ(run("explore " + sq + " --order sideways").code, 2);
}

TEST_F(Cli, ClassifyPathObstruct) {
  const auto r = nlohmann::json::parse(run("--format structured classify 2 3 7").out);
  EXPECT_EQ(r["result"]["genus"], "3/2");
  EXPECT_EQ(r["result"]["type"], "wild");
  const auto can = file("can.quiver", run("gen canonical 2 2 2").out);
  const auto sq = file("sq.quiver", run("gen squid 2 2 2").out);
  EXPECT_EQ(run("path " + can + " " + sq).code, 0);
  EXPECT_EQ(run("obstruct " + can).code, 1);
  const auto wild = file("wild.quiver", run("gen canonical 2 2 2 3").out);
  EXPECT_EQ(run("obstruct " + wild).code, 0);
  EXPECT_EQ(run("verify " + wild + " 'O(c) O' --kind obstruction --expect 2,2,3").code, 0);
  EXPECT_EQ(run("verify " + wild + " 'O(c) O' --kind obstruction --expect 2,3,5").code, 1);
}

TEST_F(Cli, Reproduce) {
  const auto r = run("reproduce q3-mgs");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CONFIRMED"), std::string::npos);
  EXPECT_EQ(run("reproduce nothing").code, 2);
}
