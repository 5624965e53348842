#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "subrosa/patch_io.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(SUBROSA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("subrosa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, Sigma) {
  EXPECT_EQ(run("sigma --n 5").out, "1-3-1|1-3-1\n");
  EXPECT_EQ(run("sigma --n 7 --alpha").out, "1-3-1|1-3-1\n");
  EXPECT_EQ(run("sigma --n 4").out, "0-2-0|0-2-0\n");
}

TEST_F(Cli, Boundary) {
  const CliRun text = run("boundary --n 5 --k 2");
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.substr(0, 13), "A: 1,19,1,19\n");
  const auto j = nlohmann::json::parse(run("boundary --n 5 --k 2 --format json").out);
  EXPECT_EQ(j["letters"].size(), 36u);
  EXPECT_EQ(j["segments"]["B"], (std::vector<int>{3, 5, 1, 3, 19, 1}));
}

TEST_F(Cli, Verify) {
  const CliRun r = run("verify --n 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verified"), std::string::npos);
  EXPECT_EQ(run("verify --n 6 --k 2").code, 0);
}

TEST_F(Cli, SupertileValidateRender) {
  ASSERT_EQ(run("supertile --n 5 --k 2 --out " + file("s.json")).code, 0);
  const auto doc = subrosa::patch_from_json(subrosa::read_text_file(file("s.json")));
  EXPECT_EQ(doc.patch.n(), 5);
  EXPECT_EQ(run("validate " + file("s.json") + " --region rhombus:5,2").code, 0);
  // the (1,4) region has a different area
  EXPECT_EQ(run("validate " + file("s.json") + " --region rhombus:5,1").code, 1);
  ASSERT_EQ(run("render " + file("s.json") + " --out " + file("s.svg") + " --palette gray").code, 0);
  EXPECT_NE(subrosa::read_text_file(file("s.svg")).find("<svg"), std::string::npos);
  ASSERT_EQ(run("supertile --n 5 --k 2 --symmetric --out " + file("t.json")).code, 0);
  EXPECT_EQ(run("validate " + file("t.json")).code, 0);
}

TEST_F(Cli, IterateAndRoseRegion) {
  ASSERT_EQ(run("iterate --n 5 --generations 1 --out " + file("g.json")).code, 0);
  const CliRun v = run("validate " + file("g.json") + " --region rose");
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(v.out)["pass"].get<bool>());
  ASSERT_EQ(run("iterate --n 2 --generations 3 --out " + file("sq.json")).code, 0);
  EXPECT_EQ(subrosa::patch_from_json(subrosa::read_text_file(file("sq.json"))).patch.size(), 64u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("sigma").code, 2);
  EXPECT_EQ(run("sigma --n 1").code, 2);
  EXPECT_EQ(run("boundary --n 5 --k 3").code, 2);
  EXPECT_EQ(run("boundary --n 5 --k 2 --format xml").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("iterate --n 5 --generations 3 --max-tiles 1000 --out " + file("big.json")).code, 3);
  EXPECT_FALSE(std::filesystem::exists(file("big.json")));
  EXPECT_EQ(run("validate " + file("missing.json")).code, 1);
  EXPECT_EQ(run("validate " + file("missing.json") + " --region blob").code, 1);
}

TEST_F(Cli, Deterministic) {
  for (const std::string name : {"a", "b"}) {
    ASSERT_EQ(run("supertile --n 7 --k 3 --out " + file(name + ".json")).code, 0);
    ASSERT_EQ(run("render " + file(name + ".json") + " --out " + file(name + ".svg")).code, 0);
  }
  EXPECT_EQ(subrosa::read_text_file(file("a.svg")), subrosa::read_text_file(file("b.svg")));
  // the command line differs only in the file name
  auto ja = nlohmann::json::parse(subrosa::read_text_file(file("a.json")));
  auto jb = nlohmann::json::parse(subrosa::read_text_file(file("b.json")));
  ja["meta"].erase("command_line");
  jb["meta"].erase("command_line");
  EXPECT_EQ(ja.dump(), jb.dump());
}
