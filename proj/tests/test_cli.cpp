#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ANTISUB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("antisub_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ListPrintsAtLeast25Ids) {
  const auto r = run("list");
  EXPECT_EQ(r.code, 0);
  EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 25);
  EXPECT_NE(r.out.find("3.3.1a"), std::string::npos);
}

TEST(Cli, VerifyCleanEntryJson) {
  const auto r = run("verify 3.1.1a --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["id"], "3.1.1a");
  for (const auto& c : j["checks"]) EXPECT_NE(c["status"], "refuted");
}

TEST(Cli, RefutedClaimExitsOne) {
  EXPECT_EQ(run("verify 3.3.1a").code, 1);
  EXPECT_EQ(run("verify 3.3.1a --report-only").code, 0);
}

TEST(Cli, JsonByteStable) {
  const auto a = run("verify --all --format json --report-only");
  const auto b = run("verify --all --format json --report-only");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, ExportRoundTripsThroughFile) {
  for (const char* id : {"3.3.1a", "3.4.2b", "Ex4.3.2"}) {
    const auto exported = run(std::string("export ") + id);
    ASSERT_EQ(exported.code, 0) << id;
    const auto path = temp_file(std::string(id) + ".json", exported.out);
    const auto a = run("verify --file " + path.string() + " --format json --report-only");
    const auto b = run(std::string("verify ") + id + " --format json --report-only");
    EXPECT_EQ(a.out, b.out) << id;
    std::filesystem::remove(path);
  }
}

TEST(Cli, WrongClaimInFileExitsOne) {
  auto doc = nlohmann::ordered_json::parse(run("export 3.1.1a").out);
  nlohmann::ordered_json claim = nlohmann::ordered_json::object();
  claim["check"] = "horizontal_integrable";
  claim["expected"] = false;
  doc["claims"].push_back(claim);
  const auto path = temp_file("wrong.json", doc.dump());
  const auto r = run("verify --file " + path.string() + " --format json");
  EXPECT_EQ(r.code, 1);
  const auto report = nlohmann::json::parse(r.out);
  bool refuted = false;
  for (const auto& c : report["checks"])
    refuted = refuted || (c["name"] == "horizontal_integrable" && c["status"] == "refuted");
  EXPECT_TRUE(refuted);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodesForBadInput) {
  EXPECT_EQ(run("verify nope").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify 3.1.1a --all").code, 2);
  EXPECT_EQ(run("verify 3.1.1a --format xml").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --file /nonexistent.json").code, 3);
  const auto bad = temp_file("bad.json", "{\"basis\": [\"a\"], \"metric\": [[0.5]], \"subalgebra\": []}");
  EXPECT_EQ(run("verify --file " + bad.string()).code, 3);
  std::filesystem::remove(bad);
}

TEST(Cli, EmbeddedFlags) {
  const auto r = run("verify E4.1.3 --seed 7 --samples 32 --tol 1e-10 --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  bool seen = false;
  for (const auto& d : j["decisions"]) seen = seen || d.get<std::string>().find("32 samples, seed 7") != std::string::npos;
  EXPECT_TRUE(seen);
}

TEST(Cli, TimingFlag) {
  EXPECT_EQ(run("verify 3.1.1a --format json").out.find("timing_ms"), std::string::npos);
  EXPECT_NE(run("verify 3.1.1a --format json --timing").out.find("timing_ms"), std::string::npos);
}
