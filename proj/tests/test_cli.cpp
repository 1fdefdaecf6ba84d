#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// stdout only; stderr goes to /dev/null unless the command redirects it.
CliRun run(const std::string& args) {
  const std::string cmd = std::string(CRITDG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(CRITDG_TEST_DATA) + "/" + name; }

TEST(Cli, AnalyzeGammaThree) {
  const CliRun r = run("analyze " + data("gamma3.dot"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("d=INF"), std::string::npos);
  EXPECT_NE(r.out.find("r=1"), std::string::npos);
  EXPECT_NE(r.out.find("d-critical=true"), std::string::npos);
  EXPECT_NE(r.out.find("TransitiveTournament(3)"), std::string::npos);
}

TEST(Cli, AnalyzeD4Json) {
  const CliRun r = run("analyze --json " + data("d4.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"r_m\":\"INF\""), std::string::npos);
  EXPECT_NE(r.out.find("\"rm\":true"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run("analyze " + data("malformed.json")).status, 2);
  EXPECT_EQ(run("analyze " + data("missing.json")).status, 2);
}

TEST(Cli, Generate) {
  const CliRun g4 = run("generate gamma-k --k 4");
  ASSERT_EQ(g4.status, 0);
  EXPECT_EQ(g4.out, "{\"n\":4,\"arcs\":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}\n");
  const CliRun mr = run("generate max-radius --n 5 --k 3 --pos 2 --split 2,1");
  ASSERT_EQ(mr.status, 0);
  EXPECT_EQ(std::count(mr.out.begin(), mr.out.end(), '[') - 1, 12);
  const CliRun qd = run("generate qd3 --sizes 1,1,1,1");
  ASSERT_EQ(qd.status, 0);
  EXPECT_EQ(std::count(qd.out.begin(), qd.out.end(), '[') - 1, 20);
  EXPECT_EQ(run("generate gamma-k --k 3 --dot").out, "digraph G {\n  1 -> 2;\n  1 -> 3;\n  2 -> 3;\n}\n");
  EXPECT_EQ(run("generate qd3 --sizes 0,0,0,0").status, 2);
  EXPECT_EQ(run("generate cube").status, 2);
}

TEST(Cli, Count) {
  EXPECT_EQ(run("count beta --n 4 --k 2").out, "n\tk\tbeta\n4\t2\t3\n");
  EXPECT_EQ(run("count chi --n 3 --k 2").out, "n\tk\tchi\n3\t2\t8\n");
  const CliRun g = run("count g --n 3..6 --k 3");
  ASSERT_EQ(g.status, 0);
  EXPECT_EQ(g.out, "n\tk\tg\n3\t3\t—\n4\t3\t6\n5\t3\t12\n6\t3\t20\n");
  EXPECT_EQ(run("count nosuch --n 3 --k 2").status, 2);
  EXPECT_EQ(run("count g --n x --k 2").status, 2);
}

TEST(Cli, VerifyExitCodes) {
  const CliRun ok = run("verify thm5 --max-n 4 --workers 1");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("\"mismatch\": false"), std::string::npos);
  EXPECT_EQ(ok.out.find("wall_seconds"), std::string::npos);
  EXPECT_NE(run("verify thm5 --max-n 3 --timing").out.find("wall_seconds"), std::string::npos);
  EXPECT_EQ(run("verify nosuch").status, 2);
  EXPECT_EQ(run("verify thm5 --max-n 6").status, 2);
  EXPECT_EQ(run("verify").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, VerifyAllAtThree) {
  const CliRun r = run("verify all --max-n 3 --workers 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"scenario\": \"lemma11\""), std::string::npos);
  EXPECT_NE(r.out.find("formula-errata-suspected"), std::string::npos);
}

}  // namespace
