// Drives the chevkit executable; its path comes from CHEVKIT_CLI.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run
{
  int status;
  std::string out;
};

Run run(const std::string& args)
{
  const std::string cmd = std::string(CHEVKIT_CLI) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, TableRow)
{
  const auto r = run("--algebra g2 --char 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "g2 2 14 0 14 21 no\n");
}

TEST(Cli, TableForOneAlgebraAllPrimes)
{
  const auto r = run("table --algebra e6");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "e6 2 78 0 78 78 yes\ne6 3 78 1 77 78 no\n");
}

TEST(Cli, JsonAndCsv)
{
  auto r = run("--algebra f4 --char 3 --output csv");
  EXPECT_EQ(r.out, "L,char,dim,Z(L),ad(L),Der(L),inner\nf4,3,52,0,52,52,yes\n");
  r = run("--algebra f4 --char 3 --output json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"dim_Der\": 52"), std::string::npos);
}

TEST(Cli, Killing)
{
  const auto r = run("killing");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "g2: 2 3\nf4: 2 3\ne6: 2 3\ne7: 2 3\ne8: 2 3 5\n");
}

TEST(Cli, GeneratorPipeline)
{
  const auto r = run("--pipeline generators --algebra e6 --char 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "e6 3 78 1 77 78 no\n");
}

TEST(Cli, BadConfigurationExitsWithTwo)
{
  EXPECT_EQ(run("--algebra a5").status, 2);
  EXPECT_EQ(run("--algebra g2 --char 4").status, 2);
  EXPECT_EQ(run("--algebra g2 --method naive").status, 2);
  EXPECT_EQ(run("--algebra e8 --char 2 --method full").status, 2);
  EXPECT_EQ(run("--pipeline generators --algebra g2").status, 2);
  EXPECT_EQ(run("--no-such-flag").status, 2);
}

TEST(Cli, LargeNaiveOverride)
{
  const auto r = run("--algebra e8 --char 3 --method both --allow-large-naive");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "e8 3 248 0 248 248 yes\n");
}

TEST(Cli, SelftestFlagsACorruptedConstantsFile)
{
  const auto dump = run("constants --algebra g2");
  ASSERT_EQ(dump.status, 0);
  // flip the sign of [b3, b4] and [b4, b3] together so only Jacobi can catch it
  std::istringstream in(dump.out);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long i, j, k, c;
    ls >> i >> j >> k >> c;
    if ((i == 3 && j == 4) || (i == 4 && j == 3)) c = -c;
    out << i << ' ' << j << ' ' << k << ' ' << c << '\n';
  }
  const auto path = std::filesystem::temp_directory_path() / "chevkit_corrupt_g2.txt";
  std::ofstream(path) << out.str();

  const auto r = run("selftest --constants " + path.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("Jacobi identity fails for basis triple ("), std::string::npos) << r.out;
  std::filesystem::remove(path);

  const auto good = std::filesystem::temp_directory_path() / "chevkit_good_g2.txt";
  std::ofstream(good) << dump.out;
  const auto ok = run("selftest --constants " + good.string());
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_NE(ok.out.find("selftest: all"), std::string::npos);
  std::filesystem::remove(good);
}
