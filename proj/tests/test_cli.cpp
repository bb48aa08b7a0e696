#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun nilorb(const std::string& args)
{
  const std::string cmd = std::string(NILORB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(NILORB_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, OrbitsClosedSp2)
{
  const CliRun r = nilorb("orbits --type sp --n 2 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("orbits").size(), 4u);
  int rational = 0;
  for (const auto& o : j.at("orbits"))
    rational += o.at("rational_orbits").get<int>();
  EXPECT_EQ(rational, 5);
}

TEST(Cli, OrbitsOverF2MatchClosedSplitting)
{
  const CliRun r = nilorb("orbits --type sp --n 2 --q 2 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("orbits").size(), 5u);
  std::uint64_t total = 0;
  for (const auto& o : j.at("orbits"))
    total += o.at("orbit_size").get<std::uint64_t>();
  EXPECT_EQ(total, 256u);  // q^{dim g - n}
}

TEST(Cli, OrbitsOddRankOne)
{
  const CliRun r = nilorb("orbits --type so-odd --n 1 --format csv");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line))
    ++lines;
  EXPECT_EQ(lines, 3);  // header + 2 classes
}

TEST(Cli, OrbitsJsonlDump)
{
  const CliRun r = nilorb("orbits --type so-odd --n 2 --q 2 --format jsonl");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    EXPECT_TRUE(j.contains("representative"));
    EXPECT_TRUE(j.contains("stabilizer_order"));
    ++lines;
  }
  EXPECT_EQ(lines, 5);
}

TEST(Cli, ClassifyZero)
{
  const CliRun r = nilorb("classify --matrix " + sample("sp2_zero.txt") + " --type sp");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.at("nilpotent").get<bool>());
  EXPECT_EQ(j.at("symbol"), "(1)^2_0");
}

TEST(Cli, ClassifyRationalLabel)
{
  const CliRun r = nilorb("classify --matrix " + sample("sp4_delta_f2.txt") + " --type sp --q 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("symbol"), "(2)^2_1:d");
  const CliRun odd = nilorb("classify --matrix " + sample("so5_split_delta_f4.txt") + " --type so-odd --q 4");
  ASSERT_EQ(odd.code, 0);
  EXPECT_EQ(json::parse(odd.out).at("symbol"), "[1] (1)_1:d");
}

TEST(Cli, NonNilpotentExitCode)
{
  const CliRun r = nilorb("classify --matrix " + sample("sp2_not_nilpotent.txt") + " --type sp");
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(json::parse(r.out).at("nilpotent").get<bool>());
}

TEST(Cli, NormalFormRoundTrip)
{
  const std::string path = testing::TempDir() + "nilorb_witness.txt";
  for (const auto& [type, sym, q] : {std::tuple{"sp", "(2)^2_1:0", "2"}, std::tuple{"sp", "(2)^2_1:d (1)^2_0:0", "4"},
                                     std::tuple{"so-odd", "[1] (1)_1:d", "2"}, std::tuple{"so-odd", "[0] (2)_2:0", "4"}}) {
    const CliRun w = nilorb(std::string("normal-form --type ") + type + " --symbol \"" + sym + "\" --q " + q);
    ASSERT_EQ(w.code, 0) << sym;
    std::ofstream(path) << w.out;
    const CliRun c = nilorb(std::string("classify --type ") + type + " --q " + q + " --matrix " + path);
    ASSERT_EQ(c.code, 0) << sym;
    EXPECT_EQ(json::parse(c.out).at("symbol"), sym);
  }
}

TEST(Cli, CentralizerReport)
{
  const CliRun r = nilorb("centralizer --type sp --pair \"nu=[1]; mu=[1]\" --q 2");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("symbol"), "(2)^2_1");
  EXPECT_EQ(j.at("dim_z"), 4);
  EXPECT_EQ(j.at("comp_group_order"), 2);
  const CliRun s = nilorb("centralizer --type so-odd --symbol \"[2]\"");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json::parse(s.out).at("dim_z"), 2);
}

TEST(Cli, VerifyCombinatorics)
{
  const CliRun r = nilorb("verify --suite combinatorics --max-n 6 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("passed").get<bool>());
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(nilorb("").code, 2);
  EXPECT_EQ(nilorb("orbits --type gl --n 2").code, 2);
  EXPECT_EQ(nilorb("orbits --type sp").code, 2);
  EXPECT_EQ(nilorb("orbits --type sp --n 2 --q 3").code, 2);
  EXPECT_EQ(nilorb("normal-form --type sp --symbol \"(2)^2_0\"").code, 2);
  EXPECT_EQ(nilorb("classify --type so-odd --matrix " + sample("sp2_zero.txt")).code, 2);
  EXPECT_EQ(nilorb("classify --type sp --q 4 --matrix " + sample("sp2_zero.txt")).code, 2);
  EXPECT_EQ(nilorb("classify --type sp --matrix /nonexistent").code, 2);
  EXPECT_EQ(nilorb("centralizer --type so-even --symbol \"(2)^2_2\"").code, 2);
}

TEST(Cli, SizeBounds)
{
  EXPECT_EQ(nilorb("orbits --type sp --n 4 --q 2").code, 3);
  EXPECT_EQ(nilorb("orbits --type sp --n 21").code, 3);
}
