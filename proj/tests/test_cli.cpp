#include "support/process.hpp"

#include "pendrng/bitstream.hpp"
#include "pendrng/baselines.hpp"

#include <gtest/gtest.h>
#include "json.hpp"

#include <filesystem>
#include <fstream>

using pendrng::testing::cli;
using pendrng::testing::run_command;

namespace {

std::string temp(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("pendrng_cli_" + name)).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST(Cli, GenIsReproducible)
{
    for (const char* g : {"pendulum", "lcg", "hashdrbg"}) {
        const std::string args = std::string("gen --generator ") + g + " --seed 77 --bits 5000";
        const auto a = run_command(cli(args));
        const auto b = run_command(cli(args));
        EXPECT_EQ(a.exit_code, 0);
        EXPECT_EQ(a.out, b.out) << g;
        EXPECT_EQ(pendrng::Bitstream::from_string(a.out).size(), 5000u);
    }
}

TEST(Cli, GenLcgMatchesLibrary)
{
    const auto r = run_command(cli("gen --generator lcg --seed 0 --bits 64"));
    pendrng::Lcg48 lcg(0);
    EXPECT_EQ(r.out, pendrng::fill_bitstream(lcg, 64).to_string() + "\n");
}

TEST(Cli, GenRawFileAndTestRoundTrip)
{
    const auto path = temp("raw.bin");
    ASSERT_EQ(run_command(cli("gen --generator hashdrbg --seed 5 --bits 100000 --format raw --out " + path)).exit_code, 0);
    EXPECT_EQ(slurp(path).size(), 12500u);
    const auto t = run_command(cli("test --in " + path + " --format raw"));
    EXPECT_EQ(t.exit_code, 0);
    EXPECT_NE(t.out.find("Frequency"), std::string::npos);
    EXPECT_NE(t.out.find("summary:"), std::string::npos);
    EXPECT_NE(t.out.find("SKIP"), std::string::npos); // universal needs more bits
    std::filesystem::remove(path);
}

TEST(Cli, TestReportsFailuresWithExitZero)
{
    const auto path = temp("zeros.txt");
    std::ofstream(path) << std::string(2000, '0') << "\n";
    const auto t = run_command(cli("test --in " + path));
    EXPECT_EQ(t.exit_code, 0);
    EXPECT_NE(t.out.find("FAIL"), std::string::npos);
    EXPECT_NE(t.out.find("tests failed"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_command(cli("")).exit_code, 1);
    EXPECT_EQ(run_command(cli("--help")).exit_code, 0);
    EXPECT_EQ(run_command(cli("gen --help")).exit_code, 0);
    EXPECT_EQ(run_command(cli("frobnicate")).exit_code, 1);
    EXPECT_EQ(run_command(cli("gen --generator lcg --bits 0")).exit_code, 1);
    EXPECT_EQ(run_command(cli("gen --generator mt19937 --bits 10")).exit_code, 1);
    EXPECT_EQ(run_command(cli("gen --generator lcg --bits 10 --damping 0.5")).exit_code, 1);
    EXPECT_EQ(run_command(cli("gen --generator pendulum --bits 10 --damping 1.5")).exit_code, 1);
    EXPECT_EQ(run_command(cli("gen --generator lcg --bits 10 --format hex")).exit_code, 1);
    EXPECT_EQ(run_command(cli("sweep --grid bogus=1 --out /dev/null")).exit_code, 1);
    EXPECT_EQ(run_command(cli("test --in /nonexistent/file")).exit_code, 2);
}

TEST(Cli, MalformedInputNamesOffset)
{
    const auto path = temp("bad.txt");
    std::ofstream(path) << "0101\n01x1\n";
    const auto r = run_command(cli("test --in " + path) + " 2>&1 >/dev/null");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.out.find("offset 7"), std::string::npos) << r.out;
    std::filesystem::remove(path);
}

TEST(Cli, OmittedSeedIsPrinted)
{
    const auto r = run_command(cli("gen --generator lcg --bits 8") + " 2>&1 >/dev/null");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("seed="), std::string::npos);
}

TEST(Cli, CompareWritesReport)
{
    const auto path = temp("compare.json");
    const auto r = run_command(cli("compare --streams 2 --bits 20000 --seed 9 --out " + path));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("Overall"), std::string::npos);
    EXPECT_NE(r.out.find("Time per 1e6 bits"), std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(path));
    EXPECT_EQ(doc["results"].size(), 4u);
    EXPECT_EQ(doc["resources"].size(), 4u);
    std::filesystem::remove(path);
}

TEST(Cli, SweepWritesReport)
{
    const auto path = temp("sweep.json");
    const auto r = run_command(cli("sweep --grid \"ratio=0.5,2;d=1\" --streams 1 --bits 5000 --seed 1 --out " + path));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("negative trend"), std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(path));
    EXPECT_EQ(doc["sweep"].size(), 3u);
    EXPECT_TRUE(doc.contains("sweep_summary"));
    std::filesystem::remove(path);
}

TEST(Cli, Bench)
{
    const auto r = run_command(cli("bench --generator lcg --bits 1000000 --seed 1"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("bits_per_second"), std::string::npos);
    EXPECT_EQ(run_command(cli("bench --generator lcg --bits 1000")).exit_code, 1);
}
