#include "pendrng/harness.hpp"
#include "pendrng/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace pendrng;
using namespace pendrng::harness;

namespace {

GeneratorSpec constant_generator()
{
    GeneratorSpec g;
    g.name = "zeros";
    g.make_stream = [](std::uint64_t, std::size_t n) {
        Bitstream b;
        for (std::size_t i = 0; i < n; ++i)
            b.push_back(false);
        return b;
    };
    return g;
}

ExperimentConfig small_config()
{
    ExperimentConfig cfg;
    cfg.generators = {lcg_generator(), hashdrbg_generator(), constant_generator()};
    cfg.streams_per_generator = 3;
    cfg.bits_per_stream = 50'000;
    cfg.base_seed = 1000;
    return cfg;
}

} // namespace

TEST(Experiment, ConstantGeneratorPassesNothing)
{
    ExperimentConfig cfg;
    cfg.generators = {constant_generator()};
    cfg.streams_per_generator = 2;
    cfg.bits_per_stream = 400'000;
    const auto r = run_experiment(cfg);
    const auto& g = r.generators.at(0);
    EXPECT_EQ(g.overall, 0u);
    EXPECT_EQ(g.overall_applicable, 20u);
    for (const auto& t : g.tallies)
        EXPECT_EQ(t.passed, 0u);
}

TEST(Experiment, TalliesCountSkips)
{
    const auto r = run_experiment(small_config());
    for (const auto& g : r.generators) {
        EXPECT_EQ(g.streams.size(), 3u);
        std::size_t applicable = 0;
        for (const auto& t : g.tallies) {
            EXPECT_EQ(t.applicable + t.skipped, 3u);
            EXPECT_LE(t.passed, t.applicable);
            applicable += t.applicable;
        }
        EXPECT_EQ(applicable, g.overall_applicable);
        // 50k bits is too short for the universal test.
        EXPECT_EQ(g.tallies[7].skipped, 3u);
    }
}

TEST(Experiment, SeedsFollowBaseSeed)
{
    auto cfg = small_config();
    const auto r = run_experiment(cfg);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(r.generators[0].streams[i].seed, 1000 + i);
    cfg.seeds = {5, 9, 11};
    EXPECT_EQ(run_experiment(cfg).generators[1].streams[2].seed, 11u);
}

TEST(Experiment, DeterministicAndIndependentOfExecution)
{
    auto cfg = small_config();
    cfg.generators.insert(cfg.generators.begin(), comparison_generators().front());
    const auto a = to_json(run_experiment(cfg));
    const auto b = to_json(run_experiment(cfg));
    cfg.exec = kernels::Exec::serial;
    const auto c = to_json(run_experiment(cfg));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(Experiment, GenerationErrorsAreRecorded)
{
    ExperimentConfig cfg;
    GeneratorSpec bad;
    bad.name = "broken";
    bad.make_stream = [](std::uint64_t, std::size_t) -> Bitstream { throw std::runtime_error("boom"); };
    cfg.generators = {bad};
    cfg.streams_per_generator = 2;
    cfg.bits_per_stream = 1000;
    const auto r = run_experiment(cfg);
    EXPECT_EQ(r.generators[0].streams[0].error, "boom");
    EXPECT_EQ(r.generators[0].overall_applicable, 0u);
}

TEST(Experiment, Validation)
{
    ExperimentConfig cfg;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.streams_per_generator = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.seeds = {1};
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Experiment, ComparisonGenerators)
{
    const auto gens = comparison_generators(GeneratorMode::paper_faithful);
    ASSERT_EQ(gens.size(), 4u);
    EXPECT_EQ(gens[0].pendulum->damping, 1.0);
    EXPECT_EQ(gens[1].pendulum->damping, 0.9999);
    EXPECT_EQ(gens[0].pendulum->mode, GeneratorMode::paper_faithful);
    EXPECT_EQ(gens[2].kind, GeneratorKind::lcg);
    EXPECT_EQ(gens[3].kind, GeneratorKind::hashdrbg);
}

TEST(Resources, MeasuresRateAndMemory)
{
    const auto m = measure_resources(lcg_generator(), 1'000'000, 1);
    EXPECT_EQ(m.n_bits, 1'000'000u);
    EXPECT_GT(m.seconds, 0.0);
    EXPECT_GT(m.bits_per_second, 0.0);
    EXPECT_TRUE(m.memory_best_effort);
    EXPECT_THROW(measure_resources(lcg_generator(), 1000, 1), std::invalid_argument);
}

TEST(Sweep, ParseGrid)
{
    const auto g = parse_grid("g=9.81,5,20; ratio=0.5,1,2;d=1,0.9999");
    EXPECT_EQ(g.gravity, (std::vector<double>{9.81, 5, 20}));
    EXPECT_EQ(g.length_ratio, (std::vector<double>{0.5, 1, 2}));
    EXPECT_EQ(g.damping, (std::vector<double>{1, 0.9999}));
    EXPECT_THROW(parse_grid(""), std::invalid_argument);
    EXPECT_THROW(parse_grid("g=abc"), std::invalid_argument);
    EXPECT_THROW(parse_grid("mass=1"), std::invalid_argument);
    EXPECT_THROW(parse_grid("d=1.5"), std::invalid_argument);
    EXPECT_THROW(parse_grid("ratio=0"), std::invalid_argument);
}

TEST(Sweep, OneVariableAtATime)
{
    ExperimentConfig base;
    base.generators = {pendulum_generator("pendulum", {})};
    base.streams_per_generator = 2;
    base.bits_per_stream = 20'000;
    base.base_seed = 3;
    const auto table = sweep(base, parse_grid("g=5,20;ratio=0.5,2"));
    ASSERT_EQ(table.rows.size(), 4u);
    for (const auto& row : table.rows) {
        EXPECT_TRUE(row.error.empty()) << row.error;
        if (row.variable == "g") {
            EXPECT_EQ(row.config.g, row.value);
            EXPECT_EQ(row.config.l1, 1.0);
        } else {
            EXPECT_EQ(row.variable, "ratio");
            EXPECT_EQ(row.config.g, 9.81);
            EXPECT_EQ(row.config.l1, row.value * row.config.l2);
        }
        EXPECT_EQ(row.config.damping, 1.0);
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        EXPECT_GE(table.rows[i - 1].overall, table.rows[i].overall);
    EXPECT_TRUE(table.length_ratio_correlation.has_value());
    EXPECT_NE(table.length_ratio_trend, TrendVerdict::not_applicable);
}

TEST(Sweep, TrendNeedsTwoRatios)
{
    ExperimentConfig base;
    base.generators = {pendulum_generator("pendulum", {})};
    base.streams_per_generator = 1;
    base.bits_per_stream = 5000;
    const auto table = sweep(base, parse_grid("d=1,0.99"));
    EXPECT_EQ(table.length_ratio_trend, TrendVerdict::not_applicable);
    EXPECT_FALSE(table.length_ratio_correlation.has_value());
}

TEST(Report, JsonShape)
{
    auto cfg = small_config();
    const auto report = run_experiment(cfg);
    const auto j = to_json(report);
    EXPECT_EQ(j["format_version"], 1);
    EXPECT_EQ(j["config"]["streams_per_generator"], 3);
    EXPECT_EQ(j["config"]["bits_per_stream"], 50000);
    EXPECT_EQ(j["config"]["base_seed"], 1000);
    EXPECT_EQ(j["config"]["test_params"]["alpha"], 0.01);
    ASSERT_EQ(j["results"].size(), 3u);
    const auto& lcg = j["results"][0];
    EXPECT_EQ(lcg["generator"], "lcg48");
    ASSERT_EQ(lcg["tests"].size(), 10u);
    EXPECT_EQ(lcg["tests"][0]["test"], "frequency");
    EXPECT_EQ(lcg["streams"].size(), 3u);
    EXPECT_TRUE(j["resources"].empty());
    EXPECT_TRUE(j["sweep"].empty());
}

TEST(Report, TableHasOverallRow)
{
    auto cfg = small_config();
    cfg.measure_resources = true;
    const auto text = format_table(run_experiment(cfg));
    EXPECT_NE(text.find("Test Name"), std::string::npos);
    EXPECT_NE(text.find("lcg48"), std::string::npos);
    EXPECT_NE(text.find("Frequency"), std::string::npos);
    EXPECT_NE(text.find("Serial"), std::string::npos);
    EXPECT_NE(text.find("Overall"), std::string::npos);
    EXPECT_NE(text.find("skipped"), std::string::npos);
    EXPECT_NE(text.find("Peak extra memory"), std::string::npos);
    EXPECT_NE(text.find("Time per 1e6 bits"), std::string::npos);
}

TEST(Report, WriteJson)
{
    const auto path = std::filesystem::temp_directory_path() / "pendrng_report_test.json";
    write_json(path, to_json(run_experiment(small_config())));
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    EXPECT_EQ(doc["format_version"], 1);
    std::filesystem::remove(path);
    EXPECT_THROW(write_json("/nonexistent-dir/x.json", doc), std::runtime_error);
}
