// pendrng command-line tool.
//
// Exit codes: 0 success, 1 usage error, 2 input/format error, 3 internal failure.

#include "pendrng/baselines.hpp"
#include "pendrng/bitstream.hpp"
#include "pendrng/generator.hpp"
#include "pendrng/harness.hpp"
#include "pendrng/report.hpp"
#include "pendrng/sts.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pendrng;

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed)
{
    if (seed)
        return *seed;
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(now).count());
}

GeneratorMode parse_mode(const std::string& text)
{
    auto m = parse_generator_mode(text);
    if (!m)
        throw UsageError("--mode must be 'paper' or 'stream'");
    return *m;
}

BitFormat parse_format(const std::string& text)
{
    auto f = parse_bit_format(text);
    if (!f)
        throw UsageError("--format must be 'ascii' or 'raw'");
    return *f;
}

void print_config(const GeneratorConfig& c)
{
    std::fprintf(stderr,
                 "config: mode=%s h=%g g=%g l1=%g l2=%g damping=%g mass_range=[%g,%g] "
                 "loop_range=[%u,%u] stir_steps=%u\n",
                 std::string(to_string(c.mode)).c_str(), c.h, c.g, c.l1, c.l2, c.damping,
                 c.mass_range.lo, c.mass_range.hi, c.loop_range.lo, c.loop_range.hi, c.stir_steps);
}

struct PendulumFlags {
    std::string mode = "stream";
    double damping = 1.0;
    double g = 9.81;
    double l1 = 1.0;
    double l2 = 1.0;

    void add_to(CLI::App* cmd, bool with_physics)
    {
        cmd->add_option("--mode", mode, "Pendulum emission mode: paper | stream")
            ->capture_default_str();
        if (!with_physics)
            return;
        cmd->add_option("--damping", damping, "Per-step angular velocity multiplier in (0, 1]")
            ->capture_default_str();
        cmd->add_option("--g", g, "Gravitational acceleration (m/s^2)")->capture_default_str();
        cmd->add_option("--l1", l1, "Inner link length (m)")->capture_default_str();
        cmd->add_option("--l2", l2, "Outer link length (m)")->capture_default_str();
    }

    GeneratorConfig config() const
    {
        GeneratorConfig c;
        c.mode = parse_mode(mode);
        c.damping = damping;
        c.g = g;
        c.l1 = l1;
        c.l2 = l2;
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return c;
    }
};

harness::GeneratorSpec make_generator(const std::string& name, const PendulumFlags& flags)
{
    if (name == "pendulum")
        return harness::pendulum_generator("pendulum", flags.config());
    if (name == "lcg")
        return harness::lcg_generator();
    if (name == "hashdrbg")
        return harness::hashdrbg_generator();
    throw UsageError("--generator must be pendulum, lcg or hashdrbg");
}

void write_json_or_throw(const std::string& path, const nlohmann::json& doc)
{
    try {
        harness::write_json(path, doc);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string generator;
    std::optional<std::uint64_t> seed;
    std::size_t bits = 0;
    std::string out;
    std::string format = "ascii";
    PendulumFlags pendulum;
};

int run_gen(const GenArgs& a, CLI::App* cmd)
{
    if (a.generator != "pendulum") {
        for (const char* flag : {"--mode", "--damping", "--g", "--l1", "--l2"})
            if (cmd->count(flag) > 0)
                throw UsageError(std::string(flag) + " only applies to --generator pendulum");
    }
    const BitFormat format = parse_format(a.format);
    const auto gen = make_generator(a.generator, a.pendulum);
    const std::uint64_t seed = resolve_seed(a.seed);

    std::fprintf(stderr, "gen: generator=%s seed=%llu bits=%zu format=%s\n", a.generator.c_str(),
                 static_cast<unsigned long long>(seed), a.bits, a.format.c_str());
    if (gen.pendulum)
        print_config(*gen.pendulum);

    const Bitstream bits = gen.make_stream(seed, a.bits);
    if (a.out.empty() || a.out == "-") {
        if (format == BitFormat::raw)
            write_raw(std::cout, bits);
        else
            write_ascii(std::cout, bits);
        std::cout.flush();
    } else {
        try {
            save_bitstream(a.out, bits, format);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    return kOk;
}

// ---- test ------------------------------------------------------------------

struct TestArgs {
    std::string in;
    std::string format = "ascii";
    std::optional<std::size_t> bits;
    double alpha = 0.01;
    std::size_t block_m = 20;
    unsigned serial_m = 13;
    unsigned apen_m = 10;
    bool allow_short = false;
};

int run_test(const TestArgs& a)
{
    const BitFormat format = parse_format(a.format);
    if (!(a.alpha > 0.0 && a.alpha < 1.0))
        throw UsageError("--alpha must lie in (0, 1)");

    Bitstream bits;
    try {
        bits = load_bitstream(a.in, format, a.bits);
    } catch (const FormatError& e) {
        throw InputError(a.in + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    if (bits.empty())
        throw InputError(a.in + ": no bits found");

    sts::TestParams params;
    params.alpha = a.alpha;
    params.block_frequency_m = a.block_m;
    params.serial_m = a.serial_m;
    params.apen_m = a.apen_m;
    params.enforce_min_length = !a.allow_short;

    std::fprintf(stderr, "test: in=%s format=%s n=%zu alpha=%g block_m=%zu serial_m=%u apen_m=%u%s\n",
                 a.in.c_str(), a.format.c_str(), bits.size(), a.alpha, a.block_m, a.serial_m,
                 a.apen_m, a.allow_short ? " allow_short" : "");

    const auto results = sts::run_battery(bits, params);
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        std::printf("%-28s", std::string(r.name()).c_str());
        if (r.skipped) {
            ++skipped;
            std::printf("  SKIP  %s\n", r.skip_reason.c_str());
            continue;
        }
        r.pass ? ++passed : ++failed;
        std::printf("  %s ", r.pass ? "PASS" : "FAIL");
        for (double p : r.p_values)
            std::printf(" p=%.6f", p);
        std::printf("\n");
    }
    std::printf("summary: %zu passed, %zu failed, %zu skipped (alpha = %g)\n", passed, failed,
                skipped, a.alpha);
    if (failed > 0)
        std::printf("%zu tests failed\n", failed);
    return kOk;
}

// ---- compare / sweep -------------------------------------------------------

struct ExperimentArgs {
    std::size_t streams = 10;
    std::size_t bits = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string mode = "stream";
};

harness::ExperimentConfig experiment_config(const ExperimentArgs& a, std::uint64_t seed)
{
    harness::ExperimentConfig cfg;
    cfg.generators = harness::comparison_generators(parse_mode(a.mode));
    cfg.streams_per_generator = a.streams;
    cfg.bits_per_stream = a.bits;
    cfg.base_seed = seed;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

int run_compare(const ExperimentArgs& a)
{
    const std::uint64_t seed = resolve_seed(a.seed);
    auto cfg = experiment_config(a, seed);
    cfg.measure_resources = true;
    std::fprintf(stderr, "compare: streams=%zu bits=%zu seed=%llu (stream i uses seed+i) mode=%s\n",
                 a.streams, a.bits, static_cast<unsigned long long>(seed), a.mode.c_str());
    print_config(*cfg.generators.front().pendulum);

    const auto report = harness::run_experiment(cfg);
    std::cout << harness::format_table(report);
    if (!a.out.empty())
        write_json_or_throw(a.out, harness::to_json(report));
    return kOk;
}

int run_sweep(const ExperimentArgs& a, const std::string& grid_spec, const PendulumFlags& pf)
{
    harness::SweepGrid grid;
    try {
        grid = harness::parse_grid(grid_spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::uint64_t seed = resolve_seed(a.seed);
    harness::ExperimentConfig cfg = experiment_config(a, seed);
    cfg.generators = {harness::pendulum_generator("pendulum", pf.config())};
    std::fprintf(stderr, "sweep: grid=\"%s\" streams=%zu bits=%zu seed=%llu\n", grid_spec.c_str(),
                 a.streams, a.bits, static_cast<unsigned long long>(seed));
    print_config(*cfg.generators.front().pendulum);

    harness::Report report;
    report.streams_per_generator = cfg.streams_per_generator;
    report.bits_per_stream = cfg.bits_per_stream;
    report.base_seed = seed;
    report.test_params = cfg.test_params;
    report.sweep = harness::sweep(cfg, grid);

    std::cout << harness::format_sweep_table(*report.sweep);
    if (!a.out.empty())
        write_json_or_throw(a.out, harness::to_json(report));
    return kOk;
}

// ---- bench -----------------------------------------------------------------

int run_bench(const std::string& generator, std::size_t bits, std::optional<std::uint64_t> seed_opt,
              const PendulumFlags& pf)
{
    if (bits < 1'000'000)
        throw UsageError("--bits must be >= 1000000 for bench");
    const auto gen = make_generator(generator, pf);
    const std::uint64_t seed = resolve_seed(seed_opt);
    std::fprintf(stderr, "bench: generator=%s bits=%zu seed=%llu\n", generator.c_str(), bits,
                 static_cast<unsigned long long>(seed));
    if (gen.pendulum)
        print_config(*gen.pendulum);
    const auto m = harness::measure_resources(gen, bits, seed);
    std::printf("generator:          %s\n", generator.c_str());
    std::printf("bits:               %zu\n", m.n_bits);
    std::printf("seconds:            %.6f\n", m.seconds);
    std::printf("bits_per_second:    %.6g\n", m.bits_per_second);
    std::printf("ms_per_1e6_bits:    %.6g\n", 1e9 / m.bits_per_second);
    std::printf("peak_extra_bytes:   %zu (best effort, process RSS high-water delta)\n",
                m.peak_extra_bytes);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Double-pendulum PRNG and statistical test battery", "pendrng"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a bitstream");
    gen_cmd->add_option("--generator", gen.generator, "pendulum | lcg | hashdrbg")->required();
    gen_cmd->add_option("--seed", gen.seed, "64-bit seed (wall clock if omitted; always printed)");
    gen_cmd->add_option("--bits", gen.bits, "Number of bits")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", gen.out, "Output path (stdout if omitted)");
    gen_cmd->add_option("--format", gen.format, "ascii | raw")->capture_default_str();
    gen.pendulum.add_to(gen_cmd, true);

    TestArgs test;
    auto* test_cmd = app.add_subcommand("test", "Run the ten-test battery on a bitstream file");
    test_cmd->add_option("--in", test.in, "Input path")->required();
    test_cmd->add_option("--format", test.format, "ascii | raw")->capture_default_str();
    test_cmd->add_option("--bits", test.bits, "Bit count (raw input; default all bits in the file)");
    test_cmd->add_option("--alpha", test.alpha, "Significance level")->capture_default_str();
    test_cmd->add_option("--block-m", test.block_m, "Block-frequency block length M")->capture_default_str();
    test_cmd->add_option("--serial-m", test.serial_m, "Serial pattern length m")->capture_default_str();
    test_cmd->add_option("--apen-m", test.apen_m, "Approximate-entropy pattern length m")->capture_default_str();
    test_cmd->add_flag("--allow-short", test.allow_short,
                       "Do not enforce recommended minimum lengths and parameter ranges");

    ExperimentArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Four-generator comparison experiment");
    cmp_cmd->add_option("--streams", cmp.streams, "Streams per generator")->capture_default_str();
    cmp_cmd->add_option("--bits", cmp.bits, "Bits per stream")->capture_default_str();
    cmp_cmd->add_option("--seed", cmp.seed, "Base seed; stream i uses seed + i");
    cmp_cmd->add_option("--out", cmp.out, "JSON report path");
    cmp_cmd->add_option("--mode", cmp.mode, "Pendulum emission mode: paper | stream")->capture_default_str();

    ExperimentArgs swp;
    swp.streams = 5;
    swp.bits = 100'000;
    std::string grid_spec;
    PendulumFlags swp_pendulum;
    auto* swp_cmd = app.add_subcommand("sweep", "One-variable-at-a-time parameter sweep");
    swp_cmd->add_option("--grid", grid_spec, "e.g. \"g=9.81,5,20;ratio=0.5,1,2;d=1,0.9999\"")->required();
    swp_cmd->add_option("--out", swp.out, "JSON report path");
    swp_cmd->add_option("--streams", swp.streams, "Streams per grid point")->capture_default_str();
    swp_cmd->add_option("--bits", swp.bits, "Bits per stream")->capture_default_str();
    swp_cmd->add_option("--seed", swp.seed, "Base seed; stream i uses seed + i");
    swp_pendulum.add_to(swp_cmd, false);

    std::string bench_generator;
    std::size_t bench_bits = 1'000'000;
    std::optional<std::uint64_t> bench_seed;
    PendulumFlags bench_pendulum;
    auto* bench_cmd = app.add_subcommand("bench", "Measure generation rate and memory");
    bench_cmd->add_option("--generator", bench_generator, "pendulum | lcg | hashdrbg")->required();
    bench_cmd->add_option("--bits", bench_bits, "Bits to generate (>= 1000000)")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "64-bit seed (wall clock if omitted)");
    bench_pendulum.add_to(bench_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen_cmd->parsed())
            return run_gen(gen, gen_cmd);
        if (test_cmd->parsed())
            return run_test(test);
        if (cmp_cmd->parsed())
            return run_compare(cmp);
        if (swp_cmd->parsed())
            return run_sweep(swp, grid_spec, swp_pendulum);
        if (bench_cmd->parsed())
            return run_bench(bench_generator, bench_bits, bench_seed, bench_pendulum);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kInternal;
    }
    return kUsage;
}
