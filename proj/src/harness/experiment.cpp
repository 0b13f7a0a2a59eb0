#include "pendrng/harness.hpp"

#include "pendrng/baselines.hpp"

#include <stdexcept>

namespace pendrng::harness {

std::string_view to_string(GeneratorKind kind) noexcept
{
    switch (kind) {
    case GeneratorKind::pendulum: return "pendulum";
    case GeneratorKind::lcg: return "lcg";
    case GeneratorKind::hashdrbg: return "hashdrbg";
    case GeneratorKind::custom: return "custom";
    }
    return "?";
}

GeneratorSpec pendulum_generator(std::string name, GeneratorConfig config)
{
    config.validate();
    GeneratorSpec spec;
    spec.name = std::move(name);
    spec.kind = GeneratorKind::pendulum;
    spec.pendulum = config;
    spec.make_stream = [config](std::uint64_t seed, std::size_t bits) {
        PendulumRng rng(seed, config);
        return fill_bitstream(rng, bits);
    };
    return spec;
}

GeneratorSpec lcg_generator(std::string name)
{
    return {std::move(name), GeneratorKind::lcg, std::nullopt,
            [](std::uint64_t seed, std::size_t bits) {
                Lcg48 lcg(seed);
                return fill_bitstream(lcg, bits);
            }};
}

GeneratorSpec hashdrbg_generator(std::string name)
{
    return {std::move(name), GeneratorKind::hashdrbg, std::nullopt,
            [](std::uint64_t seed, std::size_t bits) {
                HashDrbg drbg(seed);
                return fill_bitstream(drbg, bits);
            }};
}

std::vector<GeneratorSpec> comparison_generators(GeneratorMode mode)
{
    GeneratorConfig frictionless;
    frictionless.mode = mode;
    GeneratorConfig damped = frictionless;
    damped.damping = 0.9999;
    return {
        pendulum_generator("pendulum (no damping)", frictionless),
        pendulum_generator("pendulum (damping 0.9999)", damped),
        lcg_generator(),
        hashdrbg_generator(),
    };
}

void ExperimentConfig::validate() const
{
    if (generators.empty())
        throw std::invalid_argument("ExperimentConfig: at least one generator is required");
    for (const auto& g : generators)
        if (!g.make_stream)
            throw std::invalid_argument("ExperimentConfig: generator '" + g.name + "' has no stream factory");
    if (streams_per_generator < 1)
        throw std::invalid_argument("ExperimentConfig: streams_per_generator must be >= 1");
    if (bits_per_stream < 128)
        throw std::invalid_argument("ExperimentConfig: bits_per_stream must be >= 128");
    if (!seeds.empty() && seeds.size() < streams_per_generator)
        throw std::invalid_argument("ExperimentConfig: explicit seed list shorter than stream count");
    if (!(test_params.alpha > 0.0 && test_params.alpha < 1.0))
        throw std::invalid_argument("ExperimentConfig: alpha must lie in (0, 1)");
}

std::uint64_t ExperimentConfig::stream_seed(std::size_t index) const
{
    return seeds.empty() ? base_seed + index : seeds.at(index);
}

namespace {

StreamOutcome run_stream(const GeneratorSpec& gen, const ExperimentConfig& config, std::uint64_t seed)
{
    StreamOutcome out;
    out.seed = seed;
    try {
        const Bitstream bits = gen.make_stream(seed, config.bits_per_stream);
        out.results = sts::run_battery(bits, config.test_params);
    } catch (const std::exception& e) {
        out.results.clear();
        out.error = e.what();
    }
    return out;
}

void tally(GeneratorReport& report)
{
    report.tallies = {};
    for (const auto& stream : report.streams) {
        for (std::size_t t = 0; t < stream.results.size() && t < report.tallies.size(); ++t) {
            const auto& r = stream.results[t];
            auto& tally = report.tallies[t];
            if (r.skipped) {
                ++tally.skipped;
                continue;
            }
            ++tally.applicable;
            tally.passed += r.pass;
        }
    }
    report.overall = 0;
    report.overall_applicable = 0;
    for (const auto& t : report.tallies) {
        report.overall += t.passed;
        report.overall_applicable += t.applicable;
    }
}

} // namespace

Report run_experiment(const ExperimentConfig& config)
{
    config.validate();

    Report report;
    report.streams_per_generator = config.streams_per_generator;
    report.bits_per_stream = config.bits_per_stream;
    report.base_seed = config.base_seed;
    report.test_params = config.test_params;

    const std::size_t ngen = config.generators.size();
    const std::size_t nstream = config.streams_per_generator;
    std::vector<StreamOutcome> outcomes(ngen * nstream);

    // Kernels inside the battery stay serial when streams already run in
    // parallel.
    ExperimentConfig per_stream = config;
    if (config.exec == kernels::Exec::parallel)
        per_stream.test_params.exec = kernels::Exec::serial;

    const auto items = static_cast<std::ptrdiff_t>(outcomes.size());
#pragma omp parallel for schedule(dynamic, 1) if (config.exec == kernels::Exec::parallel)
    for (std::ptrdiff_t item = 0; item < items; ++item) {
        const auto g = static_cast<std::size_t>(item) / nstream;
        const auto s = static_cast<std::size_t>(item) % nstream;
        outcomes[static_cast<std::size_t>(item)] =
            run_stream(config.generators[g], per_stream, config.stream_seed(s));
    }

    report.generators.resize(ngen);
    for (std::size_t g = 0; g < ngen; ++g) {
        auto& gr = report.generators[g];
        gr.name = config.generators[g].name;
        gr.kind = config.generators[g].kind;
        gr.pendulum = config.generators[g].pendulum;
        gr.streams.assign(std::make_move_iterator(outcomes.begin() + static_cast<std::ptrdiff_t>(g * nstream)),
                          std::make_move_iterator(outcomes.begin() + static_cast<std::ptrdiff_t>((g + 1) * nstream)));
        tally(gr);
    }

    // Serial, after the parallel phase, so measurements do not contend.
    if (config.measure_resources) {
        const std::size_t n = std::max<std::size_t>(config.bits_per_stream, 1'000'000);
        for (std::size_t g = 0; g < ngen; ++g) {
            try {
                report.generators[g].resources =
                    measure_resources(config.generators[g], n, config.stream_seed(0));
            } catch (const std::exception&) {
                report.generators[g].resources.reset();
            }
        }
    }
    return report;
}

} // namespace pendrng::harness
