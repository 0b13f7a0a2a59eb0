#pragma once

#include "pendrng/bitstream.hpp"
#include "pendrng/generator.hpp"
#include "pendrng/kernels.hpp"
#include "pendrng/sts.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pendrng::harness {

enum class GeneratorKind { pendulum, lcg, hashdrbg, custom };

std::string_view to_string(GeneratorKind kind) noexcept;

/// A named bitstream source. make_stream must be safe to call concurrently
/// with distinct seeds.
struct GeneratorSpec {
    std::string name;
    GeneratorKind kind = GeneratorKind::custom;
    std::optional<GeneratorConfig> pendulum;
    std::function<Bitstream(std::uint64_t seed, std::size_t bits)> make_stream;
};

GeneratorSpec pendulum_generator(std::string name, GeneratorConfig config);
GeneratorSpec lcg_generator(std::string name = "lcg48");
GeneratorSpec hashdrbg_generator(std::string name = "hashdrbg-sha1");

/// Generators of the four-column comparison: pendulum without damping,
/// pendulum with damping 0.9999, the LCG and the hash DRBG.
std::vector<GeneratorSpec> comparison_generators(GeneratorMode mode = GeneratorMode::streaming);

struct ExperimentConfig {
    std::vector<GeneratorSpec> generators;
    std::size_t streams_per_generator = 10;
    std::size_t bits_per_stream = 1'000'000;
    sts::TestParams test_params;
    /// Stream i uses seeds[i] when given, else base_seed + i.
    std::uint64_t base_seed = 0;
    std::vector<std::uint64_t> seeds;
    bool measure_resources = false;
    kernels::Exec exec = kernels::Exec::parallel;

    /// Throws std::invalid_argument on a malformed configuration.
    void validate() const;
    std::uint64_t stream_seed(std::size_t index) const;
};

struct ResourceMeasurement {
    std::size_t n_bits = 0;
    double seconds = 0.0;
    double bits_per_second = 0.0;
    std::size_t peak_extra_bytes = 0;
    /// Memory figures come from process-wide RSS accounting.
    bool memory_best_effort = true;
};

struct StreamOutcome {
    std::uint64_t seed = 0;
    std::vector<sts::TestResult> results;
    /// Non-empty when generation failed; results is then empty.
    std::string error;
};

struct TestTally {
    std::size_t passed = 0;
    std::size_t applicable = 0;
    std::size_t skipped = 0;
};

struct GeneratorReport {
    std::string name;
    GeneratorKind kind = GeneratorKind::custom;
    std::optional<GeneratorConfig> pendulum;
    std::vector<StreamOutcome> streams;
    /// Indexed like sts::kBatteryOrder.
    std::array<TestTally, 10> tallies{};
    std::size_t overall = 0;
    std::size_t overall_applicable = 0;
    std::optional<ResourceMeasurement> resources;
};

struct SweepRow {
    std::string variable; // "g", "ratio" or "d"
    double value = 0.0;
    GeneratorConfig config;
    std::size_t overall = 0;
    std::size_t applicable = 0;
    std::string error;
};

enum class TrendVerdict { observed, not_observed, not_applicable };
std::string_view to_string(TrendVerdict v) noexcept;

struct SweepTable {
    /// Sorted by overall score, best first; ties keep grid order.
    std::vector<SweepRow> rows;
    /// Whether scores fall as L1/L2 grows (Pearson correlation < 0).
    TrendVerdict length_ratio_trend = TrendVerdict::not_applicable;
    std::optional<double> length_ratio_correlation;
};

struct Report {
    static constexpr int kFormatVersion = 1;
    std::size_t streams_per_generator = 0;
    std::size_t bits_per_stream = 0;
    std::uint64_t base_seed = 0;
    sts::TestParams test_params;
    std::vector<GeneratorReport> generators;
    std::optional<SweepTable> sweep;
};

/// Streams are generated and tested as independent work items (OpenMP when
/// exec is parallel); tallies are assembled afterwards in a fixed order, so
/// the result does not depend on scheduling.
Report run_experiment(const ExperimentConfig& config);

/// Wall-clock rate and RSS high-water delta for generating n_bits (>= 1e6).
ResourceMeasurement measure_resources(const GeneratorSpec& generator, std::size_t n_bits,
                                      std::uint64_t seed = 0);

struct SweepGrid {
    std::vector<double> gravity;
    std::vector<double> length_ratio; // L1 / L2, with L2 held at the base value
    std::vector<double> damping;

    bool empty() const noexcept { return gravity.empty() && length_ratio.empty() && damping.empty(); }
};

/// Parses "g=9.81,5;ratio=0.5,1,2;d=1,0.9999" (any subset, any order).
/// Throws std::invalid_argument on malformed input.
SweepGrid parse_grid(std::string_view spec);

/// One-variable-at-a-time sweep around the first pendulum generator of
/// `base`, each grid point a reduced experiment over that generator alone.
SweepTable sweep(const ExperimentConfig& base, const SweepGrid& grid);

} // namespace pendrng::harness
