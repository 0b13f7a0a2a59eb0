#pragma once

#include "pendrng/bitstream.hpp"
#include "pendrng/dynamics.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace pendrng {

/// splitmix64: the seed-expansion mixer. Each call advances the state by the
/// golden-ratio increment and returns the finalized value.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

enum class GeneratorMode {
    /// Draw a fresh loop count from loop_range for every emitted word.
    paper_faithful,
    /// Advance a fixed stir_steps between emitted words.
    streaming,
};

std::string_view to_string(GeneratorMode mode) noexcept;
std::optional<GeneratorMode> parse_generator_mode(std::string_view name) noexcept;

template <class T>
struct Interval {
    T lo;
    T hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct GeneratorConfig {
    Interval<double> mass_range{1.0, 300.0};
    Interval<std::uint32_t> loop_range{1000, 10000};
    double h = 1e-3;
    double g = 9.81;
    double l1 = 1.0;
    double l2 = 1.0;
    double damping = 1.0;
    GeneratorMode mode = GeneratorMode::streaming;
    std::uint32_t stir_steps = 64;

    /// Throws std::invalid_argument on a malformed configuration.
    void validate() const;

    friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

struct SeedExpansion {
    PendulumParams params;
    PendulumState state;
    std::uint64_t mixer_state;
};

/// Derives initial conditions from a seed. Draw order: m1, m2 uniform over
/// mass_range, then theta1, theta2 uniform over [0, 2pi); both omegas are 0.
SeedExpansion seed_expand(std::uint64_t seed, const GeneratorConfig& config);

/// Keeps bits 33..48 of each normalized angle's binary fraction:
/// (field(theta1) << 16) | field(theta2), field = floor(f * 2^48) mod 2^16.
std::uint32_t extract_bits(const PendulumState& state) noexcept;

/// Angle mapped to [0, 1) via non-negative modulo 2pi.
double normalized_angle(double theta) noexcept;

/// Double-pendulum word generator. Single caller; movable.
class PendulumRng {
public:
    explicit PendulumRng(std::uint64_t seed, GeneratorConfig config = {});

    std::uint32_t next_word();

    const GeneratorConfig& config() const noexcept { return config_; }
    const PendulumParams& params() const noexcept { return params_; }
    const PendulumState& state() const noexcept { return state_; }
    std::uint64_t mixer_state() const noexcept { return mixer_.state(); }

private:
    std::uint32_t draw_loop_count() noexcept;

    GeneratorConfig config_;
    PendulumParams params_;
    PendulumState state_;
    SplitMix64 mixer_;
};

} // namespace pendrng
