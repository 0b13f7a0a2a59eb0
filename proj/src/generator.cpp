#include "pendrng/generator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pendrng {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint32_t kMaxLoops = 1'000'000;

} // namespace

std::string_view to_string(GeneratorMode mode) noexcept
{
    return mode == GeneratorMode::paper_faithful ? "paper" : "stream";
}

std::optional<GeneratorMode> parse_generator_mode(std::string_view name) noexcept
{
    if (name == "paper" || name == "paper_faithful")
        return GeneratorMode::paper_faithful;
    if (name == "stream" || name == "streaming")
        return GeneratorMode::streaming;
    return std::nullopt;
}

void GeneratorConfig::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string("GeneratorConfig: ") + what);
    };
    require(std::isfinite(mass_range.lo) && std::isfinite(mass_range.hi) && mass_range.lo > 0.0 &&
                mass_range.lo <= mass_range.hi,
            "mass_range must be a non-empty interval with lower bound > 0");
    require(loop_range.lo >= 1 && loop_range.lo <= loop_range.hi && loop_range.hi <= kMaxLoops,
            "loop_range must satisfy 1 <= lo <= hi <= 1e6");
    require(std::isfinite(h) && h > 0.0, "h must be > 0");
    require(stir_steps >= 1, "stir_steps must be >= 1");
    PendulumParams{mass_range.lo, mass_range.lo, l1, l2, g, damping}.validate();
}

SeedExpansion seed_expand(std::uint64_t seed, const GeneratorConfig& config)
{
    config.validate();
    SplitMix64 mixer(seed);
    const double span = config.mass_range.hi - config.mass_range.lo;

    SeedExpansion out{};
    out.params.m1 = config.mass_range.lo + mixer.next_unit() * span;
    out.params.m2 = config.mass_range.lo + mixer.next_unit() * span;
    out.params.l1 = config.l1;
    out.params.l2 = config.l2;
    out.params.g = config.g;
    out.params.damping = config.damping;
    out.state.theta1 = mixer.next_unit() * kTwoPi;
    out.state.theta2 = mixer.next_unit() * kTwoPi;
    out.mixer_state = mixer.state();
    return out;
}

double normalized_angle(double theta) noexcept
{
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    double f = r / kTwoPi;
    // r just below 2pi can round up to exactly 1.
    return f < 1.0 ? f : 0.0;
}

std::uint32_t extract_bits(const PendulumState& state) noexcept
{
    auto field = [](double theta) -> std::uint32_t {
        const double scaled = std::floor(normalized_angle(theta) * 0x1.0p48);
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(scaled) & 0xFFFFu);
    };
    return (field(state.theta1) << 16) | field(state.theta2);
}

PendulumRng::PendulumRng(std::uint64_t seed, GeneratorConfig config)
    : config_(config), mixer_(0)
{
    SeedExpansion e = seed_expand(seed, config_);
    params_ = e.params;
    state_ = e.state;
    mixer_ = SplitMix64(e.mixer_state);
    state_ = advance(params_, state_, config_.h, config_.loop_range.lo);
}

std::uint32_t PendulumRng::draw_loop_count() noexcept
{
    const std::uint64_t width = std::uint64_t{config_.loop_range.hi} - config_.loop_range.lo + 1;
    return config_.loop_range.lo + static_cast<std::uint32_t>(mixer_.next() % width);
}

std::uint32_t PendulumRng::next_word()
{
    const std::uint32_t steps = config_.mode == GeneratorMode::paper_faithful
                                    ? draw_loop_count()
                                    : config_.stir_steps;
    state_ = advance(params_, state_, config_.h, steps);
    return extract_bits(state_);
}

} // namespace pendrng
