#include "common.hpp"

#include <cmath>
#include <numbers>

namespace pendrng::sts {

std::string_view test_name(TestId id) noexcept
{
    switch (id) {
    case TestId::frequency: return "Frequency";
    case TestId::block_frequency: return "Block Frequency";
    case TestId::cumulative_sums: return "Cumulative Sums";
    case TestId::runs: return "Runs";
    case TestId::longest_run: return "Longest Run of Ones";
    case TestId::rank: return "Rank";
    case TestId::dft: return "Discrete Fourier Transform";
    case TestId::universal: return "Universal Statistical";
    case TestId::approximate_entropy: return "Approximate Entropy";
    case TestId::serial: return "Serial";
    }
    return "?";
}

std::string_view test_key(TestId id) noexcept
{
    switch (id) {
    case TestId::frequency: return "frequency";
    case TestId::block_frequency: return "block_frequency";
    case TestId::cumulative_sums: return "cumulative_sums";
    case TestId::runs: return "runs";
    case TestId::longest_run: return "longest_run";
    case TestId::rank: return "rank";
    case TestId::dft: return "dft";
    case TestId::universal: return "universal";
    case TestId::approximate_entropy: return "approximate_entropy";
    case TestId::serial: return "serial";
    }
    return "?";
}

double TestResult::min_p() const noexcept
{
    if (p_values.empty())
        return 0.0;
    return *std::min_element(p_values.begin(), p_values.end());
}

std::optional<double> TestResult::statistic(std::string_view key) const noexcept
{
    for (const auto& [k, v] : statistics)
        if (k == key)
            return v;
    return std::nullopt;
}

InsufficientLengthError::InsufficientLengthError(TestId id, std::size_t required, std::size_t actual)
    : std::runtime_error(std::string(test_name(id)) + " test needs n >= " + std::to_string(required) +
                         ", got n = " + std::to_string(actual)),
      required_(required), actual_(actual)
{
}

TestResult frequency_test(const Bitstream& bits, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::frequency, n, 100, 1, opts);
    const double ones = static_cast<double>(bits.count_ones());
    const double sum = 2.0 * ones - static_cast<double>(n);
    const double s_obs = std::abs(sum) / std::sqrt(static_cast<double>(n));
    auto r = detail::make_result(TestId::frequency, {erfc(s_obs / std::numbers::sqrt2)}, opts.alpha);
    r.statistics = {{"S_n", sum}, {"S_obs", s_obs}};
    return r;
}

TestResult block_frequency_test(const Bitstream& bits, std::size_t block_length,
                                const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::block_frequency, n, 100, 1, opts);
    if (block_length == 0 || block_length > n)
        throw InvalidParameterError("Block Frequency: block length must lie in [1, n]");
    if (opts.enforce_min_length && (block_length < 20 || block_length > n / 100))
        throw InvalidParameterError("Block Frequency: block length M = " +
                                    std::to_string(block_length) + " outside 20 <= M <= n/100 = " +
                                    std::to_string(n / 100));

    const auto counts = kernels::block_ones(bits.bits(), block_length, opts.exec);
    const double m = static_cast<double>(block_length);
    double chi = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) / m - 0.5;
        chi += d * d;
    }
    chi *= 4.0 * m;
    const double blocks = static_cast<double>(counts.size());
    auto r = detail::make_result(TestId::block_frequency, {igamc(blocks / 2.0, chi / 2.0)},
                                 opts.alpha);
    r.statistics = {{"chi_squared", chi}, {"N", blocks}, {"M", m}};
    return r;
}

double cusum_p_value(std::size_t n, std::size_t z)
{
    if (n == 0 || z == 0)
        throw InvalidParameterError("cusum_p_value: need n >= 1 and z >= 1");
    const double nd = static_cast<double>(n);
    const double zd = static_cast<double>(z);
    const double sqrt_n = std::sqrt(nd);
    const double ratio = nd / zd;

    double sum1 = 0.0;
    const auto lo1 = static_cast<long long>(std::floor((-ratio + 1.0) / 4.0));
    const auto hi = static_cast<long long>(std::floor((ratio - 1.0) / 4.0));
    for (long long k = lo1; k <= hi; ++k) {
        const double kd = static_cast<double>(k);
        sum1 += normal_cdf((4.0 * kd + 1.0) * zd / sqrt_n) - normal_cdf((4.0 * kd - 1.0) * zd / sqrt_n);
    }
    double sum2 = 0.0;
    const auto lo2 = static_cast<long long>(std::floor((-ratio - 3.0) / 4.0));
    for (long long k = lo2; k <= hi; ++k) {
        const double kd = static_cast<double>(k);
        sum2 += normal_cdf((4.0 * kd + 3.0) * zd / sqrt_n) - normal_cdf((4.0 * kd + 1.0) * zd / sqrt_n);
    }
    return detail::clamp_p(1.0 - sum1 + sum2);
}

namespace {

std::size_t max_excursion(const Bitstream& bits, CusumMode mode) noexcept
{
    const std::size_t n = bits.size();
    long long s = 0;
    long long z = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t idx = mode == CusumMode::forward ? i : n - 1 - i;
        s += bits[idx] ? 1 : -1;
        z = std::max(z, s < 0 ? -s : s);
    }
    return static_cast<std::size_t>(z);
}

} // namespace

TestResult cumulative_sums_test(const Bitstream& bits, CusumMode mode, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::cumulative_sums, n, 100, 1, opts);
    const std::size_t z = max_excursion(bits, mode);
    auto r = detail::make_result(TestId::cumulative_sums, {cusum_p_value(n, z)}, opts.alpha);
    r.statistics = {{mode == CusumMode::forward ? "z_forward" : "z_backward", static_cast<double>(z)}};
    return r;
}

TestResult cumulative_sums_test(const Bitstream& bits, const TestOptions& opts)
{
    auto fwd = cumulative_sums_test(bits, CusumMode::forward, opts);
    auto bwd = cumulative_sums_test(bits, CusumMode::backward, opts);
    auto r = detail::make_result(TestId::cumulative_sums, {fwd.p_values[0], bwd.p_values[0]},
                                 opts.alpha);
    r.statistics = {fwd.statistics[0], bwd.statistics[0]};
    return r;
}

} // namespace pendrng::sts
