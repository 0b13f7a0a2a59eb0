#include "common.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace pendrng::sts {

namespace {

__extension__ typedef __int128 i128;

constexpr unsigned kMaxPatternLength = 24;

unsigned floor_log2(std::size_t n) noexcept
{
    return n == 0 ? 0 : static_cast<unsigned>(std::bit_width(n) - 1);
}

// 2^k * sum(count^2), with the k <= 0 convention psi^2 = 0, i.e. n^2.
i128 weighted_square_sum(const Bitstream& bits, int k, kernels::Exec exec)
{
    const auto n = static_cast<i128>(bits.size());
    if (k <= 0)
        return n * n;
    const auto counts = kernels::wrapped_pattern_counts(bits.bits(), static_cast<unsigned>(k), exec);
    i128 sum = 0;
    for (auto c : counts)
        sum += static_cast<i128>(c) * c;
    return sum << k;
}

// Sum of (c/n) ln(c/n) over non-zero counts, accumulated in sorted order so
// the result does not depend on pattern labelling.
double phi(const Bitstream& bits, unsigned m, kernels::Exec exec)
{
    auto counts = kernels::wrapped_pattern_counts(bits.bits(), m, exec);
    std::sort(counts.begin(), counts.end());
    const double n = static_cast<double>(bits.size());
    double sum = 0.0;
    for (auto c : counts) {
        if (c == 0)
            continue;
        const double p = static_cast<double>(c) / n;
        sum += p * std::log(p);
    }
    return sum;
}

} // namespace

double serial_psi_squared(const Bitstream& bits, int m, kernels::Exec exec)
{
    if (m <= 0 || bits.empty())
        return 0.0;
    const double n = static_cast<double>(bits.size());
    return static_cast<double>(weighted_square_sum(bits, m, exec)) / n - n;
}

TestResult approximate_entropy_test(const Bitstream& bits, unsigned m, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::approximate_entropy, n, 100, 1, opts);
    if (m < 1 || m + 1 > kMaxPatternLength)
        throw InvalidParameterError("Approximate Entropy: m must lie in [1, 23]");
    if (opts.enforce_min_length && static_cast<int>(m) >= static_cast<int>(floor_log2(n)) - 5)
        throw InvalidParameterError("Approximate Entropy: m = " + std::to_string(m) +
                                    " violates m < floor(log2 n) - 5");

    const double phi_m = phi(bits, m, opts.exec);
    const double phi_m1 = phi(bits, m + 1, opts.exec);
    const double apen = phi_m - phi_m1;
    const double nd = static_cast<double>(n);
    const double chi = std::max(0.0, 2.0 * nd * (std::numbers::ln2 - apen));
    const double p = igamc(std::ldexp(1.0, static_cast<int>(m) - 1), chi / 2.0);

    auto r = detail::make_result(TestId::approximate_entropy, {p}, opts.alpha);
    r.statistics = {{"phi_m", phi_m}, {"phi_m_plus_1", phi_m1}, {"ApEn", apen}, {"chi_squared", chi}};
    return r;
}

TestResult serial_test(const Bitstream& bits, unsigned m, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::serial, n, 100, 1, opts);
    if (m < 2 || m > kMaxPatternLength)
        throw InvalidParameterError("Serial: m must lie in [2, 24]");
    if (opts.enforce_min_length &&
        !(m > 2 && static_cast<int>(m) < static_cast<int>(floor_log2(n)) - 2))
        throw InvalidParameterError("Serial: m = " + std::to_string(m) +
                                    " violates 2 < m < floor(log2 n) - 2");

    const int mi = static_cast<int>(m);
    const i128 t0 = weighted_square_sum(bits, mi, opts.exec);
    const i128 t1 = weighted_square_sum(bits, mi - 1, opts.exec);
    const i128 t2 = weighted_square_sum(bits, mi - 2, opts.exec);
    const double nd = static_cast<double>(n);
    // The -n terms of psi^2 cancel in both differences, keeping them exact.
    const double del1 = std::max(0.0, static_cast<double>(t0 - t1) / nd);
    const double del2 = std::max(0.0, static_cast<double>(t0 - 2 * t1 + t2) / nd);
    const double p1 = igamc(std::ldexp(1.0, mi - 2), del1 / 2.0);
    const double p2 = igamc(std::ldexp(1.0, mi - 3), del2 / 2.0);

    auto r = detail::make_result(TestId::serial, {p1, p2}, opts.alpha);
    r.statistics = {{"psi2_m", static_cast<double>(t0) / nd - nd},
                    {"psi2_m_minus_1", mi - 1 > 0 ? static_cast<double>(t1) / nd - nd : 0.0},
                    {"psi2_m_minus_2", mi - 2 > 0 ? static_cast<double>(t2) / nd - nd : 0.0},
                    {"del1", del1},
                    {"del2", del2}};
    return r;
}

} // namespace pendrng::sts
