#include "common.hpp"

#include <cmath>

namespace pendrng::sts {

double rank_probability(int r, int rows, int cols)
{
    if (rows < 1 || cols < 1 || r < 0 || r > std::min(rows, cols))
        throw InvalidParameterError("rank_probability: need 0 <= r <= min(rows, cols)");
    long double product = 1.0L;
    for (int i = 0; i < r; ++i) {
        const long double a = 1.0L - std::ldexp(1.0L, i - rows);
        const long double b = 1.0L - std::ldexp(1.0L, i - cols);
        const long double c = 1.0L - std::ldexp(1.0L, i - r);
        product *= a * b / c;
    }
    const int exponent = r * (rows + cols - r) - rows * cols;
    return static_cast<double>(std::ldexp(product, exponent));
}

TestResult rank_test(const Bitstream& bits, const TestOptions& opts)
{
    constexpr int kSide = 32;
    constexpr std::size_t kBitsPerMatrix = kSide * kSide;
    const std::size_t n = bits.size();
    detail::require_length(TestId::rank, n, 38 * kBitsPerMatrix, kBitsPerMatrix, opts);

    const auto ranks = kernels::gf2_matrix_ranks(bits.bits(), kSide, kSide, opts.exec);
    std::size_t full = 0, minus_one = 0;
    for (int rank : ranks) {
        full += rank == kSide;
        minus_one += rank == kSide - 1;
    }
    const double count = static_cast<double>(ranks.size());
    const double p_full = rank_probability(kSide, kSide, kSide);
    const double p_minus_one = rank_probability(kSide - 1, kSide, kSide);
    const double p_rest = 1.0 - p_full - p_minus_one;
    const double rest = count - static_cast<double>(full) - static_cast<double>(minus_one);

    auto term = [count](double observed, double prob) {
        const double expected = prob * count;
        const double d = observed - expected;
        return d * d / expected;
    };
    const double chi = term(static_cast<double>(full), p_full) +
                       term(static_cast<double>(minus_one), p_minus_one) + term(rest, p_rest);
    auto r = detail::make_result(TestId::rank, {std::exp(-chi / 2.0)}, opts.alpha);
    r.statistics = {{"chi_squared", chi},
                    {"N", count},
                    {"F_32", static_cast<double>(full)},
                    {"F_31", static_cast<double>(minus_one)},
                    {"F_rest", rest}};
    return r;
}

} // namespace pendrng::sts
