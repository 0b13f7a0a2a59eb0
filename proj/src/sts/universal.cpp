#include "common.hpp"

#include <cmath>
#include <numbers>

namespace pendrng::sts {

namespace {

// Moments of log2 of the distance between repeated L-bit blocks, L = 1..16,
// as tabulated by the standard (index 0 unused).
constexpr std::array<UniversalConstants, 17> kUniversalTable{{
    {0.0, 0.0},
    {0.7326495, 0.690},
    {1.5374383, 1.338},
    {2.4016068, 1.901},
    {3.3112247, 2.358},
    {4.2534266, 2.705},
    {5.2177052, 2.954},
    {6.1962507, 3.125},
    {7.1836656, 3.238},
    {8.1764248, 3.311},
    {9.1723243, 3.356},
    {10.170032, 3.384},
    {11.168765, 3.401},
    {12.168070, 3.410},
    {13.167693, 3.416},
    {14.167488, 3.419},
    {15.167379, 3.421},
}};

// Smallest n for which L = 6, 7, ... 16 is recommended.
constexpr std::array<std::size_t, 11> kLengthThresholds{
    387840, 904960, 2068480, 4654080, 10342400, 22753280,
    49643520, 107560960, 231669760, 496435200, 1059061760,
};

std::uint32_t block_value(std::span<const std::uint8_t> eps, std::size_t block, unsigned L) noexcept
{
    std::uint32_t v = 0;
    const std::uint8_t* p = eps.data() + block * L;
    for (unsigned j = 0; j < L; ++j)
        v = (v << 1) | p[j];
    return v;
}

} // namespace

UniversalConstants universal_constants(unsigned block_length)
{
    if (block_length < 1 || block_length > 16)
        throw InvalidParameterError("universal: L must lie in [1, 16]");
    return kUniversalTable[block_length];
}

std::optional<UniversalParams> default_universal_params(std::size_t n) noexcept
{
    std::optional<UniversalParams> out;
    for (std::size_t i = 0; i < kLengthThresholds.size(); ++i) {
        if (n >= kLengthThresholds[i]) {
            const auto L = static_cast<unsigned>(6 + i);
            out = UniversalParams{L, std::size_t{10} << L};
        }
    }
    return out;
}

TestResult universal_test(const Bitstream& bits, std::optional<UniversalParams> params,
                          const TestOptions& opts)
{
    const std::size_t n = bits.size();
    if (opts.enforce_min_length && n < kLengthThresholds[0])
        throw InsufficientLengthError(TestId::universal, kLengthThresholds[0], n);

    if (!params)
        params = default_universal_params(n);
    if (!params) {
        // Forced run below the tabulated range: largest L leaving roughly
        // 1000 * 2^L test blocks after 10 * 2^L initialization blocks.
        unsigned L = 1;
        for (unsigned cand = 2; cand <= 5; ++cand)
            if (n >= std::size_t{1010} * (std::size_t{1} << cand) * cand)
                L = cand;
        params = UniversalParams{L, std::size_t{10} << L};
    }

    const unsigned L = params->block_length;
    const std::size_t Q = params->init_blocks;
    if (L < 1 || L > 16)
        throw InvalidParameterError("universal: L must lie in [1, 16]");
    if (opts.enforce_min_length && (L < 6 || Q < (std::size_t{10} << L)))
        throw InvalidParameterError("universal: need 6 <= L <= 16 and Q >= 10 * 2^L");
    const std::size_t total_blocks = n / L;
    if (Q < 1 || total_blocks <= Q)
        throw InsufficientLengthError(TestId::universal, (Q + 1) * L, n);
    const std::size_t K = total_blocks - Q;

    std::vector<std::size_t> last_seen(std::size_t{1} << L, 0);
    const auto eps = bits.bits();
    for (std::size_t i = 1; i <= Q; ++i)
        last_seen[block_value(eps, i - 1, L)] = i;
    double sum = 0.0;
    for (std::size_t i = Q + 1; i <= Q + K; ++i) {
        const auto v = block_value(eps, i - 1, L);
        sum += std::log2(static_cast<double>(i - last_seen[v]));
        last_seen[v] = i;
    }

    const double kd = static_cast<double>(K);
    const double Ld = static_cast<double>(L);
    const auto constants = kUniversalTable[L];
    const double c = 0.7 - 0.8 / Ld + (4.0 + 32.0 / Ld) * std::pow(kd, -3.0 / Ld) / 15.0;
    const double sigma = c * std::sqrt(constants.variance / kd);
    const double fn = sum / kd;
    const double p = erfc(std::abs(fn - constants.expected_value) / (std::numbers::sqrt2 * sigma));

    auto r = detail::make_result(TestId::universal, {p}, opts.alpha);
    r.statistics = {{"f_n", fn},
                    {"expected_value", constants.expected_value},
                    {"sigma", sigma},
                    {"L", Ld},
                    {"Q", static_cast<double>(Q)},
                    {"K", kd}};
    return r;
}

} // namespace pendrng::sts
