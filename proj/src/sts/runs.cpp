#include "common.hpp"

#include <cmath>
#include <numbers>

namespace pendrng::sts {

TestResult runs_test(const Bitstream& bits, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::runs, n, 100, 2, opts);
    const double nd = static_cast<double>(n);
    const double ones = static_cast<double>(bits.count_ones());
    const double zeros = nd - ones;
    const double pi = ones / nd;
    // pi*(1-pi) from integer counts, so the statistic is exactly symmetric
    // under bit complement.
    const double pq = ones * zeros / (nd * nd);

    std::size_t changes = 0;
    const auto eps = bits.bits();
    for (std::size_t i = 0; i + 1 < n; ++i)
        changes += eps[i] != eps[i + 1];
    const double v_obs = static_cast<double>(changes + 1);

    TestResult r;
    if (std::abs(ones - zeros) / (2.0 * nd) >= 2.0 / std::sqrt(nd)) {
        r = detail::make_result(TestId::runs, {0.0}, opts.alpha);
        r.statistics = {{"pi", pi}, {"V_n", v_obs}, {"prerequisite_failed", 1.0}};
        return r;
    }
    const double p = erfc(std::abs(v_obs - 2.0 * nd * pq) / (2.0 * std::sqrt(2.0 * nd) * pq));
    r = detail::make_result(TestId::runs, {p}, opts.alpha);
    r.statistics = {{"pi", pi}, {"V_n", v_obs}, {"prerequisite_failed", 0.0}};
    return r;
}

LongestRunRegime longest_run_regime(std::size_t n)
{
    if (n < 6272)
        return {8, 1, {0.21484375, 0.3671875, 0.23046875, 0.1875}};
    if (n < 750000)
        return {128, 4, {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847}};
    return {10000, 10, {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727}};
}

TestResult longest_run_test(const Bitstream& bits, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::longest_run, n, 128, 8, opts);
    const auto regime = longest_run_regime(n);
    const auto runs = kernels::block_longest_runs(bits.bits(), regime.block_length, opts.exec);
    const std::size_t categories = regime.probabilities.size();

    std::vector<std::size_t> nu(categories, 0);
    for (auto run : runs) {
        std::size_t c = run <= regime.min_category ? 0 : run - regime.min_category;
        nu[std::min(c, categories - 1)]++;
    }
    const double blocks = static_cast<double>(runs.size());
    double chi = 0.0;
    for (std::size_t i = 0; i < categories; ++i) {
        const double expected = blocks * regime.probabilities[i];
        const double d = static_cast<double>(nu[i]) - expected;
        chi += d * d / expected;
    }
    const double dof = static_cast<double>(categories - 1);
    auto r = detail::make_result(TestId::longest_run, {igamc(dof / 2.0, chi / 2.0)}, opts.alpha);
    r.statistics = {{"chi_squared", chi}, {"M", static_cast<double>(regime.block_length)},
                    {"N", blocks}};
    for (std::size_t i = 0; i < categories; ++i)
        r.statistics.emplace_back("nu_" + std::to_string(i), static_cast<double>(nu[i]));
    return r;
}

} // namespace pendrng::sts
