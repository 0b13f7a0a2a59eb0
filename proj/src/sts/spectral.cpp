#include "common.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

namespace pendrng::sts {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

} // namespace

std::vector<double> dft_magnitudes(const Bitstream& bits)
{
    const std::size_t n = bits.size();
    if (n == 0)
        return {};
    const int len = static_cast<int>(n);
    std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
    std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n / 2 + 1));
    if (!in || !out)
        throw std::bad_alloc();

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(len, in.get(), out.get(), FFTW_ESTIMATE);
    }
    const auto eps = bits.bits();
    for (std::size_t i = 0; i < n; ++i)
        in.get()[i] = eps[i] ? 1.0 : -1.0;
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    std::vector<double> mags(n / 2);
    for (std::size_t k = 0; k < mags.size(); ++k)
        mags[k] = std::hypot(out.get()[k][0], out.get()[k][1]);
    return mags;
}

TestResult dft_test(const Bitstream& bits, const TestOptions& opts)
{
    const std::size_t n = bits.size();
    detail::require_length(TestId::dft, n, 1000, 2, opts);
    const double nd = static_cast<double>(n);
    const auto mags = dft_magnitudes(bits);

    const double threshold = std::sqrt(std::log(1.0 / 0.05) * nd);
    const double n0 = 0.95 * nd / 2.0;
    std::size_t below = 0;
    for (double m : mags)
        below += m < threshold;
    const double n1 = static_cast<double>(below);
    const double d = (n1 - n0) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
    auto r = detail::make_result(TestId::dft, {erfc(std::abs(d) / std::numbers::sqrt2)}, opts.alpha);
    r.statistics = {{"threshold", threshold}, {"N_0", n0}, {"N_1", n1}, {"d", d}};
    return r;
}

} // namespace pendrng::sts
