#include "pendrng/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace pendrng::harness {

namespace {

// Value of a "Key:   1234 kB" line of /proc/self/status, in bytes.
std::optional<std::size_t> proc_status_bytes(std::string_view key)
{
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.compare(0, key.size(), key) != 0 || line.size() <= key.size() || line[key.size()] != ':')
            continue;
        std::istringstream fields(line.substr(key.size() + 1));
        std::size_t kb = 0;
        if (fields >> kb)
            return kb * 1024;
    }
    return std::nullopt;
}

// Writing 5 to clear_refs resets VmHWM to the current RSS (Linux >= 4.0).
bool reset_peak_rss()
{
    std::ofstream out("/proc/self/clear_refs");
    out << "5";
    out.flush();
    return static_cast<bool>(out);
}

// Repeat cheap generators until this much wall time has accumulated, and
// keep the fastest run.
constexpr double kMinTotalSeconds = 0.25;
constexpr int kMaxRepeats = 50;

} // namespace

ResourceMeasurement measure_resources(const GeneratorSpec& generator, std::size_t n_bits,
                                      std::uint64_t seed)
{
    if (n_bits < 1'000'000)
        throw std::invalid_argument("measure_resources: n_bits must be >= 1e6");
    if (!generator.make_stream)
        throw std::invalid_argument("measure_resources: generator has no stream factory");

    using clock = std::chrono::steady_clock;
    ResourceMeasurement m;
    m.n_bits = n_bits;

    // Return cached free pages so earlier streams do not hide this one.
#if defined(__GLIBC__)
    malloc_trim(0);
#endif
    const auto rss_before = proc_status_bytes("VmRSS");
    reset_peak_rss();
    const auto hwm_before = proc_status_bytes("VmHWM");

    double best = 0.0, total = 0.0;
    for (int rep = 0; rep < kMaxRepeats; ++rep) {
        const auto t0 = clock::now();
        {
            const Bitstream bits = generator.make_stream(seed, n_bits);
            if (bits.size() != n_bits)
                throw std::runtime_error("measure_resources: generator returned a short stream");
        }
        const double dt = std::chrono::duration<double>(clock::now() - t0).count();
        best = rep == 0 ? dt : std::min(best, dt);
        total += dt;
        if (total >= kMinTotalSeconds)
            break;
    }

    const auto hwm_after = proc_status_bytes("VmHWM");
    const auto baseline = rss_before ? rss_before : hwm_before;
    if (baseline && hwm_after && *hwm_after > *baseline)
        m.peak_extra_bytes = *hwm_after - *baseline;

    m.seconds = best;
    m.bits_per_second = best > 0.0 ? static_cast<double>(n_bits) / best
                                   : static_cast<double>(n_bits) / 1e-9;
    return m;
}

} // namespace pendrng::harness
