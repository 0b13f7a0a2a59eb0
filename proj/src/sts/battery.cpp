#include "common.hpp"

namespace pendrng::sts {

namespace {

TestResult run_one(TestId id, const Bitstream& bits, const TestParams& params)
{
    const TestOptions opts = params.options();
    switch (id) {
    case TestId::frequency: return frequency_test(bits, opts);
    case TestId::block_frequency: return block_frequency_test(bits, params.block_frequency_m, opts);
    case TestId::cumulative_sums: return cumulative_sums_test(bits, opts);
    case TestId::runs: return runs_test(bits, opts);
    case TestId::longest_run: return longest_run_test(bits, opts);
    case TestId::rank: return rank_test(bits, opts);
    case TestId::dft: return dft_test(bits, opts);
    case TestId::universal: return universal_test(bits, params.universal, opts);
    case TestId::approximate_entropy: return approximate_entropy_test(bits, params.apen_m, opts);
    case TestId::serial: return serial_test(bits, params.serial_m, opts);
    }
    throw std::logic_error("unknown test id");
}

TestResult skipped(TestId id, std::string reason)
{
    TestResult r;
    r.id = id;
    r.skipped = true;
    r.skip_reason = std::move(reason);
    return r;
}

} // namespace

std::vector<TestResult> run_battery(const Bitstream& bits, const TestParams& params)
{
    if (!(params.alpha > 0.0 && params.alpha < 1.0))
        throw InvalidParameterError("run_battery: alpha must lie in (0, 1)");
    std::vector<TestResult> results;
    results.reserve(kBatteryOrder.size());
    for (TestId id : kBatteryOrder) {
        try {
            results.push_back(run_one(id, bits, params));
        } catch (const InsufficientLengthError& e) {
            results.push_back(skipped(id, e.what()));
        } catch (const InvalidParameterError& e) {
            results.push_back(skipped(id, e.what()));
        }
    }
    return results;
}

} // namespace pendrng::sts
