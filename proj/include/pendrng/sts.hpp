#pragma once

// The ten-test statistical battery with SP 800-22 semantics.

#include "pendrng/bitstream.hpp"
#include "pendrng/kernels.hpp"
#include "pendrng/special_functions.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pendrng::sts {

enum class TestId {
    frequency,
    block_frequency,
    cumulative_sums,
    runs,
    longest_run,
    rank,
    dft,
    universal,
    approximate_entropy,
    serial,
};

/// Battery order, matching the published comparison table.
inline constexpr std::array<TestId, 10> kBatteryOrder{
    TestId::frequency, TestId::block_frequency, TestId::cumulative_sums,
    TestId::runs,      TestId::longest_run,     TestId::rank,
    TestId::dft,       TestId::universal,       TestId::approximate_entropy,
    TestId::serial,
};

std::string_view test_name(TestId id) noexcept;
/// Stable snake_case key used in reports.
std::string_view test_key(TestId id) noexcept;

struct TestResult {
    TestId id{};
    std::vector<double> p_values;
    bool pass = false;
    bool skipped = false;
    std::string skip_reason;
    std::vector<std::pair<std::string, double>> statistics;

    std::string_view name() const noexcept { return test_name(id); }
    double min_p() const noexcept;
    std::optional<double> statistic(std::string_view key) const noexcept;
};

/// Per-call knobs. With enforce_min_length off, the standard's length and
/// parameter-range recommendations are not checked (worked examples on tiny
/// inputs); structural requirements still are.
struct TestOptions {
    double alpha = 0.01;
    bool enforce_min_length = true;
    kernels::Exec exec = kernels::Exec::parallel;
};

class InsufficientLengthError : public std::runtime_error {
public:
    InsufficientLengthError(TestId id, std::size_t required, std::size_t actual);
    std::size_t required() const noexcept { return required_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t required_;
    std::size_t actual_;
};

class InvalidParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

TestResult frequency_test(const Bitstream& bits, const TestOptions& opts = {});

TestResult block_frequency_test(const Bitstream& bits, std::size_t block_length,
                                const TestOptions& opts = {});

enum class CusumMode { forward, backward };

/// Single direction: one p-value.
TestResult cumulative_sums_test(const Bitstream& bits, CusumMode mode, const TestOptions& opts = {});
/// Both directions: p-values {forward, backward}.
TestResult cumulative_sums_test(const Bitstream& bits, const TestOptions& opts = {});

/// Series p-value for a maximal partial-sum excursion z over n steps.
double cusum_p_value(std::size_t n, std::size_t z);

TestResult runs_test(const Bitstream& bits, const TestOptions& opts = {});

TestResult longest_run_test(const Bitstream& bits, const TestOptions& opts = {});

/// Category probabilities for the longest-run test regime chosen by n.
struct LongestRunRegime {
    std::size_t block_length;
    unsigned min_category; // runs <= this land in category 0
    std::vector<double> probabilities;
};
LongestRunRegime longest_run_regime(std::size_t n);

TestResult rank_test(const Bitstream& bits, const TestOptions& opts = {});

/// Probability that a random rows x cols GF(2) matrix has rank r.
double rank_probability(int r, int rows, int cols);

TestResult dft_test(const Bitstream& bits, const TestOptions& opts = {});

/// Magnitudes |X_k| for k in [0, n/2) of the DFT of 2*eps - 1.
std::vector<double> dft_magnitudes(const Bitstream& bits);

struct UniversalParams {
    unsigned block_length; // L
    std::size_t init_blocks; // Q
};

/// L from the standard's table for n, Q = 10 * 2^L; nullopt when n < 387840.
std::optional<UniversalParams> default_universal_params(std::size_t n) noexcept;

struct UniversalConstants {
    double expected_value;
    double variance;
};

/// Tabulated moments of log2 block distance for L in [1, 16].
UniversalConstants universal_constants(unsigned block_length);

TestResult universal_test(const Bitstream& bits, std::optional<UniversalParams> params = std::nullopt,
                          const TestOptions& opts = {});

TestResult approximate_entropy_test(const Bitstream& bits, unsigned m, const TestOptions& opts = {});

/// p-values {nabla psi^2, nabla^2 psi^2}.
TestResult serial_test(const Bitstream& bits, unsigned m, const TestOptions& opts = {});

/// psi^2_m = (2^m / n) * sum(count^2) - n over wrapped patterns; 0 for m <= 0.
double serial_psi_squared(const Bitstream& bits, int m, kernels::Exec exec = kernels::Exec::parallel);

struct TestParams {
    double alpha = 0.01;
    std::size_t block_frequency_m = 20;
    unsigned serial_m = 13;
    unsigned apen_m = 10;
    /// Explicit Maurer parameters; defaults are chosen from n when empty.
    std::optional<UniversalParams> universal;
    bool enforce_min_length = true;
    kernels::Exec exec = kernels::Exec::parallel;

    TestOptions options() const noexcept { return {alpha, enforce_min_length, exec}; }
};

/// Runs all ten tests in kBatteryOrder. Tests whose preconditions fail are
/// returned with skipped = true and the reason.
std::vector<TestResult> run_battery(const Bitstream& bits, const TestParams& params = {});

} // namespace pendrng::sts
