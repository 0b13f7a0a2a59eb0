#pragma once

#include "pendrng/sts.hpp"

#include <algorithm>
#include <initializer_list>

namespace pendrng::sts::detail {

inline double clamp_p(double p) noexcept
{
    return std::clamp(p, 0.0, 1.0);
}

inline TestResult make_result(TestId id, std::initializer_list<double> p_values, double alpha)
{
    TestResult r;
    r.id = id;
    for (double p : p_values)
        r.p_values.push_back(clamp_p(p));
    r.pass = r.min_p() >= alpha;
    return r;
}

/// Throws InsufficientLengthError when the recommended minimum is enforced
/// and not met; `hard_minimum` applies regardless.
inline void require_length(TestId id, std::size_t n, std::size_t recommended,
                           std::size_t hard_minimum, const TestOptions& opts)
{
    const std::size_t required = opts.enforce_min_length ? std::max(recommended, hard_minimum)
                                                         : hard_minimum;
    if (n < required)
        throw InsufficientLengthError(id, required, n);
}

} // namespace pendrng::sts::detail
