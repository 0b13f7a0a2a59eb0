#include "pendrng/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pendrng::sts {

double erfc(double x)
{
    return std::erfc(x);
}

double igamc(double a, double x)
{
    if (!(a > 0.0) || !(x >= 0.0))
        throw std::domain_error("igamc: requires a > 0 and x >= 0");
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    return boost::math::gamma_q(a, x);
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

} // namespace pendrng::sts
