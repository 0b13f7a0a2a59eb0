#pragma once

namespace pendrng::sts {

/// Complementary error function.
double erfc(double x);

/// Regularized upper incomplete gamma Q(a, x). Throws std::domain_error
/// when a <= 0 or x < 0.
double igamc(double a, double x);

/// Standard normal CDF.
double normal_cdf(double x);

} // namespace pendrng::sts
