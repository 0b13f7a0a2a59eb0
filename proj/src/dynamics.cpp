#include "pendrng/dynamics.hpp"

#include <cmath>
#include <string>

namespace pendrng {

void PendulumParams::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string("PendulumParams: ") + what);
    };
    require(std::isfinite(m1) && m1 > 0.0, "m1 must be > 0");
    require(std::isfinite(m2) && m2 >= 0.0, "m2 must be >= 0");
    require(std::isfinite(l1) && l1 > 0.0, "l1 must be > 0");
    require(std::isfinite(l2) && l2 > 0.0, "l2 must be > 0");
    require(std::isfinite(g) && g > 0.0, "g must be > 0");
    require(damping > 0.0 && damping <= 1.0, "damping must lie in (0, 1]");
}

bool PendulumState::is_finite() const noexcept
{
    return std::isfinite(theta1) && std::isfinite(theta2) && std::isfinite(omega1) &&
           std::isfinite(omega2);
}

double coupling_denominator(const PendulumParams& p, const PendulumState& s) noexcept
{
    return 2.0 * p.m1 + p.m2 - p.m2 * std::cos(2.0 * s.theta1 - 2.0 * s.theta2);
}

AngularAcceleration angular_accelerations(const PendulumParams& p, const PendulumState& s) noexcept
{
    const double delta = s.theta1 - s.theta2;
    const double sin_delta = std::sin(delta);
    const double cos_delta = std::cos(delta);
    const double den = coupling_denominator(p, s);
    const double w1sq = s.omega1 * s.omega1;
    const double w2sq = s.omega2 * s.omega2;

    const double num1 = -p.g * (2.0 * p.m1 + p.m2) * std::sin(s.theta1) -
                        p.m2 * p.g * std::sin(s.theta1 - 2.0 * s.theta2) -
                        2.0 * sin_delta * p.m2 * (w2sq * p.l2 + w1sq * p.l1 * cos_delta);
    const double num2 = 2.0 * sin_delta *
                        (w1sq * p.l1 * (p.m1 + p.m2) + p.g * (p.m1 + p.m2) * std::cos(s.theta1) +
                         w2sq * p.l2 * p.m2 * cos_delta);

    return {num1 / (p.l1 * den), num2 / (p.l2 * den)};
}

namespace {

struct Derivative {
    double dtheta1, dtheta2, domega1, domega2;
};

Derivative derivative(const PendulumParams& p, const PendulumState& s) noexcept
{
    const auto a = angular_accelerations(p, s);
    return {s.omega1, s.omega2, a.alpha1, a.alpha2};
}

PendulumState offset(const PendulumState& s, const Derivative& d, double h) noexcept
{
    return {s.theta1 + h * d.dtheta1, s.theta2 + h * d.dtheta2, s.omega1 + h * d.domega1,
            s.omega2 + h * d.domega2};
}

} // namespace

PendulumState integrate_rk4(const PendulumParams& p, const PendulumState& s, double h) noexcept
{
    const Derivative k1 = derivative(p, s);
    const Derivative k2 = derivative(p, offset(s, k1, 0.5 * h));
    const Derivative k3 = derivative(p, offset(s, k2, 0.5 * h));
    const Derivative k4 = derivative(p, offset(s, k3, h));
    const double w = h / 6.0;
    return {
        s.theta1 + w * (k1.dtheta1 + 2.0 * k2.dtheta1 + 2.0 * k3.dtheta1 + k4.dtheta1),
        s.theta2 + w * (k1.dtheta2 + 2.0 * k2.dtheta2 + 2.0 * k3.dtheta2 + k4.dtheta2),
        s.omega1 + w * (k1.domega1 + 2.0 * k2.domega1 + 2.0 * k3.domega1 + k4.domega1),
        s.omega2 + w * (k1.domega2 + 2.0 * k2.domega2 + 2.0 * k3.domega2 + k4.domega2),
    };
}

PendulumState apply_damping(const PendulumParams& p, const PendulumState& s) noexcept
{
    if (p.damping == 1.0)
        return s;
    return {s.theta1, s.theta2, s.omega1 * p.damping, s.omega2 * p.damping};
}

PendulumState step(const PendulumParams& p, const PendulumState& s, double h)
{
    if (!(h >= 0.0))
        throw std::invalid_argument("step: h must be >= 0");
    PendulumState next = apply_damping(p, integrate_rk4(p, s, h));
    if (!next.is_finite())
        throw NonFiniteStateError("pendulum integration produced a non-finite state");
    return next;
}

PendulumState advance(const PendulumParams& p, PendulumState s, double h, std::uint64_t steps)
{
    for (std::uint64_t i = 0; i < steps; ++i)
        s = step(p, s, h);
    return s;
}

BobPositions positions(const PendulumParams& p, const PendulumState& s) noexcept
{
    const Point inner{p.l1 * std::sin(s.theta1), p.l1 * std::cos(s.theta1)};
    const Point outer{inner.x + p.l2 * std::sin(s.theta2), inner.y + p.l2 * std::cos(s.theta2)};
    return {inner, outer};
}

double kinetic_energy(const PendulumParams& p, const PendulumState& s) noexcept
{
    // Time derivatives of positions().
    const double vx1 = p.l1 * std::cos(s.theta1) * s.omega1;
    const double vy1 = -p.l1 * std::sin(s.theta1) * s.omega1;
    const double vx2 = vx1 + p.l2 * std::cos(s.theta2) * s.omega2;
    const double vy2 = vy1 - p.l2 * std::sin(s.theta2) * s.omega2;
    return 0.5 * p.m1 * (vx1 * vx1 + vy1 * vy1) + 0.5 * p.m2 * (vx2 * vx2 + vy2 * vy2);
}

double potential_energy(const PendulumParams& p, const PendulumState& s) noexcept
{
    return -p.g * ((p.m1 + p.m2) * p.l1 * std::cos(s.theta1) + p.m2 * p.l2 * std::cos(s.theta2));
}

double total_energy(const PendulumParams& p, const PendulumState& s) noexcept
{
    return kinetic_energy(p, s) + potential_energy(p, s);
}

} // namespace pendrng
