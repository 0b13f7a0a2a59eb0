#pragma once

#include <cstdint>
#include <stdexcept>

namespace pendrng {

/// Physical configuration of a planar double pendulum.
///
/// Masses in kg, link lengths in m, gravity in m/s^2. `damping` is the
/// per-step multiplier applied to both angular velocities (1 = frictionless).
struct PendulumParams {
    double m1 = 1.0;
    double m2 = 1.0;
    double l1 = 1.0;
    double l2 = 1.0;
    double g = 9.81;
    double damping = 1.0;

    /// Throws std::invalid_argument unless m1 > 0, m2 >= 0, l1, l2, g > 0
    /// and 0 < damping <= 1.
    void validate() const;

    friend bool operator==(const PendulumParams&, const PendulumParams&) = default;
};

/// Angles are measured from the downward vertical and are never wrapped
/// during integration.
struct PendulumState {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;

    bool is_finite() const noexcept;

    friend bool operator==(const PendulumState&, const PendulumState&) = default;
};

struct AngularAcceleration {
    double alpha1;
    double alpha2;
};

struct Point {
    double x;
    double y;
};

/// Bob coordinates with the pivot at the origin and y measured along gravity.
struct BobPositions {
    Point inner;
    Point outer;
};

class NonFiniteStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed-form accelerations of the coupled equations of motion.
AngularAcceleration angular_accelerations(const PendulumParams& p, const PendulumState& s) noexcept;

/// 2*m1 + m2 - m2*cos(2*theta1 - 2*theta2); bounded below by 2*m1.
double coupling_denominator(const PendulumParams& p, const PendulumState& s) noexcept;

/// One classical fourth-order Runge-Kutta step, no damping.
PendulumState integrate_rk4(const PendulumParams& p, const PendulumState& s, double h) noexcept;

/// omega_i <- damping * omega_i.
PendulumState apply_damping(const PendulumParams& p, const PendulumState& s) noexcept;

/// RK4 followed by the damping substep. Throws NonFiniteStateError if the
/// result contains NaN or Inf, std::invalid_argument if h < 0.
PendulumState step(const PendulumParams& p, const PendulumState& s, double h);

/// `steps` applications of step().
PendulumState advance(const PendulumParams& p, PendulumState s, double h, std::uint64_t steps);

BobPositions positions(const PendulumParams& p, const PendulumState& s) noexcept;

double kinetic_energy(const PendulumParams& p, const PendulumState& s) noexcept;
double potential_energy(const PendulumParams& p, const PendulumState& s) noexcept;
double total_energy(const PendulumParams& p, const PendulumState& s) noexcept;

} // namespace pendrng
