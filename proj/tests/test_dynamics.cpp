#include "pendrng/dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace pendrng;

namespace {

constexpr double kPi = std::numbers::pi;

// Accelerations from the Lagrangian mass-matrix form, solved by Cramer's rule.
// Shares no code with the closed-form implementation.
AngularAcceleration lagrangian_accel(const PendulumParams& p, const PendulumState& s)
{
    const double d = s.theta1 - s.theta2;
    const double a11 = (p.m1 + p.m2) * p.l1 * p.l1;
    const double a12 = p.m2 * p.l1 * p.l2 * std::cos(d);
    const double a22 = p.m2 * p.l2 * p.l2;
    const double b1 = -p.m2 * p.l1 * p.l2 * s.omega2 * s.omega2 * std::sin(d) -
                      (p.m1 + p.m2) * p.g * p.l1 * std::sin(s.theta1);
    const double b2 = p.m2 * p.l1 * p.l2 * s.omega1 * s.omega1 * std::sin(d) -
                      p.m2 * p.g * p.l2 * std::sin(s.theta2);
    const double det = a11 * a22 - a12 * a12;
    return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det};
}

PendulumState euler(const PendulumParams& p, PendulumState s, double h, long steps)
{
    for (long i = 0; i < steps; ++i) {
        const auto a = lagrangian_accel(p, s);
        s = {s.theta1 + h * s.omega1, s.theta2 + h * s.omega2, s.omega1 + h * a.alpha1,
             s.omega2 + h * a.alpha2};
    }
    return s;
}

double separation(const PendulumState& a, const PendulumState& b)
{
    return std::hypot(a.theta1 - b.theta1, a.theta2 - b.theta2);
}

} // namespace

TEST(Dynamics, LowerEquilibriumIsFixed)
{
    const PendulumParams p;
    const PendulumState s{};
    const auto a = angular_accelerations(p, s);
    EXPECT_EQ(a.alpha1, 0.0);
    EXPECT_EQ(a.alpha2, 0.0);
    EXPECT_EQ(advance(p, s, 1e-3, 1000), s);
}

TEST(Dynamics, UpperEquilibriumHasZeroAcceleration)
{
    const PendulumParams p;
    const auto a = angular_accelerations(p, {kPi, kPi, 0, 0});
    EXPECT_NEAR(a.alpha1, 0.0, 1e-12);
    EXPECT_NEAR(a.alpha2, 0.0, 1e-12);
}

TEST(Dynamics, MatchesLagrangianFormAtRandomStates)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-10.0, 10.0), omega(-20.0, 20.0), mass(0.5, 300.0),
        len(0.1, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const PendulumParams p{mass(rng), mass(rng), len(rng), len(rng), 9.81, 1.0};
        const PendulumState s{angle(rng), angle(rng), omega(rng), omega(rng)};
        const auto got = angular_accelerations(p, s);
        const auto want = lagrangian_accel(p, s);
        EXPECT_NEAR(got.alpha1, want.alpha1, 1e-9 * (1.0 + std::abs(want.alpha1)));
        EXPECT_NEAR(got.alpha2, want.alpha2, 1e-9 * (1.0 + std::abs(want.alpha2)));
    }
}

TEST(Dynamics, SinglePendulumLimit)
{
    // m2 -> 0: the inner link obeys theta'' = -(g/L1) sin(theta).
    const PendulumParams p{1.0, 0.0, 2.0, 1.0, 9.81, 1.0};
    for (double th : {0.1, 0.7, 2.0, -1.3}) {
        const auto a = angular_accelerations(p, {th, 0.3, 0.5, -0.2});
        EXPECT_NEAR(a.alpha1, -(9.81 / 2.0) * std::sin(th), 1e-12);
    }
}

TEST(Dynamics, Rk4AgreesWithFineEuler)
{
    const PendulumParams p{1.0, 2.0, 1.0, 0.5, 9.81, 1.0};
    const PendulumState s0{1.0, -0.5, 0.3, 0.1};
    // 0.01 s: 10 RK4 steps against 10^4 Euler steps of the independent form.
    const auto rk = advance(p, s0, 1e-3, 10);
    const auto eu = euler(p, s0, 1e-6, 10'000);
    EXPECT_NEAR(rk.theta1, eu.theta1, 1e-6);
    EXPECT_NEAR(rk.theta2, eu.theta2, 1e-6);
    EXPECT_NEAR(rk.omega1, eu.omega1, 1e-6);
    EXPECT_NEAR(rk.omega2, eu.omega2, 1e-6);
}

TEST(Dynamics, EnergyValues)
{
    const PendulumParams p;
    EXPECT_NEAR(potential_energy(p, {0, 0, 0, 0}), -29.43, 1e-12);
    EXPECT_NEAR(potential_energy(p, {kPi, kPi, 0, 0}), 29.43, 1e-12);
    EXPECT_NEAR(kinetic_energy(p, {0, 0, 0, std::sqrt(2.0)}), 1.0, 1e-12);
    // Both links aligned and rotating together: KE = 0.5 * (m1 + 4 m2) w^2 for L = 1.
    EXPECT_NEAR(kinetic_energy(p, {0.4, 0.4, 1.0, 1.0}), 2.5, 1e-12);
}

TEST(Dynamics, Positions)
{
    const PendulumParams p{1, 1, 2.0, 1.0, 9.81, 1};
    const auto down = positions(p, {0, 0, 0, 0});
    EXPECT_NEAR(down.inner.x, 0.0, 1e-15);
    EXPECT_NEAR(down.inner.y, 2.0, 1e-15);
    EXPECT_NEAR(down.outer.y, 3.0, 1e-15);
    const auto side = positions(p, {kPi / 2, -kPi / 2, 0, 0});
    EXPECT_NEAR(side.inner.x, 2.0, 1e-15);
    EXPECT_NEAR(side.outer.x, 1.0, 1e-15);
}

TEST(Dynamics, EnergyDriftIsSmall)
{
    const PendulumParams p;
    const PendulumState s0{2.0, 2.0, 0, 0};
    const double e0 = total_energy(p, s0);
    const auto s = advance(p, s0, 1e-3, 100'000);
    EXPECT_LT(std::abs(total_energy(p, s) - e0) / std::abs(e0), 1e-6);
}

TEST(Dynamics, DampingDissipatesEnergy)
{
    PendulumParams p;
    p.damping = 0.999;
    PendulumState s{2.0, 2.0, 0, 0};
    double prev = total_energy(p, s);
    for (int block = 0; block < 50; ++block) {
        s = advance(p, s, 1e-3, 200);
        const double e = total_energy(p, s);
        EXPECT_LE(e, prev + 1e-9);
        prev = e;
    }
    EXPECT_LT(prev, total_energy(p, {2.0, 2.0, 0, 0}) - 1.0);
}

TEST(Dynamics, ApplyDampingScalesVelocities)
{
    PendulumParams p;
    p.damping = 0.5;
    const auto s = apply_damping(p, {1, 2, 4, -8});
    EXPECT_EQ(s, (PendulumState{1, 2, 2, -4}));
}

TEST(Dynamics, DenominatorBoundedBelow)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-50.0, 50.0);
    const PendulumParams p{3.0, 250.0, 1, 1, 9.81, 1};
    for (int i = 0; i < 10000; ++i) {
        const double d = coupling_denominator(p, {angle(rng), angle(rng), 0, 0});
        EXPECT_GE(d, 2.0 * p.m1 - 1e-9);
    }
}

TEST(Dynamics, SensitiveToInitialConditions)
{
    const PendulumParams p;
    PendulumState a{2.0, 2.0, 0, 0};
    PendulumState b = a;
    b.theta1 += 1e-12;
    bool diverged = false;
    for (int i = 0; i < 200'000 && !diverged; ++i) {
        a = step(p, a, 1e-3);
        b = step(p, b, 1e-3);
        diverged = separation(a, b) > 0.1;
    }
    EXPECT_TRUE(diverged);
}

TEST(Dynamics, Deterministic)
{
    const PendulumParams p{17.5, 230.25, 1, 1, 9.81, 0.9999};
    const PendulumState s{5.1, 0.7, 0, 0};
    EXPECT_EQ(advance(p, s, 1e-3, 5000), advance(p, s, 1e-3, 5000));
}

TEST(Dynamics, AnglesAreNotWrapped)
{
    const PendulumParams p;
    const auto s = advance(p, {kPi - 1e-3, 0, 20.0, 0}, 1e-3, 2000);
    EXPECT_GT(std::abs(s.theta1), 2.0 * kPi);
}

TEST(Dynamics, NonFiniteStateThrows)
{
    const PendulumParams p;
    EXPECT_THROW(step(p, {std::nan(""), 0, 0, 0}, 1e-3), NonFiniteStateError);
    EXPECT_THROW(step(p, {0, 0, 1e300, 1e300}, 1e-3), NonFiniteStateError);
    EXPECT_THROW(step(p, {0, 0, 0, 0}, -1e-3), std::invalid_argument);
}

TEST(Dynamics, ParamsValidation)
{
    EXPECT_NO_THROW((PendulumParams{}.validate()));
    EXPECT_THROW((PendulumParams{0, 1, 1, 1, 9.81, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((PendulumParams{1, 1, 0, 1, 9.81, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((PendulumParams{1, 1, 1, 1, 9.81, 1.5}.validate()), std::invalid_argument);
    EXPECT_THROW((PendulumParams{1, 1, 1, 1, 9.81, 0}.validate()), std::invalid_argument);
}
