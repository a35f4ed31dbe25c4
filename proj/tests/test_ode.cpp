#include <cmath>

#include "amrtriad/model.hpp"
#include "amrtriad/ode.hpp"
#include "doctest.h"

using namespace amrtriad;

namespace {

ModelParams extinction_params() {
    ModelParams p;
    p.gamma = 2.0;
    return p;
}

}  // namespace

TEST_CASE("time grid: construction, rounding, and rejection") {
    const TimeGrid g(0.0, 50.0, 0.01);
    CHECK(g.n_steps == 5000);
    CHECK(g.n_points() == 5001);
    CHECK(g.time(0) == 0.0);
    CHECK(g.time(5000) == doctest::Approx(50.0).epsilon(1e-15));

    // n_steps comes from rounding, so a dt that does not divide the span
    // exactly still yields a usable grid.
    CHECK(TimeGrid(0.0, 1.0, 0.3).n_steps == 3);

    CHECK_THROWS_AS(TimeGrid(0.0, 0.0, 0.1), GridError);
    CHECK_THROWS_AS(TimeGrid(1.0, 0.0, 0.1), GridError);
    CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 0.0), GridError);
    CHECK_THROWS_AS(TimeGrid(0.0, 1.0, -0.1), GridError);
    CHECK_THROWS_AS(TimeGrid(0.0, 0.1, 1e9), GridError);  // rounds to zero steps
}

TEST_CASE("integrator output lies exactly on the grid and inside (0, N)") {
    const ModelParams p = extinction_params();
    const TimeGrid grid(0.0, 10.0, 0.01);
    const Trajectory traj = integrate_ode(p, p.N - 1.0, grid);

    REQUIRE(traj.values.size() == static_cast<std::size_t>(grid.n_points()));
    CHECK(traj.engine == Engine::Ode);
    CHECK_FALSE(traj.seed.has_value());
    CHECK(traj.clamp_events == 0);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        CHECK(traj.times[i] == grid.time(static_cast<std::int64_t>(i)));
        CHECK(traj.values[i] > 0.0);
        CHECK(traj.values[i] < p.N);
    }
    CHECK(traj.terminal() < traj.values.front());
}

TEST_CASE("initial conditions on or outside the boundary are rejected") {
    const ModelParams p = extinction_params();
    const TimeGrid grid(0.0, 1.0, 0.01);
    CHECK_THROWS_AS(integrate_ode(p, 0.0, grid), DomainError);
    CHECK_THROWS_AS(integrate_ode(p, p.N, grid), DomainError);
    CHECK_THROWS_AS(integrate_ode(p, -3.0, grid), DomainError);
    CHECK_THROWS_AS(integrate_ode(p, 2.0 * p.N, grid), DomainError);
}

TEST_CASE("fourth-order convergence, measured two ways") {
    const ModelParams p = extinction_params();
    const double R0 = p.N - 1.0;

    // Richardson: successively halved steps, order from terminal differences.
    const double r1 = integrate_ode(p, R0, TimeGrid(0.0, 10.0, 0.02)).terminal();
    const double r2 = integrate_ode(p, R0, TimeGrid(0.0, 10.0, 0.01)).terminal();
    const double r3 = integrate_ode(p, R0, TimeGrid(0.0, 10.0, 0.005)).terminal();
    const double order = std::log2(std::fabs(r1 - r2) / std::fabs(r2 - r3));
    CHECK(order >= 3.9);

    // Against a much finer reference: each halving divides the global error
    // by 16, within a factor of two.
    const double ref = integrate_ode(p, R0, TimeGrid(0.0, 10.0, 0.000625)).terminal();
    const double e1 = std::fabs(r1 - ref);
    const double e2 = std::fabs(r2 - ref);
    CHECK(e1 / e2 >= 8.0);
    CHECK(e1 / e2 <= 32.0);
}

TEST_CASE("extinction curve obeys the pathwise logarithmic bound") {
    // d(ln R)/dt <= beta*N - (gamma + mu) pointwise, so
    // ln R(t) <= ln R0 + (beta*N - gamma - mu) * t along the whole curve.
    const ModelParams p = extinction_params();
    const double R0 = p.N - 1.0;
    const TimeGrid grid(0.0, 50.0, 0.01);
    const Trajectory traj = integrate_ode(p, R0, grid);
    const double rate = p.beta * p.N - (p.gamma + p.mu);  // = -1.6
    CHECK(rate == doctest::Approx(-1.6).epsilon(1e-12));
    for (std::size_t i = 0; i < traj.values.size(); ++i) {
        const double bound = std::log(R0) + rate * traj.times[i];
        CHECK(std::log(traj.values[i]) <= bound + 1e-9);
    }
}

TEST_CASE("persistence runs settle on the interior equilibrium") {
    ModelParams p;
    for (double g : {0.0, 0.1, 0.2, 0.3}) {
        p.gamma = g;
        const double xi = equilibrium_deterministic(p);
        const Trajectory traj = integrate_ode(p, 1.0, TimeGrid(0.0, 200.0, 0.01));
        CHECK(std::fabs(traj.terminal() - xi) <= 1e-3 * xi);
    }
}

TEST_CASE("single step agrees with the classical four-stage formula") {
    const ModelParams p = extinction_params();
    const double R = 1e5, dt = 0.01;
    const double k1 = drift(R, p);
    const double k2 = drift(R + 0.5 * dt * k1, p);
    const double k3 = drift(R + 0.5 * dt * k2, p);
    const double k4 = drift(R + dt * k3, p);
    const double expected = R + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    CHECK(step_rk4(p, R, dt) == expected);
}

TEST_CASE("a hopeless step size raises a step-size error with a suggestion") {
    const ModelParams p = extinction_params();
    const TimeGrid grid(0.0, 2e6, 1e6);  // two astronomically large steps
    try {
        integrate_ode(p, p.N - 1.0, grid);
        FAIL("expected StepSizeError");
    } catch (const StepSizeError& e) {
        CHECK(e.suggested_dt > 0.0);
        CHECK(e.suggested_dt < grid.dt);
    }
}

TEST_CASE("boundary-rejected steps are recorded as interventions when recoverable") {
    // dt = 2 overshoots the decaying solution below zero at first, but two
    // half steps recover, so the run succeeds and records its retries.
    const ModelParams p = extinction_params();
    const TimeGrid grid(0.0, 10.0, 2.0);
    const Trajectory traj = integrate_ode(p, p.N - 1.0, grid);
    CHECK(traj.clamp_events > 0);
    for (double v : traj.values) {
        CHECK(v > 0.0);
        CHECK(v < p.N);
    }
}
