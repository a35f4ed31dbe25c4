#include "amrtriad/ode.hpp"

#include <cmath>

namespace amrtriad {

namespace {

constexpr int kMaxHalvings = 20;

// Returns false when a stage state or the result leaves (0, N).
bool try_step(const ModelParams& p, double R, double h, double& out) {
    const double N = p.N;
    auto inside = [N](double x) { return x > 0.0 && x < N; };
    const double k1 = drift(R, p);
    const double s2 = R + 0.5 * h * k1;
    if (!inside(s2)) return false;
    const double k2 = drift(s2, p);
    const double s3 = R + 0.5 * h * k2;
    if (!inside(s3)) return false;
    const double k3 = drift(s3, p);
    const double s4 = R + h * k3;
    if (!inside(s4)) return false;
    const double k4 = drift(s4, p);
    out = R + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    return inside(out);
}

double advance(const ModelParams& p, double R, double h, int depth, std::int64_t& retries) {
    double out;
    if (try_step(p, R, h, out)) return out;
    if (depth >= kMaxHalvings)
        throw StepSizeError("integrate_ode: state exits (0, N) even after 20 step halvings; "
                            "suggested dt is half the last attempted step",
                            0.5 * h);
    ++retries;
    const double mid = advance(p, R, 0.5 * h, depth + 1, retries);
    return advance(p, mid, 0.5 * h, depth + 1, retries);
}

}  // namespace

double step_rk4(const ModelParams& p, double R, double dt) {
    const double k1 = drift(R, p);
    const double k2 = drift(R + 0.5 * dt * k1, p);
    const double k3 = drift(R + 0.5 * dt * k2, p);
    const double k4 = drift(R + dt * k3, p);
    return R + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate_ode(const ModelParams& p, double R0, const TimeGrid& grid) {
    p.validate();
    if (!(R0 > 0.0 && R0 < p.N))
        throw DomainError("integrate_ode: R0 must lie in the open interval (0, N)");

    Trajectory traj;
    traj.params = p;
    traj.engine = Engine::Ode;
    traj.times.reserve(grid.n_points());
    traj.values.reserve(grid.n_points());

    double R = R0;
    traj.times.push_back(grid.time(0));
    traj.values.push_back(R);
    for (std::int64_t i = 0; i < grid.n_steps; ++i) {
        R = advance(p, R, grid.dt, 0, traj.clamp_events);
        traj.times.push_back(grid.time(i + 1));
        traj.values.push_back(R);
    }
    return traj;
}

}  // namespace amrtriad
