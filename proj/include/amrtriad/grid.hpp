#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amrtriad/errors.hpp"
#include "amrtriad/model.hpp"

namespace amrtriad {

// Uniform time grid shared by every integrator. Uniformity is load-bearing:
// the fractional solver's convolution weights assume a constant step.
struct TimeGrid {
    double t0 = 0.0;
    double t_end = 50.0;
    double dt = 0.01;
    std::int64_t n_steps = 5000;  // round((t_end - t0) / dt)

    TimeGrid() = default;
    TimeGrid(double t0_, double t_end_, double dt_);

    double time(std::int64_t i) const { return t0 + static_cast<double>(i) * dt; }
    std::int64_t n_points() const { return n_steps + 1; }

    bool operator==(const TimeGrid&) const = default;
};

enum class Engine { Ode, Sde, Fde };

const char* engine_name(Engine e);

// One solution path R(t) on a uniform grid, with enough provenance to
// reproduce it: the parameter snapshot, the engine that produced it, the seed
// (stochastic paths only), and a counter of boundary interventions
// (step-halving retries for the deterministic engine, projections for the
// stochastic one).
struct Trajectory {
    std::vector<double> times;
    std::vector<double> values;
    ModelParams params;
    Engine engine = Engine::Ode;
    std::optional<std::uint64_t> seed;
    std::int64_t clamp_events = 0;

    double terminal() const { return values.back(); }
};

}  // namespace amrtriad
