#pragma once

#include "amrtriad/grid.hpp"
#include "amrtriad/model.hpp"

namespace amrtriad {

// One classical 4th-order Runge-Kutta step of the drift. Local error O(dt^5).
// No boundary checking here; integrate_ode owns the invariance guard.
double step_rk4(const ModelParams& p, double R, double dt);

// Fixed-step RK4 integration of dR/dt = drift(R) on [t0, t0 + n_steps*dt].
//
// Invariance guard: a step whose stage states or result leave (0, N) is
// rejected and replaced by two half steps (recursively, at most 20 halvings
// deep), so every emitted value stays inside (0, N) and still lands exactly
// on the output grid. Each rejection increments Trajectory::clamp_events.
//
// Throws DomainError when R0 is outside (0, N) and StepSizeError (with a
// suggested dt) when 20 halvings are not enough.
Trajectory integrate_ode(const ModelParams& p, double R0, const TimeGrid& grid);

}  // namespace amrtriad
