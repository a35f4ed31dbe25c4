#include "amrtriad/grid.hpp"

#include <cmath>

namespace amrtriad {

TimeGrid::TimeGrid(double t0_, double t_end_, double dt_) : t0(t0_), t_end(t_end_), dt(dt_) {
    if (!(std::isfinite(t0) && std::isfinite(t_end) && t_end > t0))
        throw GridError("TimeGrid: t_end must be finite and > t0");
    if (!(std::isfinite(dt) && dt > 0.0)) throw GridError("TimeGrid: dt must be finite and > 0");
    n_steps = std::llround((t_end - t0) / dt);
    if (n_steps < 1) throw GridError("TimeGrid: fewer than one step; shrink dt");
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Ode: return "ode";
        case Engine::Sde: return "sde";
        case Engine::Fde: return "fde";
    }
    return "?";
}

}  // namespace amrtriad
