#pragma once

#include <functional>

#include "amrtriad/grid.hpp"
#include "amrtriad/model.hpp"

namespace amrtriad {

// An initial-value problem for the order-alpha Caputo derivative,
// D^alpha R(t) = f(t, R(t)), R(0) = R0, on a uniform grid. By default f is
// the model drift; `rhs` may override it (used, for instance, to validate the
// solver against the linear problem with a known closed form).
struct CaputoProblem {
    ModelParams params;
    double R0 = 1.0;
    double alpha = 1.0;
    TimeGrid grid;
    std::function<double(double t, double R)> rhs;  // empty => model drift
};

CaputoProblem make_model_problem(const ModelParams& p, double R0, const TimeGrid& grid);

// Adams-Bashforth-Moulton predictor-corrector with full memory. The
// predictor uses fractional-rectangle weights
//     b_{j,n+1} = (h^alpha / alpha) * ((n+1-j)^alpha - (n-j)^alpha),
// the corrector the standard fractional-trapezoid weights. Work is O(n^2) in
// the number of steps (no history truncation), so grids beyond 1e7 points are
// rejected with GridError. At alpha = 1 the weights collapse to the classical
// one-step Euler predictor / trapezoid corrector.
//
// Throws DomainError for alpha outside (0, 1] or R0 outside (0, N).
Trajectory integrate_caputo(const CaputoProblem& prob);

}  // namespace amrtriad
