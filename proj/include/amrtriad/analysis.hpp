#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amrtriad/grid.hpp"
#include "amrtriad/sde.hpp"

namespace amrtriad {

// Populations below one individual count as extinct; the continuous model
// approaches zero without ever reaching it, so a floor is needed to call the
// outcome.
inline constexpr double extinction_floor = 1.0;

// Verdict on a finished trajectory. Extinct: the terminal window (last 10% of
// the grid) never reaches extinction_floor. Persistent: the terminal window
// hugs a constant level above the floor to within +-2%; that level is the
// attractor estimate. Anything else is Indeterminate.
struct Outcome {
    enum class Kind { Extinct, Persistent, Indeterminate };
    Kind kind = Kind::Indeterminate;
    double terminal_value = 0.0;
    std::optional<double> attractor_estimate;
    std::optional<double> log_slope;  // absent when the trajectory touches <= 0
};

// Empirical distribution of pooled post-burn-in samples: n_bins equal-width
// bins spanning (0, N]. bin_edges has n_bins + 1 entries; bin_mass sums to 1
// within 1e-12.
struct Histogram {
    std::vector<double> bin_edges;
    std::vector<double> bin_mass;
    std::int64_t n_samples = 0;
    double burn_in_fraction = 0.0;

    // Mass-weighted bin midpoint average.
    double mean() const;
};

Outcome classify_outcome(const Trajectory& traj, const ModelParams& p);

// Least-squares slope of ln R(t) versus t over the last half of the grid; the
// empirical exponential decay (or growth) rate. Throws DomainError when any
// value is nonpositive (classify first; extinct-at-zero paths have no log).
double log_slope(const Trajectory& traj);

// Number of times the path crosses `level`: adjacent grid values strictly on
// opposite sides count one crossing; values exactly on the level carry the
// pending side forward (a touch-and-return is not a crossing). Requires
// level in (0, N).
std::int64_t level_crossings(const Trajectory& traj, double level);

// Pools every post-burn-in sample of every path (path-major, time-minor
// order) into an equal-width histogram over (0, N]. burn_in is the fraction
// of each path's time span discarded from the front. Throws DomainError for
// burn_in outside [0, 1) or n_bins < 2, and Error when no samples survive.
Histogram stationary_histogram(const EnsembleResult& ens, double burn_in, int n_bins);

}  // namespace amrtriad
