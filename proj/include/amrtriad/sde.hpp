#pragma once

#include <cstdint>
#include <vector>

#include "amrtriad/grid.hpp"
#include "amrtriad/model.hpp"
#include "amrtriad/noise.hpp"

namespace amrtriad {

// A seeded ensemble: every path, plus per-time-point mean and (unbiased)
// variance across paths. Path i always uses seed = base_seed + i, and the
// mean/variance reduction runs in path-index order, so the result does not
// depend on how path computation was scheduled.
struct EnsembleResult {
    std::vector<Trajectory> paths;
    std::int64_t n_paths = 0;
    std::uint64_t base_seed = 0;
    std::vector<double> per_time_mean;
    std::vector<double> per_time_variance;
};

// Euler-Maruyama path of
//     dR = drift(R) dt + diffusion(R) dB.
//
// Boundary policy: the exact solution never leaves (0, N) because the noise
// is degenerate at both ends, so a proposed step that exits (0, N) is a
// discretization artifact; it is projected onto [delta, N - delta] with
// delta = 1e-9*N and counted in Trajectory::clamp_events. The counter staying
// at 0 is the expected healthy reading; growth signals dt too coarse for the
// chosen sigma.
//
// Throws DomainError when R0 is outside (0, N) and StepSizeError when
// |drift| * dt exceeds N at any visited state (the step cannot be meaningful
// at that size).
Trajectory simulate_path(const ModelParams& p, double R0, const TimeGrid& grid,
                         const NoisePlan& noise);

// n_paths independent Euler-Maruyama paths with seeds base_seed + i and the
// default NoisePlan rule. Paths may be computed on up to n_threads threads;
// results are identical regardless of scheduling. Path errors are reported
// with the offending path index in the message.
EnsembleResult simulate_ensemble(const ModelParams& p, double R0, const TimeGrid& grid,
                                 std::int64_t n_paths, std::uint64_t base_seed,
                                 int n_threads = 1);

}  // namespace amrtriad
