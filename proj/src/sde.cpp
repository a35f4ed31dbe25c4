#include "amrtriad/sde.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace amrtriad {

Trajectory simulate_path(const ModelParams& p, double R0, const TimeGrid& grid,
                         const NoisePlan& noise) {
    p.validate();
    if (!(R0 > 0.0 && R0 < p.N))
        throw DomainError("simulate_path: R0 must lie in the open interval (0, N)");

    GaussianStream z(noise);
    Trajectory traj;
    traj.params = p;
    traj.engine = Engine::Sde;
    traj.seed = noise.seed;
    traj.times.reserve(grid.n_points());
    traj.values.reserve(grid.n_points());

    const double delta = 1e-9 * p.N;
    const double sqrt_dt = std::sqrt(grid.dt);
    double R = R0;
    traj.times.push_back(grid.time(0));
    traj.values.push_back(R);
    for (std::int64_t i = 0; i < grid.n_steps; ++i) {
        const double b = drift(R, p);
        if (!(std::abs(b) * grid.dt <= p.N))
            throw StepSizeError("simulate_path: |drift|*dt exceeds N; shrink dt",
                                0.5 * grid.dt);
        double next = R + b * grid.dt + diffusion(R, p) * sqrt_dt * z.next();
        if (!(next > 0.0 && next < p.N)) {
            next = std::clamp(next, delta, p.N - delta);
            ++traj.clamp_events;
        }
        R = next;
        traj.times.push_back(grid.time(i + 1));
        traj.values.push_back(R);
    }
    return traj;
}

EnsembleResult simulate_ensemble(const ModelParams& p, double R0, const TimeGrid& grid,
                                 std::int64_t n_paths, std::uint64_t base_seed,
                                 int n_threads) {
    if (n_paths < 1) throw ParameterError("simulate_ensemble: n_paths must be >= 1");

    EnsembleResult ens;
    ens.n_paths = n_paths;
    ens.base_seed = base_seed;
    ens.paths.resize(static_cast<std::size_t>(n_paths));

    if (n_threads <= 0) n_threads = static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp<int>(n_threads, 1, static_cast<int>(std::min<std::int64_t>(n_paths, 64)));

    // Paths are independent; compute in blocks, then reduce sequentially so
    // the statistics never depend on thread scheduling.
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::string error_path;
    auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            try {
                NoisePlan plan;
                plan.seed = base_seed + static_cast<std::uint64_t>(i);
                ens.paths[static_cast<std::size_t>(i)] = simulate_path(p, R0, grid, plan);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                    error_path = std::to_string(i);
                }
                return;
            }
        }
    };
    if (n_threads == 1) {
        worker(0, n_paths);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (n_paths + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const std::int64_t begin = t * chunk;
            const std::int64_t end = std::min<std::int64_t>(begin + chunk, n_paths);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const Error& e) {
            throw Error("simulate_ensemble: path " + error_path + ": " + e.what());
        }
    }

    // One pass of Welford updates per path, in index order.
    const std::size_t len = static_cast<std::size_t>(grid.n_points());
    ens.per_time_mean.assign(len, 0.0);
    ens.per_time_variance.assign(len, 0.0);
    std::vector<double> m2(len, 0.0);
    for (std::int64_t i = 0; i < n_paths; ++i) {
        const auto& v = ens.paths[static_cast<std::size_t>(i)].values;
        const double n = static_cast<double>(i + 1);
        for (std::size_t k = 0; k < len; ++k) {
            const double d = v[k] - ens.per_time_mean[k];
            ens.per_time_mean[k] += d / n;
            m2[k] += d * (v[k] - ens.per_time_mean[k]);
        }
    }
    if (n_paths > 1)
        for (std::size_t k = 0; k < len; ++k)
            ens.per_time_variance[k] = m2[k] / static_cast<double>(n_paths - 1);
    return ens;
}

}  // namespace amrtriad
