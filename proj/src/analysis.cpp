#include "amrtriad/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "amrtriad/errors.hpp"

namespace amrtriad {

double Histogram::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < bin_edges.size(); ++i)
        m += bin_mass[i] * 0.5 * (bin_edges[i] + bin_edges[i + 1]);
    return m;
}

Outcome classify_outcome(const Trajectory& traj, const ModelParams& p) {
    (void)p;
    if (traj.values.empty()) throw DomainError("classify_outcome: empty trajectory");

    Outcome out;
    out.terminal_value = traj.values.back();

    const std::size_t n = traj.values.size();
    const std::size_t window = std::max<std::size_t>(1, n / 10);
    const std::size_t start = n - window;

    double wmax = 0.0, wsum = 0.0;
    for (std::size_t i = start; i < n; ++i) {
        wmax = std::max(wmax, traj.values[i]);
        wsum += traj.values[i];
    }
    const double wmean = wsum / static_cast<double>(window);

    const bool positive = std::all_of(traj.values.begin(), traj.values.end(),
                                      [](double v) { return v > 0.0; });
    if (positive) out.log_slope = log_slope(traj);

    if (wmax < extinction_floor) {
        out.kind = Outcome::Kind::Extinct;
        return out;
    }
    if (wmean > extinction_floor) {
        const bool banded = std::all_of(traj.values.begin() + static_cast<std::ptrdiff_t>(start),
                                        traj.values.end(), [wmean](double v) {
                                            return std::abs(v - wmean) <= 0.02 * wmean;
                                        });
        if (banded) {
            out.kind = Outcome::Kind::Persistent;
            out.attractor_estimate = wmean;
            return out;
        }
    }
    out.kind = Outcome::Kind::Indeterminate;
    return out;
}

double log_slope(const Trajectory& traj) {
    if (traj.values.size() < 2) throw DomainError("log_slope: need at least two points");
    for (double v : traj.values)
        if (!(v > 0.0)) throw DomainError("log_slope: values must be positive");

    const std::size_t n = traj.values.size();
    const std::size_t start = n / 2;
    // Centered least squares: slope = sum dx*dy / sum dx^2.
    double tbar = 0.0, ybar = 0.0;
    const std::size_t m = n - start;
    for (std::size_t i = start; i < n; ++i) {
        tbar += traj.times[i];
        ybar += std::log(traj.values[i]);
    }
    tbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);
    double num = 0.0, den = 0.0;
    for (std::size_t i = start; i < n; ++i) {
        const double dx = traj.times[i] - tbar;
        num += dx * (std::log(traj.values[i]) - ybar);
        den += dx * dx;
    }
    if (den == 0.0) throw DomainError("log_slope: degenerate time window");
    return num / den;
}

std::int64_t level_crossings(const Trajectory& traj, double level) {
    if (!(level > 0.0 && level < traj.params.N))
        throw DomainError("level_crossings: level must lie in (0, N)");
    std::int64_t count = 0;
    int last_side = 0;
    for (double v : traj.values) {
        const int side = (v > level) ? 1 : (v < level ? -1 : 0);
        if (side != 0) {
            if (last_side != 0 && side != last_side) ++count;
            last_side = side;
        }
    }
    return count;
}

Histogram stationary_histogram(const EnsembleResult& ens, double burn_in, int n_bins) {
    if (!(burn_in >= 0.0 && burn_in < 1.0))
        throw DomainError("stationary_histogram: burn_in must lie in [0, 1)");
    if (n_bins < 2) throw DomainError("stationary_histogram: n_bins must be >= 2");
    if (ens.paths.empty()) throw Error("stationary_histogram: empty ensemble");

    const double N = ens.paths.front().params.N;
    Histogram h;
    h.burn_in_fraction = burn_in;
    h.bin_edges.resize(static_cast<std::size_t>(n_bins) + 1);
    const double width = N / static_cast<double>(n_bins);
    for (int i = 0; i <= n_bins; ++i) h.bin_edges[static_cast<std::size_t>(i)] = width * i;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_bins), 0);
    std::int64_t total = 0;
    for (const auto& path : ens.paths) {
        const double t_first = path.times.front();
        const double t_cut = t_first + burn_in * (path.times.back() - t_first);
        for (std::size_t i = 0; i < path.values.size(); ++i) {
            if (path.times[i] < t_cut) continue;
            const double v = path.values[i];
            if (!(v > 0.0 && v <= N)) continue;  // boundary policy keeps values inside
            auto bin = static_cast<std::size_t>(
                std::min<double>(std::floor(v / width), n_bins - 1));
            ++counts[bin];
            ++total;
        }
    }
    if (total == 0) throw Error("stationary_histogram: no samples survive the burn-in");

    h.n_samples = total;
    h.bin_mass.resize(static_cast<std::size_t>(n_bins));
    for (int i = 0; i < n_bins; ++i)
        h.bin_mass[static_cast<std::size_t>(i)] =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) / static_cast<double>(total);
    return h;
}

}  // namespace amrtriad
