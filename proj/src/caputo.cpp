#include "amrtriad/caputo.hpp"

#include <cmath>
#include <vector>

namespace amrtriad {

CaputoProblem make_model_problem(const ModelParams& p, double R0, const TimeGrid& grid) {
    CaputoProblem prob;
    prob.params = p;
    prob.R0 = R0;
    prob.alpha = p.alpha;
    prob.grid = grid;
    return prob;
}

Trajectory integrate_caputo(const CaputoProblem& prob) {
    const ModelParams& p = prob.params;
    p.validate();
    const double a = prob.alpha;
    if (!(a > 0.0 && a <= 1.0))
        throw DomainError("integrate_caputo: alpha must lie in (0, 1]");
    if (!(prob.R0 > 0.0 && prob.R0 < p.N))
        throw DomainError("integrate_caputo: R0 must lie in the open interval (0, N)");
    const std::int64_t n = prob.grid.n_steps;
    if (prob.grid.n_points() > 10'000'000)
        throw GridError("integrate_caputo: grid exceeds 1e7 points; the full-memory "
                        "scheme would need too much time and memory");

    auto f = prob.rhs ? prob.rhs
                      : std::function<double(double, double)>(
                            [&p](double, double R) { return drift(R, p); });

    const double h = prob.grid.dt;
    const double cp = std::pow(h, a) / std::tgamma(a + 1.0);  // = (h^a/a)/Gamma(a)
    const double cc = std::pow(h, a) / std::tgamma(a + 2.0);

    // pow_a[m] = m^a, pow_a1[m] = m^(a+1); both needed up to lag n+1.
    const std::size_t len = static_cast<std::size_t>(n) + 2;
    std::vector<double> pow_a(len), pow_a1(len);
    for (std::size_t m = 0; m < len; ++m) {
        const double md = static_cast<double>(m);
        pow_a[m] = std::pow(md, a);
        pow_a1[m] = std::pow(md, a + 1.0);
    }
    // Predictor weight at lag m: (m+1)^a - m^a.
    // Corrector inner weight at lag m: (m+2)^(a+1) + m^(a+1) - 2(m+1)^(a+1).
    std::vector<double> wp(static_cast<std::size_t>(n) + 1), wc(static_cast<std::size_t>(n) + 1);
    for (std::int64_t m = 0; m <= n; ++m) {
        const std::size_t mu = static_cast<std::size_t>(m);
        wp[mu] = pow_a[mu + 1] - pow_a[mu];
        wc[mu] = (mu + 2 < len ? pow_a1[mu + 2]
                               : std::pow(static_cast<double>(m) + 2.0, a + 1.0)) +
                 pow_a1[mu] - 2.0 * pow_a1[mu + 1];
    }

    Trajectory traj;
    traj.params = p;
    traj.engine = Engine::Fde;
    traj.times.resize(static_cast<std::size_t>(n) + 1);
    traj.values.resize(static_cast<std::size_t>(n) + 1);
    std::vector<double> fv(static_cast<std::size_t>(n) + 1);

    traj.times[0] = prob.grid.time(0);
    traj.values[0] = prob.R0;
    fv[0] = f(traj.times[0], prob.R0);

    for (std::int64_t k = 0; k < n; ++k) {
        // History convolutions, fused: predictor and corrector sums share the
        // pass over f_1..f_k; f_0 takes the special corrector weight
        // a_{0,k+1} = k^(a+1) - (k - a)(k+1)^a.
        double sp = 0.0, sc = 0.0;
        const double* fdata = fv.data();
        for (std::int64_t j = 1; j <= k; ++j) {
            const std::size_t lag = static_cast<std::size_t>(k - j);
            sp += wp[lag] * fdata[j];
            sc += wc[lag] * fdata[j];
        }
        const std::size_t ku = static_cast<std::size_t>(k);
        sp += wp[ku] * fv[0];
        sc += (pow_a1[ku] - (static_cast<double>(k) - a) * pow_a[ku + 1]) * fv[0];

        const double t_next = prob.grid.time(k + 1);
        const double predicted = prob.R0 + cp * sp;
        const double corrected = prob.R0 + cc * (f(t_next, predicted) + sc);
        traj.times[ku + 1] = t_next;
        traj.values[ku + 1] = corrected;
        fv[ku + 1] = f(t_next, corrected);
    }
    return traj;
}

}  // namespace amrtriad
