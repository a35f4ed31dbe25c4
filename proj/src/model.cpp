#include "amrtriad/model.hpp"

#include <cmath>
#include <string>

namespace amrtriad {

namespace {

// Raw saturating contact term; callers handle domain policy.
inline double g_raw(double R, double epsilon) noexcept {
    return R / (1.0 + epsilon * R);
}

inline Regime regime_of(double k0) noexcept {
    if (k0 > 1.0) return Regime::Persistence;
    if (k0 < 1.0) return Regime::Extinction;
    return Regime::Indeterminate;
}

}  // namespace

void ModelParams::validate() const {
    auto bad = [](const std::string& msg) { throw ParameterError("ModelParams: " + msg); };
    if (!(std::isfinite(N) && N > 0.0)) bad("N must be finite and > 0");
    if (!(std::isfinite(mu) && mu >= 0.0)) bad("mu must be finite and >= 0");
    if (!(std::isfinite(beta) && beta > 0.0)) bad("beta must be finite and > 0");
    if (!(std::isfinite(gamma) && gamma >= 0.0)) bad("gamma must be finite and >= 0");
    if (!(std::isfinite(epsilon) && epsilon >= 0.0)) bad("epsilon must be finite and >= 0");
    if (!(std::isfinite(sigma) && sigma >= 0.0)) bad("sigma must be finite and >= 0");
    if (!(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0)) bad("alpha must lie in (0, 1]");
    if (!(gamma + mu > 0.0)) bad("gamma + mu must be > 0");
}

double functional_response(double R, double epsilon) {
    if (!(R >= 0.0)) throw DomainError("functional_response: R must be >= 0");
    if (!(epsilon >= 0.0)) throw DomainError("functional_response: epsilon must be >= 0");
    return g_raw(R, epsilon);
}

double drift(double R, const ModelParams& p) noexcept {
    return p.beta * g_raw(R, p.epsilon) * (p.N - R) - (p.gamma + p.mu) * R;
}

double diffusion(double R, const ModelParams& p) noexcept {
    return p.sigma * g_raw(R, p.epsilon) * (p.N - R);
}

double lyapunov_sv(double R, const ModelParams& p) {
    if (!(R > 0.0 && R < p.N))
        throw DomainError("lyapunov_sv: R must lie in the open interval (0, N)");
    const double phi = (p.N - R) / (1.0 + p.epsilon * R);
    return p.beta * phi - (p.gamma + p.mu) - 0.5 * p.sigma * p.sigma * phi * phi;
}

ThresholdReport compute_thresholds(const ModelParams& p) {
    p.validate();
    ThresholdReport r;
    const double loss = p.gamma + p.mu;
    r.k0_d = p.beta * p.N / loss;
    r.k0_f = r.k0_d;
    r.k0_s = r.k0_d - p.sigma * p.sigma * p.N * p.N / (2.0 * loss);
    r.regime_d = regime_of(r.k0_d);
    r.regime_f = regime_of(r.k0_f);
    r.regime_s = regime_of(r.k0_s);
    if (r.k0_d > 1.0) r.xi_d = equilibrium_deterministic(p);
    if (r.k0_s > 1.0) r.xi_s = equilibrium_stochastic(p);
    return r;
}

double equilibrium_deterministic(const ModelParams& p) {
    p.validate();
    const double loss = p.gamma + p.mu;
    if (!(p.beta * p.N / loss > 1.0))
        throw NoEquilibriumError(
            "equilibrium_deterministic: no interior equilibrium (threshold <= 1)");
    return (p.beta * p.N - loss) / (p.beta + p.epsilon * loss);
}

double equilibrium_stochastic(const ModelParams& p) {
    p.validate();
    const double loss = p.gamma + p.mu;
    const double k0_s = p.beta * p.N / loss - p.sigma * p.sigma * p.N * p.N / (2.0 * loss);
    if (!(k0_s > 1.0))
        throw NoEquilibriumError(
            "equilibrium_stochastic: no persistence level (stochastic threshold <= 1)");
    const double disc = p.beta * p.beta - 2.0 * p.sigma * p.sigma * loss;
    if (!(disc >= 0.0))
        throw ParameterError("equilibrium_stochastic: negative discriminant");

    // Bisection on (delta, N - delta). k0_s > 1 forces L > 0 at the left end
    // and L(N-) = -(gamma+mu) < 0, so the bracket is guaranteed.
    const double delta = 1e-12 * p.N;
    double lo = delta;
    double hi = p.N - delta;
    double f_lo = lyapunov_sv(lo, p);
    if (!(f_lo > 0.0))
        throw Error("equilibrium_stochastic: left bracket lost (degenerate parameters)");
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * std::max(std::abs(lo), 1.0); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (lyapunov_sv(mid, p) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double root = 0.5 * (lo + hi);

    // Cancellation-free form of eta = (beta - sqrt(disc)) / sigma^2; this
    // version is exact in the sigma -> 0 limit as well.
    const double eta = 2.0 * loss / (p.beta + std::sqrt(disc));
    const double xi_closed = (p.N - eta) / (1.0 + p.epsilon * eta);
    if (std::abs(root - xi_closed) > 1e-9 * std::max(std::abs(xi_closed), 1.0))
        throw Error("equilibrium_stochastic: bisection and closed-form constructions disagree");
    return root;
}

}  // namespace amrtriad
