#pragma once

#include <optional>

#include "amrtriad/errors.hpp"

// Core of the resistance-reversal population model
//
//     dR/dt = beta * g(R) * (N - R) - (gamma + mu) * R,   g(R) = R / (1 + epsilon*R),
//
// where R counts plasmid-carrying (resistant) bacteria inside a fixed total
// population N; the sensitive subpopulation is recovered as S = N - R. The
// same vector field drives three integrators: a deterministic one, a
// Brownian-perturbed one (the acquisition term picks up multiplicative noise
// sigma * g(R) * (N - R) dB), and a memory-carrying one of fractional order
// alpha. This header owns the parameter set, the vector field and diffusion
// coefficient, the persistence thresholds, and both equilibrium constructions.

namespace amrtriad {

struct ModelParams {
    double N = 1e6;        // total population (count, > 0)
    double mu = 0.1;       // turnover rate (1/day, >= 0)
    double beta = 5e-7;    // conjugation acquisition rate (1/(count*day), > 0)
    double gamma = 0.0;    // plasmid-loss rate (1/day, >= 0)
    double epsilon = 1e-6; // contact saturation rate (1/count, >= 0)
    double sigma = 0.0;    // noise intensity (1/(count*sqrt(day)), >= 0)
    double alpha = 1.0;    // fractional derivative order, in (0, 1]

    // Throws ParameterError when any field is out of range or gamma + mu = 0
    // (every threshold divides by gamma + mu).
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

enum class Regime { Extinction, Persistence, Indeterminate };

// Thresholds for the three treatments plus the equilibria that exist under
// them. k0_d and k0_f share one formula and are bit-identical; k0_s is k0_d
// minus a noise penalty, so k0_s <= k0_d with equality iff sigma = 0.
struct ThresholdReport {
    double k0_d = 0.0;
    double k0_s = 0.0;
    double k0_f = 0.0;
    std::optional<double> xi_d;  // interior equilibrium, present iff k0_d > 1
    std::optional<double> xi_s;  // stochastic persistence level, present iff k0_s > 1
    Regime regime_d = Regime::Indeterminate;
    Regime regime_s = Regime::Indeterminate;
    Regime regime_f = Regime::Indeterminate;
};

// g(R) = R / (1 + epsilon*R). Monotone nondecreasing in R; bounded by
// 1/epsilon when epsilon > 0. Throws DomainError for R < 0.
double functional_response(double R, double epsilon);

// b(R) = beta * g(R) * (N - R) - (gamma + mu) * R. Defined for any finite R
// so integrator stages may probe slightly outside [0, N]; the integrators'
// own guards account for boundary excursions. b(0) = 0 exactly.
double drift(double R, const ModelParams& p) noexcept;

// s(R) = sigma * g(R) * (N - R). Vanishes at both ends of [0, N], making the
// noise degenerate at the boundary. Same domain policy as drift.
double diffusion(double R, const ModelParams& p) noexcept;

// Noise-adjusted per-capita growth rate
//     L(R) = beta*phi(R) - (gamma + mu) - sigma^2 * phi(R)^2 / 2,
//     phi(R) = (N - R) / (1 + epsilon*R).
// Its sign controls whether the stochastic flow pushes log R up or down; the
// unique root in (0, N) (when k0_s > 1) is the stochastic persistence level.
// Limits: L(0+) = (gamma+mu)*(k0_s - 1), L(N-) = -(gamma+mu).
// Throws DomainError for R outside the open interval (0, N).
double lyapunov_sv(double R, const ModelParams& p);

// Populates every threshold, classifies each regime by comparison with 1, and
// fills in the equilibria that exist. Throws ParameterError via validate().
ThresholdReport compute_thresholds(const ModelParams& p);

// xi_d = (beta*N - gamma - mu) / (beta + epsilon*(gamma + mu)), the interior
// rest point of the drift; also the attractor of the fractional flow for any
// order alpha. Requires k0_d > 1 (otherwise NoEquilibriumError; k0_d = 1 is
// rejected as the boundary case). The result always lies in (0, N).
double equilibrium_deterministic(const ModelParams& p);

// The unique root of lyapunov_sv in (0, N), located by bisection on
// (delta, N - delta), delta = 1e-12*N, to relative tolerance 1e-12. The root
// is cross-checked against the closed-form construction
//     eta = 2*(gamma+mu) / (beta + sqrt(beta^2 - 2*sigma^2*(gamma+mu))),
//     xi_s = (N - eta) / (1 + epsilon*eta),
// and the two must agree to 1e-9 relative or an internal Error is raised.
// Requires k0_s > 1 (NoEquilibriumError) and a nonnegative discriminant
// beta^2 - 2*sigma^2*(gamma+mu) (ParameterError).
double equilibrium_stochastic(const ModelParams& p);

}  // namespace amrtriad
