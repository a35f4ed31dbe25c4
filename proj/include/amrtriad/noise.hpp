#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace amrtriad {

enum class IncrementRule { GaussianInverseCdf, BoxMuller };

// Everything needed to regenerate a stochastic path bit for bit: the seed, the
// name of the generator (only "mt19937_64" is recognized; its output sequence
// is fixed by the language standard, so paths reproduce across platforms for
// a given build), and how uniform draws become Gaussian increments. The
// default inverse-CDF rule consumes exactly one 64-bit draw per increment.
struct NoisePlan {
    std::uint64_t seed = 0;
    std::string generator_id = "mt19937_64";
    IncrementRule increment_rule = IncrementRule::GaussianInverseCdf;
};

// Quantile function of the standard normal distribution for p in (0, 1),
// rational-approximation evaluation (Wichura's algorithm), absolute error
// below 1e-15 over the full double range of p. Throws DomainError outside
// (0, 1).
double inverse_normal_cdf(double p);

// Deterministic stream of standard normal variates defined by a NoisePlan.
// Uniforms are u = ((x >> 11) + 0.5) * 2^-53, which lies strictly inside
// (0, 1) for every 64-bit x, so the quantile transform never sees an endpoint.
class GaussianStream {
  public:
    explicit GaussianStream(const NoisePlan& plan);
    double next();

  private:
    std::mt19937_64 gen_;
    IncrementRule rule_;
    bool have_spare_ = false;
    double spare_ = 0.0;

    double next_uniform();
};

}  // namespace amrtriad
