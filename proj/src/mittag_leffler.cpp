#include "amrtriad/mittag_leffler.hpp"

#include <cmath>
#include <limits>

#include "amrtriad/errors.hpp"

namespace amrtriad {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// sin(pi * y) with exact integer reduction; accurate for large |y| where
// sin(pi * y) computed directly would lose the argument to rounding.
long double sin_pi(long double y) {
    const long double n = std::round(y);
    const long double r = y - n;
    const long double s = std::sin(kPi * r);
    // sin(pi*(n + r)) = (-1)^n sin(pi*r)
    return (std::fmod(std::fabs(n), 2.0L) < 0.5L) ? s : -s;
}

// 1 / Gamma(y), valid on the whole real line; zero at nonpositive integers.
long double reciprocal_gamma(long double y) {
    if (y >= 0.5L) return 1.0L / std::tgamma(y);
    const long double s = sin_pi(y);
    if (s == 0.0L) return 0.0L;
    // Reflection: 1/Gamma(y) = Gamma(1-y) * sin(pi*y) / pi.
    return s * std::tgamma(1.0L - y) / kPi;
}

double series(double alpha, double z) {
    // Compensated (Kahan) summation in long double. Terms are generated from
    // a running power so each costs one multiply and one Gamma evaluation.
    const long double a = alpha;
    const long double x = z;
    long double sum = 0.0L, comp = 0.0L, zpow = 1.0L;
    int tiny_streak = 0;
    for (int k = 0; k < 600; ++k) {
        const long double term = zpow * reciprocal_gamma(a * k + 1.0L);
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (!(std::fabs(sum) < 1e320L) || !(std::fabs(term) < 1e320L))
            throw RangeError("mittag_leffler: series overflow for large positive z");
        // Two consecutive negligible terms end the (possibly alternating) sum.
        if (std::fabs(term) <= 1e-25L * std::max(std::fabs(sum), 1e-300L)) {
            if (++tiny_streak == 2) break;
        } else {
            tiny_streak = 0;
        }
        zpow *= x;
        if (!(std::fabs(zpow) < 1e4900L))
            throw RangeError("mittag_leffler: series overflow for large positive z");
    }
    const double out = static_cast<double>(sum);
    if (!std::isfinite(out)) throw RangeError("mittag_leffler: result overflows double range");
    return out;
}

double asymptotic_negative(double alpha, double x) {
    // E_alpha(-x) ~ sum_{k>=1} (-1)^(k-1) x^-k / Gamma(1 - alpha*k), truncated
    // at the smallest-magnitude term (zero terms at Gamma poles are skipped).
    const long double a = alpha;
    const long double inv_x = 1.0L / static_cast<long double>(x);
    long double sum = 0.0L, xpow = inv_x;
    long double last_mag = std::numeric_limits<long double>::max();
    for (int k = 1; k <= 60; ++k) {
        const long double rg = reciprocal_gamma(1.0L - a * k);
        const long double term = ((k % 2) ? xpow : -xpow) * rg;
        const long double mag = std::fabs(term);
        if (mag != 0.0L) {
            if (mag > last_mag) break;  // divergent tail reached
            last_mag = mag;
        }
        sum += term;
        if (mag != 0.0L && mag <= 1e-22L * std::fabs(sum)) break;
        xpow *= inv_x;
    }
    return static_cast<double>(sum);
}

}  // namespace

double mittag_leffler(double alpha, double z) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("mittag_leffler: alpha must lie in (0, 1]");
    if (!std::isfinite(z)) throw DomainError("mittag_leffler: z must be finite");
    if (alpha == 1.0) {
        const double v = std::exp(z);
        if (!std::isfinite(v)) throw RangeError("mittag_leffler: exp overflow");
        return v;
    }
    if (z < -10.0) return asymptotic_negative(alpha, -z);
    return series(alpha, z);
}

}  // namespace amrtriad
