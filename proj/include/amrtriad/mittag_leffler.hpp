#pragma once

namespace amrtriad {

// E_alpha(z) = sum_{k>=0} z^k / Gamma(alpha*k + 1) for alpha in (0, 1],
// real z. This is the relaxation function of the linear memory equation: the
// order-alpha problem D^alpha R = -lambda R has solution R0 * E_alpha(-lambda t^alpha).
//
// Evaluation strategy:
//   - alpha = 1 reduces exactly to exp(z).
//   - z >= -10: the defining power series, accumulated in extended precision
//     with compensated summation (the series alternates for z < 0 and the
//     partial terms can dwarf the result).
//   - z < -10: the negative-axis asymptotic series
//     sum_{k>=1} (-1)^(k-1) x^-k / Gamma(1 - alpha*k), optimally truncated.
//
// Accuracy: relative error is ~1e-13 for |z| <= 2 (the regime the model
// exercises). Near the |z| = 10 switchover the series side loses digits to
// cancellation as alpha decreases (still ~1e-9 at alpha = 0.75), and the
// asymptotic side carries the expansion's intrinsic residual, which depends
// non-monotonically on alpha: it terminates exactly at alpha = 0.5, is
// ~4e-9 at alpha = 0.75, but ~3e-5 at alpha = 0.6 and ~2e-4 at alpha = 0.8
// just past the switchover. The residual decays as |z| grows (below ~1e-7
// for every supported alpha by |z| ~ 50).
//
// For z <= 0 the value lies in (0, 1]; E_alpha(0) = 1 exactly.
//
// Throws DomainError for alpha outside (0, 1] or non-finite z, RangeError
// when the value (or an intermediate series term) overflows for large
// positive z.
double mittag_leffler(double alpha, double z);

}  // namespace amrtriad
