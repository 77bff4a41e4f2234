#pragma once

#include <complex>

namespace mtfde::specfun {

// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
    double alpha;  // > 0
    double beta;   // any real
};

// Gamma function, relative error <= 1e-13 on [-30, 170].
// Throws DomainError at non-positive integers, DomainError("overflow") above ~171.3.
double gamma_fn(double x);

// 1/Gamma, entire; returns 0 at non-positive integer arguments.
double rgamma(double x);

// Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b).
double beta_fn(double a, double b);

// sin(pi*x) with exact integer-part reduction (no large-argument loss).
double sin_pi(double x);

// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
// Series / sigma-space contour integral / algebraic asymptotics, selected by
// |z|^(1/alpha); alpha >= 1 handled by the duplication identity.
std::complex<double> mittag_leffler(const MLParams& p, std::complex<double> z);

// Which evaluation path mittag_leffler took for this argument (diagnostics).
enum class MLRegime { Zero, Special, Duplication, Taylor, ContourIntegral, Asymptotic };
MLRegime ml_regime(const MLParams& p, std::complex<double> z);

// Envelope C/(1+x) with C calibrated per (alpha,beta) as
// max over a log sweep x in [0,1e3] of (1+x)|E_{alpha,beta}(-x)|.
// Requires 0 < alpha < 1, x >= 0.
double ml_envelope_constant(const MLParams& p);
double ml_decay_envelope(const MLParams& p, double x);

}  // namespace mtfde::specfun
