#ifndef RIESZ_BOUNDS_HPP
#define RIESZ_BOUNDS_HPP

#include "riesz/spectra.hpp"

// Closed-form lower and upper bounds for the Riesz constants of exponential
// systems. Every bound here is dominated by (or dominates, for the upper
// bounds) the exact SVD value from riesz::vandermonde; the test suites verify
// that ordering at desk scale.
//
// Several of the lower bounds are exponentially small in the parameters, far
// below the smallest normal double. Each of those has a *_log companion that
// evaluates the natural logarithm directly; comparisons against exact values
// should happen in log space. The linear functions are kept for reporting and
// may underflow to zero; their log companions never lose the exponent.
//
// Domain violations throw std::domain_error.

namespace riesz::bounds {

// 2 sin^2((pi/4)(1 - 4 mu)) for sup displacement mu in [0, 1/4]
double kadec_bound(double mu_max);
double kadec_bound_log(double mu_max);

// (1/(7 delta)) exp(-960 pi L^2 N / (delta (1-4 mu*)^2)) sin^2((pi/4)(1-4 mu*))
// for |mu_n| <= L with block length N and block mean bound mu* in [0, 1/4]
double avdonin_bound(double delta, double L, int N, double mu_star);
double avdonin_bound_log(double delta, double L, int N, double mu_star);

// (1/(7 delta)) (m/M) exp(-8 pi y / delta) for a weight pinched in [m, M]
// on the line Im z = y
double sine_type_bound(double delta, double y, double m, double M);
double sine_type_bound_log(double delta, double y, double m, double M);

// (1/(28 delta)) exp(-8 pi y0 / delta) cos^2(2 tau) for phase modulus
// tau in [0, pi/4) measured at height y0 >= 1
double general_stability_bound(double delta, double y0, double tau);
double general_stability_bound_log(double delta, double y0, double tau);

// upper bound 8 pi / min(delta, 1) for any delta-separated spectrum
double bessel_upper(double delta);

// (a / pi^2) (1 - 1/(a delta)^2), requires a delta > 1
double ingham_bound(double a, double delta);

// (1/(7 delta)) 18^(-2K/delta) for a K-periodic density-one spectrum,
// delta in (0, 1]
double periodic_bound(double delta, double K);
double periodic_bound_log(double delta, double K);

// sqrt(d) pi^(d-1) max_k prod_{j != k} 1/delta_jk with delta_jk the circular
// node distance; dominates ||V^{-1}||. The linear value overflows to +inf for
// clustered nodes at moderate d; the log companion is always finite.
double gautschi_bound(const spectra::NodeSet& nodes);
double gautschi_bound_log(const spectra::NodeSet& nodes);

// (sqrt(A) - 8 pi mu / delta)^2: lower bound after displacing a spectrum with
// bound A by at most mu grid units; requires mu < sqrt(A) delta / (8 pi)
double basis_perturbation_bound(double A, double delta, double mu);

// m/M for a weight pinched in [m, M], 0 < m <= M
double hs_ratio_bound(double m, double M);

// triangular-family forms: identical formulas with the family separation and
// the cyclic block average rho in place of delta and mu*
double mz_kadec_bound(double mu_max);
double mz_kadec_bound_log(double mu_max);
double mz_avdonin_bound(double delta, double L, int N, double rho);
double mz_avdonin_bound_log(double delta, double L, int N, double rho);

} // namespace riesz::bounds

#endif
