#ifndef RIESZ_ANALYTIC_HPP
#define RIESZ_ANALYTIC_HPP

#include <functional>
#include <string>
#include <vector>

#include "riesz/spectra.hpp"

// Analytic machinery on periodic line spectra Lambda = { x_k + P n }.
//
// Notation used throughout (P is the period, q = exp(-2 pi y / P)):
//
//   kernel     k_y(t)   = sum_n y / ((t - nP)^2 + y^2)
//                       = (pi/P) (1 - q^2) / (1 - 2 q cos(2 pi t / P) + q^2)
//   primitive  Phi(u)   = int_0^u k_y = pi u / P
//                         + arctan(q sin(2 pi u / P) / (1 - q cos(2 pi u / P)))
//   weight     w(x)     = prod_k |1 - e^{(2 pi i / P)(x + i y - x_k)}|^2
//   phase      alpha(x) = 2 int_0^x sum_k k_y(t - x_k) dt - 2 pi x
//   counting   N(x)     = #(Lambda cap [0, x]) for x >= 0, minus the count of
//                         Lambda cap [x, 0) for x < 0
//   sawtooth   psi(x)   = 2 pi (x - N(x))
//
// The primitive identity follows from d/dθ [2 arctan((1+q)/(1-q) tan(θ/2))]
// = (1-q^2)/(1 - 2q cos θ + q^2) rewritten without the tan singularity via
// the conjugate series sum_k (q^k/k) sin(kθ) = arctan(q sin θ/(1 - q cos θ)).
//
// Sup/inf values over continua are certified by grid refinement: the grid
// doubles until the value moves by less than kRefineTol relatively, or the
// grid hits kMaxGridSize (then `converged` is false and reports carry a
// precision warning).

namespace riesz::analytic {

inline constexpr int kDefaultGridSize = 4096;
inline constexpr int kMaxGridSize = 1 << 20;
inline constexpr double kRefineTol = 1e-8;

// ---- periodic Poisson kernel ----

// closed form (pi/P)(1 - q^2) / (1 - 2q cos(2 pi t/P) + q^2)
double poisson_kernel_periodic(double t, double y, double P);

// truncated lattice sum over |n| <= half_range, the independent slow route
double poisson_kernel_sum(double t, double y, double P, long long half_range);

// integral-comparison bound on the omitted tail of poisson_kernel_sum;
// requires half_range * P > |t|
double poisson_kernel_tail_bound(double t, double y, double P,
                                 long long half_range);

// ---- weights ----

struct WeightGrid {
    double period = 1.0;
    double y = 0.0;
    int grid_size = 0;           // power of two, >= 256
    std::vector<double> samples; // w at x_i = i * period / grid_size
    std::function<double(double)> eval; // pointwise w, present when synthesized
    std::string quadrature = "trapezoid";
};

// sample w over one period; grid_size must be a power of two >= 256
WeightGrid periodic_weight(const spectra::PeriodicSpectrum& spec, double y,
                           int grid_size = kDefaultGridSize);

struct Extrema {
    double min = 0.0;
    double max = 0.0;
    double argmin = 0.0;
    double argmax = 0.0;
    int grid_size = 0;
    bool refined = false; // golden-section pass ran (needs grid.eval)
};

// grid min/max, plus one golden-section pass around each extremal cell when
// the grid carries an evaluator
Extrema weight_extrema(const WeightGrid& grid);

struct CertifiedExtrema {
    Extrema extrema;
    bool converged = false;
};

// weight_extrema under grid doubling; min/max envelopes accumulate so the
// certified values are monotone in refinement
CertifiedExtrema certified_weight_extrema(const spectra::PeriodicSpectrum& spec,
                                          double y,
                                          int grid_size = kDefaultGridSize);

// Muckenhoupt estimate: max over dyadic intervals (grid-aligned positions,
// lengths 2^j cells with 2^j * h <= max_scale_periods * period, periodic
// wrap-around) of (1/|I|^2) int_I w * int_I 1/w, trapezoid quadrature.
// A lower estimate of the true constant; monotone in max_scale_periods.
double a2_constant(const WeightGrid& grid, double max_scale_periods);

// ---- phase ----

struct PhaseGrid {
    double period = 1.0;
    double y = 0.0;
    int grid_size = 0;
    std::vector<double> samples; // alpha at x_i = i * period / grid_size
    double period_closure = 0.0; // alpha(P), zero for density-one spectra
    std::string quadrature = "simpson";
};

// cumulative composite Simpson over the closed-form kernel sum, 8 panels per
// grid cell, plus the exact linear term; alpha(0) = 0 exactly
PhaseGrid phase_alpha(const spectra::PeriodicSpectrum& spec, double y,
                      int grid_size = kDefaultGridSize);

// quadrature-free evaluation via the primitive Phi; used as the cross-check
// route and by the counting diagnostic
double phase_alpha_closed(const spectra::PeriodicSpectrum& spec, double y,
                          double x);

// ---- phase modulus tau ----

struct TauResult {
    double tau = 0.0;
    double argmax = 0.0;
    int grid_size = 0;
    bool converged = false;
};

// tau_y = sup_x |sum_n int_x^{x+mu_n} y/((n-t)^2 + y^2) dt| for the d-periodic
// displacement pattern mu (grid units). Residue classes collapse through the
// primitive: class j contributes Phi(x + mu_j - j) - Phi(x - j) with P = d,
// so the lattice sum is exact; the sup is certified by grid doubling with a
// golden-section polish around the best cell.
TauResult tau_sup(const spectra::PerturbationSpec& pert, double y,
                  int grid_size = kDefaultGridSize);

// |sum over the pattern| at one x, same closed form
double tau_at(const spectra::PerturbationSpec& pert, double y, double x);

// truncated direct sum over |n| <= half_range, the independent slow route
double tau_direct_sum(const spectra::PerturbationSpec& pert, double y, double x,
                      long long half_range);

// ---- counting diagnostic ----

struct CountingGrid {
    double window = 0.0; // snapped up to a whole number of periods
    double step = 0.0;
    std::vector<double> x;      // [-window, window]
    std::vector<double> counts; // N(x)
    std::vector<double> psi;    // 2 pi (x - N(x))
};

struct CountingDiagnostic {
    CountingGrid grid;
    double residual = 0.0;     // min_c max |P_y[psi] + alpha - c| on the core
    double fitted_const = 0.0; // the minimizing c
    int core_points = 0;       // evaluation count on [-window/2, window/2]
};

// Harmonic-extension consistency check: the normalized Poisson extension
// (1/pi) int k_y(x-t) psi(t) dt, computed exactly over [-W, W] from the
// piecewise-linear structure of psi (closed-form arctan/log pieces) with the
// omitted tail replaced by the periodic mean of psi, should differ from
// -alpha by a constant. Requires a density-one spectrum and window >= 4
// periods; the sup runs over the core [-W/2, W/2].
CountingDiagnostic counting_diagnostic(const spectra::PeriodicSpectrum& spec,
                                       double y, double window,
                                       int grid_size = kDefaultGridSize);

// ---- spectral decay family ----

// (L sin(pi x / L) / (pi x))^L, continued by 1 at x = 0
double phi_kernel(int L, double x);

struct PhiDecayReport {
    int L = 0;
    int d = 0;                // 4L nodes
    double S_truncated = 0.0; // sum of phi^2 over the spectrum, |lambda| <= 1e4 L
    double tail_bound = 0.0;
    double sum_bound = 0.0;   // 8 / pi^L
    double A_exact = 0.0;
    bool sum_within_bound = false;
    bool exact_within_sum = false;
};

// The 4L-periodic spectrum generated by {L, L+1/2, ..., 3L-1/2}: its exact
// lower Riesz bound is dominated by the spectral sum of phi_L, which decays
// like pi^{-L}. Requires 2 <= L <= 8.
PhiDecayReport phi_decay_check(int L);

// ---- two-height ratio ----

struct NuReport {
    double max_abs_nu = 0.0;
    double max_nu = 0.0; // should be <= 0 up to rounding
    double bound = 0.0;  // 2 pi y (delta^2 + 4 y^2) / delta^3
    int grid_size = 0;
    int skipped = 0; // grid points too close to the spectrum
};

// nu_y(x) = log( |H(x)|^2 dist^2(x+iy, Lambda) /
//               (|H(x+iy)|^2 dist^2(x, Lambda)) )
// with H the periodic sine product; nonpositive, and |nu_y| stays below
// 2 pi y (delta^2 + 4 y^2) / delta^3
NuReport nu_bound_check(const spectra::PeriodicSpectrum& spec, double y,
                        int grid_size = kDefaultGridSize);

} // namespace riesz::analytic

#endif
