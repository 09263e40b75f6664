#ifndef RIESZ_VANDERMONDE_HPP
#define RIESZ_VANDERMONDE_HPP

#include <complex>
#include <span>
#include <vector>

#include "riesz/spectra.hpp"

#include <Eigen/Core>

// The finite-dimensional bridge. For d nodes theta_j the square Vandermonde
// matrix V(j,k) = exp(2 pi i k theta_j), k = 0..d-1, links the node set to the
// Riesz bounds of its line spectrum:
//
//   A = sigma_min(V)^2 / d,   B = sigma_max(V)^2 / d.
//
// For the roots of unity V is sqrt(d) times a unitary DFT matrix, so A = B = 1.

namespace riesz::vandermonde {

// singular values below this raise the near-singular error in inverse_norm
inline constexpr double kNearSingular = 1e-13;

// exact_bounds accepts d up to this; the full SVD stays cheap and accurate here
inline constexpr int kMaxDimension = 512;

struct VandermondeMatrix {
    int d = 0;
    Eigen::MatrixXcd V;
};

struct ExactBounds {
    double A = 0.0;
    double B = 0.0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
};

VandermondeMatrix build_vandermonde(const spectra::NodeSet& nodes);

// full SVD of V; throws std::invalid_argument for d > kMaxDimension
ExactBounds exact_bounds(const spectra::NodeSet& nodes);
ExactBounds exact_bounds(const VandermondeMatrix& vm);

// operator norm of V^{-1}, i.e. 1/sigma_min; throws std::runtime_error with
// the offending sigma in the message when sigma_min < kNearSingular
double inverse_norm(const VandermondeMatrix& vm);

// ||V a||^2 / (d ||a||^2) for polynomial coefficients a: the sampling quotient
// (1/d) sum_j |p(e^{2 pi i theta_j})|^2 / sum_k |a_k|^2. Lies in [A, B].
double sampling_ratio(const VandermondeMatrix& vm,
                      std::span<const std::complex<double>> coeffs);

} // namespace riesz::vandermonde

#endif
