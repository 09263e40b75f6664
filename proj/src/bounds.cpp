#include "riesz/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace riesz::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(std::string("riesz::bounds: ") + msg);
}

void check_mu_quarter(double mu) {
    require(mu >= 0.0 && mu <= 0.25,
            "displacement bound must lie in [0, 1/4]");
}

void check_avdonin(double delta, double L, int N, double mu_star) {
    require(delta > 0.0, "delta must be positive");
    require(L > 0.0, "L must be positive");
    require(N >= 1, "N must be a positive integer");
    check_mu_quarter(mu_star);
}

// circular distance on the unit circle
double circ_dist(double a, double b) {
    double r = std::abs(a - b);
    r -= std::floor(r);
    return std::min(r, 1.0 - r);
}

} // namespace

double kadec_bound(double mu_max) {
    check_mu_quarter(mu_max);
    const double s = std::sin(kPi * 0.25 * (1.0 - 4.0 * mu_max));
    return 2.0 * s * s;
}

double kadec_bound_log(double mu_max) {
    check_mu_quarter(mu_max);
    if (mu_max == 0.25) return -kInf;
    const double s = std::sin(kPi * 0.25 * (1.0 - 4.0 * mu_max));
    return std::log(2.0) + 2.0 * std::log(s);
}

double avdonin_bound(double delta, double L, int N, double mu_star) {
    check_avdonin(delta, L, N, mu_star);
    if (mu_star == 0.25) return 0.0;
    const double g = 1.0 - 4.0 * mu_star;
    const double s = std::sin(kPi * 0.25 * g);
    return std::exp(-960.0 * kPi * L * L * N / (delta * g * g)) * s * s /
           (7.0 * delta);
}

double avdonin_bound_log(double delta, double L, int N, double mu_star) {
    check_avdonin(delta, L, N, mu_star);
    if (mu_star == 0.25) return -kInf;
    const double g = 1.0 - 4.0 * mu_star;
    const double s = std::sin(kPi * 0.25 * g);
    return -std::log(7.0 * delta) - 960.0 * kPi * L * L * N / (delta * g * g) +
           2.0 * std::log(s);
}

double sine_type_bound(double delta, double y, double m, double M) {
    require(delta > 0.0, "delta must be positive");
    require(y > 0.0, "y must be positive");
    require(m > 0.0 && m <= M, "need 0 < m <= M");
    return (m / M) * std::exp(-8.0 * kPi * y / delta) / (7.0 * delta);
}

double sine_type_bound_log(double delta, double y, double m, double M) {
    require(delta > 0.0, "delta must be positive");
    require(y > 0.0, "y must be positive");
    require(m > 0.0 && m <= M, "need 0 < m <= M");
    return -std::log(7.0 * delta) + std::log(m) - std::log(M) -
           8.0 * kPi * y / delta;
}

double general_stability_bound(double delta, double y0, double tau) {
    require(delta > 0.0, "delta must be positive");
    require(y0 >= 1.0, "y0 must be at least 1");
    require(tau >= 0.0 && tau < kPi / 4.0, "tau must lie in [0, pi/4)");
    const double c = std::cos(2.0 * tau);
    return std::exp(-8.0 * kPi * y0 / delta) * c * c / (28.0 * delta);
}

double general_stability_bound_log(double delta, double y0, double tau) {
    require(delta > 0.0, "delta must be positive");
    require(y0 >= 1.0, "y0 must be at least 1");
    require(tau >= 0.0 && tau < kPi / 4.0, "tau must lie in [0, pi/4)");
    const double c = std::cos(2.0 * tau);
    return -std::log(28.0 * delta) - 8.0 * kPi * y0 / delta +
           2.0 * std::log(c);
}

double bessel_upper(double delta) {
    require(delta > 0.0, "delta must be positive");
    return 8.0 * kPi / std::min(delta, 1.0);
}

double ingham_bound(double a, double delta) {
    require(a > 0.0, "a must be positive");
    require(delta > 0.0, "delta must be positive");
    require(a * delta > 1.0, "requires a delta > 1");
    const double ad = a * delta;
    return (a / (kPi * kPi)) * (1.0 - 1.0 / (ad * ad));
}

double periodic_bound(double delta, double K) {
    require(delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]");
    require(K > 0.0, "K must be positive");
    return std::exp(-(2.0 * K / delta) * std::log(18.0)) / (7.0 * delta);
}

double periodic_bound_log(double delta, double K) {
    require(delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]");
    require(K > 0.0, "K must be positive");
    return -std::log(7.0 * delta) - (2.0 * K / delta) * std::log(18.0);
}

double gautschi_bound(const spectra::NodeSet& nodes) {
    return std::exp(gautschi_bound_log(nodes));
}

double gautschi_bound_log(const spectra::NodeSet& nodes) {
    const int d = nodes.d;
    double worst = 0.0;
    for (int k = 0; k < d; ++k) {
        double s = 0.0;
        for (int j = 0; j < d; ++j)
            if (j != k) s -= std::log(circ_dist(nodes.theta[j], nodes.theta[k]));
        worst = std::max(worst, s);
    }
    return 0.5 * std::log(static_cast<double>(d)) +
           (d - 1) * std::log(kPi) + worst;
}

double basis_perturbation_bound(double A, double delta, double mu) {
    require(A > 0.0, "A must be positive");
    require(delta > 0.0, "delta must be positive");
    require(mu >= 0.0, "mu must be nonnegative");
    const double root = std::sqrt(A) - 8.0 * kPi * mu / delta;
    require(root > 0.0, "requires mu < sqrt(A) delta / (8 pi)");
    return root * root;
}

double hs_ratio_bound(double m, double M) {
    require(m > 0.0 && m <= M, "need 0 < m <= M");
    return m / M;
}

double mz_kadec_bound(double mu_max) { return kadec_bound(mu_max); }
double mz_kadec_bound_log(double mu_max) { return kadec_bound_log(mu_max); }

double mz_avdonin_bound(double delta, double L, int N, double rho) {
    return avdonin_bound(delta, L, N, rho);
}

double mz_avdonin_bound_log(double delta, double L, int N, double rho) {
    return avdonin_bound_log(delta, L, N, rho);
}

} // namespace riesz::bounds
