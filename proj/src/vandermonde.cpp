#include "riesz/vandermonde.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

namespace riesz::vandermonde {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

VandermondeMatrix build_vandermonde(const spectra::NodeSet& nodes) {
    const int d = nodes.d;
    VandermondeMatrix vm;
    vm.d = d;
    vm.V.resize(d, d);
    for (int j = 0; j < d; ++j) {
        // powers of the unit root keep |V(j,k)| = 1 exactly
        const std::complex<double> w = std::polar(1.0, kTwoPi * nodes.theta[j]);
        std::complex<double> p{1.0, 0.0};
        for (int k = 0; k < d; ++k) {
            vm.V(j, k) = p;
            p *= w;
        }
    }
    return vm;
}

ExactBounds exact_bounds(const VandermondeMatrix& vm) {
    if (vm.d > kMaxDimension)
        throw std::invalid_argument(
            "riesz::vandermonde: exact_bounds supports d <= " +
            std::to_string(kMaxDimension) + ", got " + std::to_string(vm.d));
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(vm.V);
    const auto& s = svd.singularValues();
    ExactBounds b;
    b.sigma_max = s(0);
    b.sigma_min = s(vm.d - 1);
    b.A = b.sigma_min * b.sigma_min / vm.d;
    b.B = b.sigma_max * b.sigma_max / vm.d;
    return b;
}

ExactBounds exact_bounds(const spectra::NodeSet& nodes) {
    if (nodes.d > kMaxDimension)
        throw std::invalid_argument(
            "riesz::vandermonde: exact_bounds supports d <= " +
            std::to_string(kMaxDimension) + ", got " + std::to_string(nodes.d));
    return exact_bounds(build_vandermonde(nodes));
}

double inverse_norm(const VandermondeMatrix& vm) {
    const ExactBounds b = exact_bounds(vm);
    if (b.sigma_min < kNearSingular) {
        std::ostringstream msg;
        msg << "riesz::vandermonde: matrix is numerically singular, sigma_min = "
            << b.sigma_min;
        throw std::runtime_error(msg.str());
    }
    return 1.0 / b.sigma_min;
}

double sampling_ratio(const VandermondeMatrix& vm,
                      std::span<const std::complex<double>> coeffs) {
    if (static_cast<int>(coeffs.size()) != vm.d)
        throw std::invalid_argument(
            "riesz::vandermonde: coefficient count must equal d");
    double norm2 = 0.0;
    for (const auto& c : coeffs) norm2 += std::norm(c);
    if (norm2 == 0.0)
        throw std::invalid_argument(
            "riesz::vandermonde: zero coefficient vector");
    Eigen::Map<const Eigen::VectorXcd> a(coeffs.data(), vm.d);
    return (vm.V * a).squaredNorm() / (vm.d * norm2);
}

} // namespace riesz::vandermonde
