#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "riesz/analytic.hpp"
#include "riesz/bounds.hpp"
#include "riesz/rng.hpp"
#include "riesz/spectra.hpp"
#include "riesz/vandermonde.hpp"

using namespace riesz;
using namespace riesz::analytic;

namespace {

constexpr double kPi = std::numbers::pi;

spectra::PeriodicSpectrum integers() { return {1.0, {0.0}}; }

spectra::PeriodicSpectrum random_spectrum(CounterRng& rng, int max_points,
                                          double min_sep) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int d = 1 + int(rng.below(max_points));
        std::vector<double> raw;
        for (int j = 0; j < d; ++j) raw.push_back(rng.next_double());
        try {
            auto ns = spectra::make_node_set(raw);
            if (d * spectra::separation(ns) < min_sep) continue;
            return spectra::to_line(ns);
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random_spectrum: exhausted attempts");
}

// hand-built flat weight grid
WeightGrid constant_grid(double value, int n = 1024) {
    WeightGrid g;
    g.period = 1.0;
    g.y = 1.0;
    g.grid_size = n;
    g.samples.assign(n, value);
    g.eval = [value](double) { return value; };
    return g;
}

} // namespace

TEST_SUITE("analytic") {

TEST_CASE("poisson kernel closed form matches the lattice sum") {
    CounterRng rng(601);
    for (int trial = 0; trial < 40; ++trial) {
        double P = rng.uniform(0.5, 4.0);
        double y = rng.uniform(0.05, 3.0);
        double t = rng.uniform(-P, P);
        const long long R = 10000;
        double closed = poisson_kernel_periodic(t, y, P);
        double summed = poisson_kernel_sum(t, y, P, R);
        double tail = poisson_kernel_tail_bound(t, y, P, R);
        CHECK(std::fabs(closed - summed) <= tail + 1e-12);
    }
}

TEST_CASE("poisson kernel special values") {
    // t = 0, P = 1: pi (1 - e^{-4 pi y}) / (1 - e^{-2 pi y})^2
    for (double y : {0.1, 0.5, 1.0, 2.0}) {
        double q = std::exp(-2.0 * kPi * y);
        CHECK(poisson_kernel_periodic(0.0, y, 1.0) ==
              doctest::Approx(kPi * (1 - q * q) / ((1 - q) * (1 - q))).epsilon(1e-13));
    }
    // large y flattens the kernel to pi
    for (double y : {2.0, 3.0, 5.0})
        for (double t : {0.0, 0.25, 0.49})
            CHECK(std::fabs(poisson_kernel_periodic(t, y, 1.0) - kPi) <=
                  6.0 * kPi * std::exp(-2.0 * kPi * y));
    // P-rescaling: k(t, y, P) = (1/P) k(t/P, y/P, 1)
    CHECK(poisson_kernel_periodic(0.3, 0.7, 2.5) ==
          doctest::Approx(poisson_kernel_periodic(0.3 / 2.5, 0.7 / 2.5, 1.0) / 2.5)
              .epsilon(1e-13));
    CHECK_THROWS_AS(poisson_kernel_periodic(0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(poisson_kernel_tail_bound(5.0, 1, 1, 4), std::invalid_argument);
}

TEST_CASE("single-point weight is pinched exactly as the closed form says") {
    double y = 0.25;
    double q = std::exp(-2.0 * kPi * y);
    auto grid = periodic_weight(integers(), y, 4096);
    REQUIRE(int(grid.samples.size()) == 4096);
    for (double w : grid.samples) CHECK(w > 0.0);
    auto ext = weight_extrema(grid);
    CHECK(std::fabs(ext.min - (1 - q) * (1 - q)) <= 1e-8);
    CHECK(std::fabs(ext.max - (1 + q) * (1 + q)) <= 1e-8);
    CHECK(ext.min / ext.max ==
          doctest::Approx(std::pow((1 - q) / (1 + q), 2)).epsilon(1e-6));
    // extrema sit at x = 0 and x = K/2
    CHECK(std::fabs(ext.argmin) <= 1e-6);
    CHECK(std::fabs(ext.argmax - 0.5) <= 1e-6);
    CHECK_THROWS_AS(periodic_weight(integers(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(periodic_weight(integers(), 1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(periodic_weight(integers(), 1.0, 300), std::invalid_argument);
}

TEST_CASE("weight extrema refinement never worsens") {
    CounterRng rng(602);
    for (int trial = 0; trial < 5; ++trial) {
        auto spec = random_spectrum(rng, 5, 0.1);
        double y = rng.uniform(0.2, 1.0);
        double prev_min = -1, prev_max = 1e300;
        for (int g : {256, 512, 1024, 2048}) {
            auto ext = weight_extrema(periodic_weight(spec, y, g));
            if (prev_min >= 0) {
                CHECK(ext.min <= prev_min + 1e-12);
                CHECK(ext.max >= prev_max - 1e-12);
            }
            prev_min = ext.min;
            prev_max = ext.max;
        }
    }
}

TEST_CASE("certified extrema converge on smooth weights") {
    auto cert = certified_weight_extrema(integers(), 0.5, 256);
    CHECK(cert.converged);
    double q = std::exp(-kPi);
    CHECK(std::fabs(cert.extrema.min - (1 - q) * (1 - q)) <= 1e-7);
    CHECK(std::fabs(cert.extrema.max - (1 + q) * (1 + q)) <= 1e-7);
}

TEST_CASE("constant-grid corner cases for extrema") {
    auto ext = weight_extrema(constant_grid(3.25));
    CHECK(ext.min == doctest::Approx(3.25));
    CHECK(ext.max == doctest::Approx(3.25));
    WeightGrid empty;
    CHECK_THROWS_AS(weight_extrema(empty), std::invalid_argument);
}

TEST_CASE("a2 of a constant weight is exactly 1") {
    CHECK(std::fabs(a2_constant(constant_grid(1.0), 1.0) - 1.0) <= 1e-12);
    CHECK(std::fabs(a2_constant(constant_grid(7.5), 2.0) - 1.0) <= 1e-12);
}

TEST_CASE("a2 of a half-period step weight approaches the hand value 25/16") {
    // w = 1 on the first half period, 4 on the second: on the full period
    // avg w = 5/2 and avg 1/w = 5/8, so the product is 25/16
    for (int n : {4096, 16384}) {
        WeightGrid g;
        g.period = 1.0;
        g.y = 1.0;
        g.grid_size = n;
        for (int i = 0; i < n; ++i) g.samples.push_back(i < n / 2 ? 1.0 : 4.0);
        double est = a2_constant(g, 1.0);
        CHECK(std::fabs(est - 25.0 / 16.0) <= (n == 4096 ? 5e-3 : 1.5e-3));
    }
}

TEST_CASE("a2 estimate is at least 1 and monotone in the interval family") {
    CounterRng rng(603);
    for (int trial = 0; trial < 8; ++trial) {
        auto spec = random_spectrum(rng, 4, 0.15);
        auto grid = periodic_weight(spec, rng.uniform(0.2, 1.0), 1024);
        double a1 = a2_constant(grid, 1.0);
        double a2 = a2_constant(grid, 2.0);
        double a4 = a2_constant(grid, 4.0);
        CHECK(a1 >= 1.0 - 1e-12);
        CHECK(a2 >= a1 - 1e-12);
        CHECK(a4 >= a2 - 1e-12);
    }
}

TEST_CASE("weight pinch feeds a sine-type bound dominated by the exact bound") {
    CounterRng rng(604);
    for (int trial = 0; trial < 10; ++trial) {
        auto spec = random_spectrum(rng, 8, 0.05);
        auto ns = spectra::make_node_set(
            [&] {
                std::vector<double> t;
                for (double p : spec.points) t.push_back(p / spec.period);
                return t;
            }());
        double delta = spectra::line_separation(spec);
        double y = spec.period * std::log(3.0) / (2.0 * kPi);
        auto ext = weight_extrema(periodic_weight(spec, y, 4096));
        double lower_log = bounds::sine_type_bound_log(delta, y, ext.min, ext.max);
        auto eb = vandermonde::exact_bounds(ns);
        CHECK(std::log(eb.A) >= lower_log - 1e-9);
    }
}

TEST_CASE("phase closes over a period and the simpson route matches the primitive") {
    CounterRng rng(605);
    for (int trial = 0; trial < 6; ++trial) {
        auto spec = random_spectrum(rng, 5, 0.1);
        double y = rng.uniform(0.2, 1.5);
        auto pg = phase_alpha(spec, y, 512);
        CHECK(std::fabs(pg.period_closure) <= 1e-8);
        CHECK(pg.samples[0] == 0.0);
        for (int i = 0; i < int(pg.samples.size()); i += 37) {
            double x = spec.period * i / pg.grid_size;
            CHECK(std::fabs(pg.samples[i] - phase_alpha_closed(spec, y, x)) <= 1e-8);
        }
    }
    CHECK_THROWS_AS(phase_alpha(integers(), 1.0, 300), std::invalid_argument);
}

TEST_CASE("integer-lattice phase translates covariantly") {
    // alpha_{Z+c}(x) = alpha_Z(x - c) - alpha_Z(-c)
    double y = 0.6;
    for (double c : {0.125, 0.3, 0.71}) {
        spectra::PeriodicSpectrum shifted{1.0, {c}};
        for (double x : {-1.2, -0.4, 0.1, 0.37, 0.9, 2.4}) {
            double lhs = phase_alpha_closed(shifted, y, x);
            double rhs = phase_alpha_closed(integers(), y, x - c) -
                         phase_alpha_closed(integers(), y, -c);
            CHECK(std::fabs(lhs - rhs) <= 1e-10);
        }
    }
}

TEST_CASE("phase of a symmetric spectrum is odd") {
    // {0.3, 0.7} is invariant under x -> -x mod 1
    spectra::PeriodicSpectrum sym{1.0, {0.3, 0.7}};
    for (double y : {0.4, 1.0})
        for (double x : {0.05, 0.21, 0.33, 0.45})
            CHECK(std::fabs(phase_alpha_closed(sym, y, x) +
                            phase_alpha_closed(sym, y, -x)) <= 1e-6);
}

TEST_CASE("tau vanishes for the zero pattern and converges on generic ones") {
    auto zero = spectra::make_constant_shift(6, 0.0);
    auto r = tau_sup(zero, 0.8);
    CHECK(r.tau == 0.0);
    CHECK(r.converged);
    auto pert = spectra::make_uniform_kadec(5, 0.2, 91);
    auto t = tau_sup(pert, 0.5);
    CHECK(t.converged);
    CHECK(t.tau > 0.0);
    CHECK_THROWS_AS(tau_sup(zero, -1.0), std::invalid_argument);
}

TEST_CASE("constant shift at large height costs pi times the shift") {
    for (double c : {0.05, -0.1, 0.2}) {
        auto pert = spectra::make_constant_shift(4, c);
        CHECK(std::fabs(tau_sup(pert, 10.0).tau - kPi * std::fabs(c)) <= 1e-3);
    }
}

TEST_CASE("closed-form tau matches the truncated direct sum") {
    CounterRng rng(606);
    for (int trial = 0; trial < 6; ++trial) {
        int d = 1 + int(rng.below(6));
        double y = rng.uniform(0.3, 2.0);
        auto pert = spectra::make_uniform_kadec(d, 0.22, rng.next_u64());
        for (double x : {0.0, 0.37, 1.51}) {
            double closed = tau_at(pert, y, x);
            double direct = tau_direct_sum(pert, y, x, 100000);
            CHECK(std::fabs(closed - direct) <= 1e-4);
        }
    }
}

TEST_CASE("sign flip of the pattern mirrors the node labels") {
    // The primitive is odd with Phi(u + P) = Phi(u) + pi, so negating the
    // pattern equals relabeling k -> (d - k) mod d: tau(-mu) = tau(mirror mu).
    // Plain evenness in mu fails for generic patterns.
    CounterRng rng(607);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + int(rng.below(7));
        double y = rng.uniform(0.3, 2.0);
        auto pert = spectra::make_uniform_kadec(d, 0.2, rng.next_u64());
        auto neg = pert;
        for (auto& m : neg.mu) m = -m;
        auto mir = pert;
        for (int k = 0; k < d; ++k) mir.mu[k] = pert.mu[(d - k) % d];
        CHECK(std::fabs(tau_sup(neg, y).tau - tau_sup(mir, y).tau) <= 1e-10);
    }
    // for a constant pattern mirroring is the identity, so tau is even there
    for (double c : {0.08, 0.19}) {
        auto plus = spectra::make_constant_shift(5, c);
        auto minus = spectra::make_constant_shift(5, -c);
        CHECK(std::fabs(tau_sup(plus, 0.7).tau - tau_sup(minus, 0.7).tau) <= 1e-12);
    }
}

TEST_CASE("tau is capped by the kernel bound") {
    CounterRng rng(608);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 1 + int(rng.below(8));
        double y = rng.uniform(0.2, 3.0);
        auto pert = spectra::make_uniform_kadec(d, rng.uniform(0.01, 0.24),
                                                rng.next_u64());
        double L = 0.0;
        for (double m : pert.mu) L = std::max(L, std::fabs(m));
        double q = std::exp(-2.0 * kPi * y);
        double cap = L * kPi * (1 + q) / (1 - q);
        CHECK(tau_sup(pert, y).tau <= cap + 1e-8);
    }
}

TEST_CASE("counting diagnostic closes for the integer lattice") {
    auto diag = counting_diagnostic(integers(), 1.0, 16.0, 4096);
    CHECK(diag.residual < 1e-2);
    CHECK(diag.core_points > 0);
    // N jumps by one exactly at the integers, zero at the origin from the left
    const auto& g = diag.grid;
    REQUIRE(!g.x.empty());
    for (size_t i = 0; i < g.x.size(); ++i) {
        double n = g.counts[i];
        CHECK(n == std::floor(n)); // integer-valued
        if (i > 0) CHECK(n >= g.counts[i - 1] - 1e-12);
        // psi = 2 pi (x - N) stays bounded for a density-one spectrum
        CHECK(std::fabs(g.psi[i]) <= 2.0 * kPi + 1e-9);
    }
    CHECK_THROWS_AS(counting_diagnostic(integers(), 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("counting function steps exactly at the spectrum points") {
    spectra::PeriodicSpectrum spec{2.0, {0.5, 1.25}};
    auto diag = counting_diagnostic(spec, 1.0, 8.0, 1024);
    const auto& g = diag.grid;
    auto count_at = [&](double x) {
        // last grid value at or before x
        double best = 0;
        for (size_t i = 0; i < g.x.size(); ++i)
            if (g.x[i] <= x + 1e-12) best = g.counts[i];
        return best;
    };
    CHECK(count_at(0.49) == 0);
    CHECK(count_at(0.51) == 1);
    CHECK(count_at(1.26) == 2);
    CHECK(count_at(2.51) == 3);
    CHECK(count_at(-0.1) == 0);
    CHECK(count_at(-0.8) == -1); // point at -0.75 counts negatively
}

TEST_CASE("phi kernel normalization and zeros") {
    for (int L : {2, 3, 5}) {
        CHECK(phi_kernel(L, 0.0) == doctest::Approx(1.0));
        for (int k = 1; k <= 3; ++k) {
            CHECK(std::fabs(phi_kernel(L, double(k * L))) <= 1e-14);
            CHECK(std::fabs(phi_kernel(L, -double(k * L))) <= 1e-14);
        }
        CHECK(phi_kernel(L, 0.5 * L) > 0.0);
    }
}

TEST_CASE("phi decay reports pin the exact bound under the spectral sum") {
    for (int L : {2, 3}) {
        auto rep = phi_decay_check(L);
        CHECK(rep.L == L);
        CHECK(rep.d == 4 * L);
        CHECK(rep.sum_within_bound);
        CHECK(rep.exact_within_sum);
        CHECK(rep.A_exact <= rep.S_truncated + rep.tail_bound + 1e-12);
        CHECK(rep.S_truncated <= rep.sum_bound + rep.tail_bound + 1e-12);
        CHECK(rep.sum_bound == doctest::Approx(8.0 / std::pow(kPi, L)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(phi_decay_check(1), std::invalid_argument);
    CHECK_THROWS_AS(phi_decay_check(9), std::invalid_argument);
}

TEST_CASE("two-height ratio is nonpositive and respects its bound") {
    auto rep = nu_bound_check(integers(), 0.1, 4096);
    CHECK(rep.max_nu <= 1e-9);
    CHECK(rep.bound == doctest::Approx(2.0 * kPi * 0.1 * 1.04).epsilon(1e-12));
    CHECK(rep.max_abs_nu <= rep.bound + 1e-6);
    // shrinking y shrinks the ratio
    CHECK(nu_bound_check(integers(), 0.01, 1024).max_abs_nu <
          nu_bound_check(integers(), 0.5, 1024).max_abs_nu);
    CounterRng rng(609);
    for (int trial = 0; trial < 5; ++trial) {
        auto spec = random_spectrum(rng, 4, 0.2);
        double y = rng.uniform(0.05, 1.0);
        auto r = nu_bound_check(spec, y, 1024);
        CHECK(r.max_nu <= 1e-9);
        CHECK(r.max_abs_nu <= r.bound + 1e-6);
    }
}

} // TEST_SUITE
