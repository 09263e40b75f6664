#include "riesz/mz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "riesz/bounds.hpp"
#include "riesz/rng.hpp"
#include "riesz/vandermonde.hpp"

namespace riesz::mz {

namespace {

constexpr double kLinearTol = 1e-9;    // linear-space dominance slack
constexpr double kLogTol = 1e-9;       // log-space dominance slack
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("riesz::mz: " + msg);
}

std::uint64_t generation_seed(std::uint64_t family_seed, int d, int attempt) {
    const std::uint64_t base = family_seed ^ static_cast<std::uint64_t>(d);
    if (attempt == 0) return base;
    return CounterRng(base, 0xa77e).at(static_cast<std::uint64_t>(attempt));
}

} // namespace

TriangularFamily canonical_family() { return {}; }

TriangularFamily counterexample_scan_family() {
    TriangularFamily f;
    f.kind = FamilyKind::counterexample;
    f.name = "counterexample";
    return f;
}

TriangularFamily kadec_family(double mu_max, std::uint64_t seed) {
    TriangularFamily f;
    f.kind = FamilyKind::kadec_perturbed;
    f.name = "kadec_perturbed";
    f.mu_max = mu_max;
    f.seed = seed;
    return f;
}

TriangularFamily avdonin_family(double L, int N, double mu_star,
                                std::uint64_t seed, double min_delta) {
    TriangularFamily f;
    f.kind = FamilyKind::avdonin_block;
    f.name = "avdonin_block";
    f.L = L;
    f.N = N;
    f.mu_star = mu_star;
    f.seed = seed;
    f.min_delta = min_delta;
    return f;
}

Generated family_generate(const TriangularFamily& family, int d) {
    require(d >= 1, "d must be positive");
    Generated g;
    switch (family.kind) {
        case FamilyKind::canonical:
            g.nodes = spectra::roots_of_unity(d);
            return g;
        case FamilyKind::counterexample:
            g.nodes = spectra::counterexample_family(d);
            return g;
        case FamilyKind::custom:
            require(static_cast<bool>(family.custom),
                    "custom family has no generator");
            g.nodes = family.custom(d);
            require(g.nodes.d == d, "custom generator returned wrong size");
            return g;
        case FamilyKind::kadec_perturbed:
        case FamilyKind::avdonin_block:
            break;
    }

    const spectra::NodeSet base = spectra::roots_of_unity(d);
    for (int attempt = 0; attempt < family.max_attempts; ++attempt) {
        const std::uint64_t s = generation_seed(family.seed, d, attempt);
        spectra::PerturbationSpec pert =
            (family.kind == FamilyKind::kadec_perturbed)
                ? spectra::make_uniform_kadec(d, family.mu_max, s)
                : spectra::make_block_avdonin(d, family.L, family.N,
                                              family.mu_star, s);
        spectra::NodeSet nodes;
        try {
            nodes = spectra::apply_perturbation(base, pert);
        } catch (const std::invalid_argument&) {
            continue; // collision: redraw
        }
        if (family.min_delta > 0.0 &&
            d * spectra::separation(nodes) < family.min_delta)
            continue;
        g.nodes = std::move(nodes);
        g.pert = std::move(pert);
        g.has_pert = true;
        g.attempts = attempt + 1;
        return g;
    }
    throw std::runtime_error("riesz::mz: generation failed at d = " +
                             std::to_string(d) + " after " +
                             std::to_string(family.max_attempts) + " attempts");
}

double rho_average(const std::vector<double>& mu, int N) {
    require(N >= 1 && N <= static_cast<int>(mu.size()),
            "N must lie in [1, d]");
    return spectra::block_mu_star(mu, N);
}

ScanReport mz_scan(const TriangularFamily& family,
                   const std::vector<int>& d_values) {
    require(!d_values.empty(), "no d values");
    ScanReport report;
    report.family = family.name;
    report.seed = family.seed;
    report.A_inf = kInf;
    report.B_sup = -kInf;
    report.delta_family = kInf;
    report.min_margin_log = kInf;

    for (int d : d_values) {
        const Generated g = family_generate(family, d);
        const auto eb = vandermonde::exact_bounds(g.nodes);
        ScanRecord rec;
        rec.d = d;
        rec.delta_circ = spectra::separation(g.nodes);
        rec.A = eb.A;
        rec.B = eb.B;
        const double delta_d = d * rec.delta_circ;

        auto add_check = [&](const std::string& name, double value_log,
                             double margin_log) {
            BoundCheck c;
            c.bound_name = name;
            c.value_log = value_log;
            c.margin_log = margin_log;
            c.pass = margin_log >= -kLogTol;
            report.min_margin_log = std::min(report.min_margin_log, margin_log);
            (c.pass ? report.pass_count : report.fail_count) += 1;
            rec.checks.push_back(std::move(c));
        };

        const double bessel_log = std::log(bounds::bessel_upper(delta_d));
        add_check("bessel_upper", bessel_log, bessel_log - std::log(rec.B));

        if (family.kind == FamilyKind::kadec_perturbed) {
            const double lower_log = bounds::mz_kadec_bound_log(family.mu_max);
            add_check("mz_kadec", lower_log, std::log(rec.A) - lower_log);
            add_check("mz_kadec_upper", std::log(8.0),
                      std::log(8.0) - std::log(rec.B));
        } else if (family.kind == FamilyKind::avdonin_block) {
            const double rho = rho_average(g.pert.mu, family.N);
            const double lower_log =
                bounds::mz_avdonin_bound_log(delta_d, family.L, family.N, rho);
            add_check("mz_avdonin", lower_log, std::log(rec.A) - lower_log);
        }

        report.A_inf = std::min(report.A_inf, rec.A);
        report.B_sup = std::max(report.B_sup, rec.B);
        report.delta_family = std::min(report.delta_family, delta_d);
        report.records.push_back(std::move(rec));
    }
    return report;
}

VerifyReport mz_kadec_verify(const std::vector<int>& d_values, double mu_max,
                             int trials, std::uint64_t seed) {
    require(mu_max >= 0.0 && mu_max < 0.25, "mu_max must lie in [0, 1/4)");
    require(trials >= 1, "trials must be positive");
    require(!d_values.empty(), "no d values");

    VerifyReport report;
    report.suite = "kadec";
    report.seed = seed;
    report.min_margin_log = kInf;
    const double lower = bounds::mz_kadec_bound(mu_max);
    const double lower_log = bounds::mz_kadec_bound_log(mu_max);

    for (int t = 0; t < trials; ++t) {
        for (int d : d_values) {
            const std::uint64_t s =
                CounterRng(seed, static_cast<std::uint64_t>(t) + 1)
                    .at(static_cast<std::uint64_t>(d));
            const auto pert = spectra::make_uniform_kadec(d, mu_max, s);
            const auto nodes =
                spectra::apply_perturbation(spectra::roots_of_unity(d), pert);
            const auto eb = vandermonde::exact_bounds(nodes);

            VerifyRecord rec;
            rec.trial = t;
            rec.d = d;
            rec.A = eb.A;
            rec.B = eb.B;
            rec.bound = lower;
            rec.bound_log = lower_log;
            rec.margin_log = std::min(std::log(eb.A) - lower_log,
                                      std::log(8.0) - std::log(eb.B));
            rec.pass = eb.A >= lower - kLinearTol && eb.B <= 8.0 + kLinearTol;
            report.checks += 1;
            if (!rec.pass) report.failures += 1;
            report.min_margin_log =
                std::min(report.min_margin_log, rec.margin_log);
            report.records.push_back(rec);
        }
    }
    return report;
}

VerifyReport mz_general_kadec_verify(const TriangularFamily& base, double mu,
                                     const std::vector<int>& d_values,
                                     int trials, std::uint64_t seed) {
    require(trials >= 1, "trials must be positive");
    require(mu >= 0.0, "mu must be nonnegative");

    const ScanReport prior = mz_scan(base, d_values);
    const double threshold =
        std::sqrt(prior.A_inf) * prior.delta_family / (8.0 * std::numbers::pi);
    if (!(mu < threshold)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", threshold);
        throw std::invalid_argument(
            "riesz::mz: mu must stay below sqrt(A_inf) delta / (8 pi) = " +
            std::string(buf));
    }
    const double lower =
        bounds::basis_perturbation_bound(prior.A_inf, prior.delta_family, mu);
    const double lower_log = std::log(lower);

    VerifyReport report;
    report.suite = "general-kadec";
    report.seed = seed;
    report.min_margin_log = kInf;

    for (int t = 0; t < trials; ++t) {
        for (int d : d_values) {
            const auto g = family_generate(base, d);
            const std::uint64_t s =
                CounterRng(seed, static_cast<std::uint64_t>(t) + 0x9001)
                    .at(static_cast<std::uint64_t>(d));
            // arbitrary displacement profile, |mu_j| <= mu grid units
            const auto pert = spectra::make_uniform_kadec(d, mu, s);
            const auto nodes = spectra::apply_perturbation(g.nodes, pert);
            const auto eb = vandermonde::exact_bounds(nodes);

            VerifyRecord rec;
            rec.trial = t;
            rec.d = d;
            rec.A = eb.A;
            rec.B = eb.B;
            rec.bound = lower;
            rec.bound_log = lower_log;
            rec.margin_log = std::log(eb.A) - lower_log;
            rec.pass = eb.A >= lower - kLinearTol;
            report.checks += 1;
            if (!rec.pass) report.failures += 1;
            report.min_margin_log =
                std::min(report.min_margin_log, rec.margin_log);
            report.records.push_back(rec);
        }
    }
    return report;
}

} // namespace riesz::mz
