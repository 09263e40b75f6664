#ifndef RIESZ_MZ_HPP
#define RIESZ_MZ_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riesz/spectra.hpp"

// Triangular families: one node set Theta_d per dimension d, with scans that
// compare the exact bounds against every applicable closed-form bound
// uniformly in d. Aggregates over a scanned range are range-restricted
// infima/suprema, never claims about all d.

namespace riesz::mz {

enum class FamilyKind {
    canonical,       // roots of unity
    kadec_perturbed, // roots displaced by uniform[-mu_max, mu_max] grid units
    avdonin_block,   // block-balanced displacements, |mu_j| <= L
    counterexample,  // the collapsing family Sigma_d
    custom
};

struct TriangularFamily {
    FamilyKind kind = FamilyKind::canonical;
    std::string name = "canonical";
    std::uint64_t seed = 0;

    double mu_max = 0.0;  // kadec_perturbed
    double L = 0.0;       // avdonin_block
    int N = 0;            // avdonin_block
    double mu_star = 0.0; // avdonin_block

    // when positive, generation redraws until d * delta_circ >= min_delta;
    // the redraw chain is deterministic in (seed, d, attempt)
    double min_delta = 0.0;
    int max_attempts = 1000;

    std::function<spectra::NodeSet(int)> custom;
};

TriangularFamily canonical_family();
TriangularFamily counterexample_scan_family();
TriangularFamily kadec_family(double mu_max, std::uint64_t seed);
TriangularFamily avdonin_family(double L, int N, double mu_star,
                                std::uint64_t seed, double min_delta = 0.05);

struct Generated {
    spectra::NodeSet nodes;
    spectra::PerturbationSpec pert; // meaningful iff has_pert
    bool has_pert = false;
    int attempts = 1;
};

// deterministic: attempt 0 derives its perturbation seed as seed XOR d.
// Throws std::runtime_error if max_attempts draws all miss min_delta.
Generated family_generate(const TriangularFamily& family, int d);

// rho(N) = max over m = 0..d-1 of |(1/N) sum_{j=mN}^{(m+1)N-1} mu_j| with
// indices mod d; mu arrives in grid units, so the (d/N)-scaled absolute-unit
// average of the paper reduces to the plain block mean
double rho_average(const std::vector<double>& mu, int N);

struct BoundCheck {
    std::string bound_name;
    double value_log = 0.0;
    double margin_log = 0.0; // >= 0 means the exact value dominates
    bool pass = false;
};

struct ScanRecord {
    int d = 0;
    double delta_circ = 0.0;
    double A = 0.0;
    double B = 0.0;
    std::vector<BoundCheck> checks;
};

struct ScanReport {
    std::string family;
    std::uint64_t seed = 0;
    std::vector<ScanRecord> records;
    // range-restricted aggregates over the scanned d only
    double A_inf = 0.0;
    double B_sup = 0.0;
    double delta_family = 0.0; // min over scanned d of d * delta_circ
    int pass_count = 0;
    int fail_count = 0;
    double min_margin_log = 0.0;
};

// exact bounds per d plus margins against every applicable bound:
// the Bessel cap for all kinds, the Kadec pair for kadec_perturbed,
// the block-average bound for avdonin_block
ScanReport mz_scan(const TriangularFamily& family,
                   const std::vector<int>& d_values);

struct VerifyRecord {
    int trial = 0;
    int d = 0;
    double A = 0.0;
    double B = 0.0;
    double bound = 0.0; // linear; may underflow, see bound_log
    double bound_log = 0.0;
    double margin_log = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int checks = 0;
    int failures = 0;
    double min_margin_log = 0.0;
    std::vector<VerifyRecord> records;
};

// one fresh uniform-Kadec draw per (trial, d): exact A must dominate
// 2 sin^2((pi/4)(1-4 mu_max)) - 1e-9 and exact B must stay below 8 + 1e-9
VerifyReport mz_kadec_verify(const std::vector<int>& d_values, double mu_max,
                             int trials, std::uint64_t seed);

// measures A_inf and delta(Y) of the base family over d_values, requires
// mu < sqrt(A_inf) delta / (8 pi), then checks every displaced copy against
// (sqrt(A_inf) - 8 pi mu / delta)^2 - 1e-9
VerifyReport mz_general_kadec_verify(const TriangularFamily& base, double mu,
                                     const std::vector<int>& d_values,
                                     int trials, std::uint64_t seed);

} // namespace riesz::mz

#endif
