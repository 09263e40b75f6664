#ifndef RIESZ_SPECTRA_HPP
#define RIESZ_SPECTRA_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Node sets on the circle and their periodic line spectra.
//
// A NodeSet holds d points theta_0 < ... < theta_{d-1} in [0, 1), pairwise
// distinct mod 1. Its line spectrum is Lambda = { d*theta_j + d*n : n integer },
// a d-periodic set of density one. Perturbations are stored in grid units:
// displacing node j by mu_j grid units means theta_j -> theta_j + mu_j / d,
// i.e. lambda -> lambda + mu_j on the line.

namespace riesz::spectra {

// two nodes closer than this (circularly) count as one point
inline constexpr double kCollisionTol = 1e-12;

struct NodeSet {
    int d = 0;
    std::vector<double> theta; // sorted ascending, in [0, 1)
};

struct PeriodicSpectrum {
    double period = 1.0;        // K
    std::vector<double> points; // sorted ascending, in [0, period)
};

// Reduce to [0,1), sort, and validate: throws std::invalid_argument on an
// empty list, a non-finite value, or a circular collision below kCollisionTol.
NodeSet make_node_set(std::vector<double> raw);

// min circular distance between distinct nodes; 1 for a single node.
// Pigeonhole gives separation(nodes) <= 1/d.
double separation(const NodeSet& nodes);

// theta_j = j/d
NodeSet roots_of_unity(int d);

// The collapsing family Sigma_d: {0} and +-(j - 1/4)/d. For d = 2k+1 the
// offsets run j = 1..k; for d = 2k they run j = 1..k-1 with (k - 1/4)/d
// appended. Smallest gap is 0.75/d (against node 0), interior gaps are 1/d.
NodeSet counterexample_family(int d);

// line spectrum of a node set: period d, points d*theta_j
PeriodicSpectrum to_line(const NodeSet& nodes);

// separation of the line spectrum: d * separation(nodes)
double line_separation(const PeriodicSpectrum& spec);

enum class PerturbationKind { uniform_kadec, block_avdonin, constant_shift };

struct PerturbationSpec {
    PerturbationKind kind = PerturbationKind::constant_shift;
    int d = 0;
    std::vector<double> mu; // grid units, one entry per node
    std::uint64_t seed = 0;

    // declared parameters, meaningful per kind
    double mu_max = 0.0;  // uniform_kadec: sup bound, < 1/4
    double L = 0.0;       // block_avdonin: hard bound on |mu_j|
    int N = 0;            // block_avdonin: block length, N | d
    double mu_star = 0.0; // block_avdonin: achieved max |block mean|
    double shift = 0.0;   // constant_shift
};

// mu_j ~ uniform[-mu_max, mu_max]; requires 0 <= mu_max < 1/4
PerturbationSpec make_uniform_kadec(int d, double mu_max, std::uint64_t seed);

// |mu_j| <= L with every aligned length-N block mean equal to +-mu_star,
// so the recomputed max |block mean| equals mu_star to rounding.
// Requires N | d, 0 <= mu_star < 1/4 and mu_star <= L.
PerturbationSpec make_block_avdonin(int d, double L, int N, double mu_star,
                                    std::uint64_t seed);

// mu_j = c for all j
PerturbationSpec make_constant_shift(int d, double c);

// recomputed max over aligned length-N block means of |mean|; used to check
// the block_avdonin invariant and by the scan reports
double block_mu_star(const std::vector<double>& mu, int N);

// theta_j -> (theta_j + mu_j/d) mod 1, re-sorted; collisions throw
NodeSet apply_perturbation(const NodeSet& base, const PerturbationSpec& pert);

// Readers accept either plain text (one decimal per line, '#' comments) or a
// JSON array of numbers; read_nodes sniffs the format from the first byte.
NodeSet read_nodes(const std::string& path);
NodeSet read_nodes_text(std::istream& in);
NodeSet read_nodes_json(std::istream& in);

// "roots:<d>", "counter:<d>" or "file:<path>"
NodeSet parse_node_spec(const std::string& spec);

} // namespace riesz::spectra

#endif
