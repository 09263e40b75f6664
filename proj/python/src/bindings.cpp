#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riesz/analytic.hpp"
#include "riesz/bounds.hpp"
#include "riesz/mz.hpp"
#include "riesz/spectra.hpp"
#include "riesz/vandermonde.hpp"

namespace py = pybind11;
using namespace riesz;

PYBIND11_MODULE(_rieszbounds, m) {
    m.doc() =
        "Exact Riesz basis bounds of exponential systems, the closed-form "
        "bounds they dominate, and the phase/weight diagnostics behind them.";
    m.attr("__version__") = "0.1.0";

    // ---- node sets and perturbations ----

    py::class_<spectra::NodeSet>(m, "NodeSet")
        .def(py::init<>())
        .def_readonly("d", &spectra::NodeSet::d)
        .def_readonly("theta", &spectra::NodeSet::theta)
        .def("__len__", [](const spectra::NodeSet& n) { return n.d; })
        .def("__repr__", [](const spectra::NodeSet& n) {
            return "NodeSet(d=" + std::to_string(n.d) + ")";
        });

    py::class_<spectra::PeriodicSpectrum>(m, "PeriodicSpectrum")
        .def(py::init<>())
        .def(py::init([](double period, std::vector<double> points) {
                 spectra::PeriodicSpectrum s;
                 s.period = period;
                 s.points = std::move(points);
                 return s;
             }),
             py::arg("period"), py::arg("points"))
        .def_readwrite("period", &spectra::PeriodicSpectrum::period)
        .def_readwrite("points", &spectra::PeriodicSpectrum::points);

    m.def("make_node_set", &spectra::make_node_set, py::arg("theta"),
          "reduce mod 1, sort, and validate pairwise separation");
    m.def("roots_of_unity", &spectra::roots_of_unity, py::arg("d"));
    m.def("counterexample_family", &spectra::counterexample_family,
          py::arg("d"), "the collapsing family with one bunched gap");
    m.def("separation", &spectra::separation, py::arg("nodes"),
          "minimal circular gap");
    m.def("to_line", &spectra::to_line, py::arg("nodes"),
          "rescale to the period-d spectrum d*theta");
    m.def("line_separation", &spectra::line_separation, py::arg("spectrum"));
    m.def("parse_node_spec", &spectra::parse_node_spec, py::arg("spec"),
          "roots:<d> | counter:<d> | file:<path>");

    py::class_<spectra::PerturbationSpec>(m, "PerturbationSpec")
        .def_readonly("d", &spectra::PerturbationSpec::d)
        .def_readonly("mu", &spectra::PerturbationSpec::mu)
        .def_readonly("seed", &spectra::PerturbationSpec::seed)
        .def_readonly("mu_max", &spectra::PerturbationSpec::mu_max)
        .def_readonly("L", &spectra::PerturbationSpec::L)
        .def_readonly("N", &spectra::PerturbationSpec::N)
        .def_readonly("mu_star", &spectra::PerturbationSpec::mu_star)
        .def_readonly("shift", &spectra::PerturbationSpec::shift);

    m.def("make_uniform_kadec", &spectra::make_uniform_kadec, py::arg("d"),
          py::arg("mu_max"), py::arg("seed"));
    m.def("make_block_avdonin", &spectra::make_block_avdonin, py::arg("d"),
          py::arg("L"), py::arg("N"), py::arg("mu_star"), py::arg("seed"));
    m.def("make_constant_shift", &spectra::make_constant_shift, py::arg("d"),
          py::arg("c"));
    m.def("apply_perturbation", &spectra::apply_perturbation, py::arg("base"),
          py::arg("pert"));
    m.def("block_mu_star", &spectra::block_mu_star, py::arg("mu"),
          py::arg("N"));

    // ---- exact bounds ----

    py::class_<vandermonde::ExactBounds>(m, "ExactBounds")
        .def_readonly("A", &vandermonde::ExactBounds::A)
        .def_readonly("B", &vandermonde::ExactBounds::B)
        .def_readonly("sigma_min", &vandermonde::ExactBounds::sigma_min)
        .def_readonly("sigma_max", &vandermonde::ExactBounds::sigma_max)
        .def("__repr__", [](const vandermonde::ExactBounds& b) {
            return "ExactBounds(A=" + std::to_string(b.A) +
                   ", B=" + std::to_string(b.B) + ")";
        });

    m.def(
        "exact_bounds",
        [](const spectra::NodeSet& nodes) {
            return vandermonde::exact_bounds(nodes);
        },
        py::arg("nodes"),
        "A = sigma_min(V)^2/d, B = sigma_max(V)^2/d via full SVD");
    m.def(
        "inverse_norm",
        [](const spectra::NodeSet& nodes) {
            return vandermonde::inverse_norm(
                vandermonde::build_vandermonde(nodes));
        },
        py::arg("nodes"), "operator norm of V^{-1}");

    // ---- closed-form bounds ----

    m.def("kadec_bound", &bounds::kadec_bound, py::arg("mu_max"));
    m.def("kadec_bound_log", &bounds::kadec_bound_log, py::arg("mu_max"));
    m.def("avdonin_bound", &bounds::avdonin_bound, py::arg("delta"),
          py::arg("L"), py::arg("N"), py::arg("mu_star"));
    m.def("avdonin_bound_log", &bounds::avdonin_bound_log, py::arg("delta"),
          py::arg("L"), py::arg("N"), py::arg("mu_star"));
    m.def("sine_type_bound", &bounds::sine_type_bound, py::arg("delta"),
          py::arg("y"), py::arg("m"), py::arg("M"));
    m.def("sine_type_bound_log", &bounds::sine_type_bound_log,
          py::arg("delta"), py::arg("y"), py::arg("m"), py::arg("M"));
    m.def("general_stability_bound", &bounds::general_stability_bound,
          py::arg("delta"), py::arg("y0"), py::arg("tau"));
    m.def("general_stability_bound_log", &bounds::general_stability_bound_log,
          py::arg("delta"), py::arg("y0"), py::arg("tau"));
    m.def("bessel_upper", &bounds::bessel_upper, py::arg("delta"));
    m.def("ingham_bound", &bounds::ingham_bound, py::arg("a"),
          py::arg("delta"));
    m.def("periodic_bound", &bounds::periodic_bound, py::arg("delta"),
          py::arg("K"));
    m.def("periodic_bound_log", &bounds::periodic_bound_log, py::arg("delta"),
          py::arg("K"));
    m.def("gautschi_bound", &bounds::gautschi_bound, py::arg("nodes"));
    m.def("gautschi_bound_log", &bounds::gautschi_bound_log, py::arg("nodes"));
    m.def("basis_perturbation_bound", &bounds::basis_perturbation_bound,
          py::arg("A"), py::arg("delta"), py::arg("mu"));
    m.def("hs_ratio_bound", &bounds::hs_ratio_bound, py::arg("m"),
          py::arg("M"));
    m.def("mz_kadec_bound", &bounds::mz_kadec_bound, py::arg("mu_max"));
    m.def("mz_kadec_bound_log", &bounds::mz_kadec_bound_log,
          py::arg("mu_max"));
    m.def("mz_avdonin_bound", &bounds::mz_avdonin_bound, py::arg("delta"),
          py::arg("L"), py::arg("N"), py::arg("rho"));
    m.def("mz_avdonin_bound_log", &bounds::mz_avdonin_bound_log,
          py::arg("delta"), py::arg("L"), py::arg("N"), py::arg("rho"));

    // ---- kernel, weight, phase diagnostics ----

    m.def("poisson_kernel_periodic", &analytic::poisson_kernel_periodic,
          py::arg("t"), py::arg("y"), py::arg("P"));
    m.def("poisson_kernel_sum", &analytic::poisson_kernel_sum, py::arg("t"),
          py::arg("y"), py::arg("P"), py::arg("half_range"));
    m.def("poisson_kernel_tail_bound", &analytic::poisson_kernel_tail_bound,
          py::arg("t"), py::arg("y"), py::arg("P"), py::arg("half_range"));

    py::class_<analytic::Extrema>(m, "Extrema")
        .def_readonly("min", &analytic::Extrema::min)
        .def_readonly("max", &analytic::Extrema::max)
        .def_readonly("argmin", &analytic::Extrema::argmin)
        .def_readonly("argmax", &analytic::Extrema::argmax)
        .def_readonly("grid_size", &analytic::Extrema::grid_size);

    m.def(
        "weight_extrema",
        [](const spectra::PeriodicSpectrum& spec, double y, int grid_size) {
            return analytic::weight_extrema(
                analytic::periodic_weight(spec, y, grid_size));
        },
        py::arg("spectrum"), py::arg("y"),
        py::arg("grid_size") = analytic::kDefaultGridSize,
        "grid-plus-polish extrema of the periodic weight");
    m.def(
        "a2_constant",
        [](const spectra::PeriodicSpectrum& spec, double y, int grid_size,
           double max_scale) {
            return analytic::a2_constant(
                analytic::periodic_weight(spec, y, grid_size), max_scale);
        },
        py::arg("spectrum"), py::arg("y"),
        py::arg("grid_size") = analytic::kDefaultGridSize,
        py::arg("max_scale") = 4.0,
        "dyadic-interval Muckenhoupt estimate of the periodic weight");

    py::class_<analytic::PhaseGrid>(m, "PhaseGrid")
        .def_readonly("period", &analytic::PhaseGrid::period)
        .def_readonly("y", &analytic::PhaseGrid::y)
        .def_readonly("grid_size", &analytic::PhaseGrid::grid_size)
        .def_readonly("samples", &analytic::PhaseGrid::samples)
        .def_readonly("period_closure", &analytic::PhaseGrid::period_closure);

    m.def("phase_alpha", &analytic::phase_alpha, py::arg("spectrum"),
          py::arg("y"), py::arg("grid_size") = analytic::kDefaultGridSize);
    m.def("phase_alpha_closed", &analytic::phase_alpha_closed,
          py::arg("spectrum"), py::arg("y"), py::arg("x"));

    py::class_<analytic::TauResult>(m, "TauResult")
        .def_readonly("tau", &analytic::TauResult::tau)
        .def_readonly("argmax", &analytic::TauResult::argmax)
        .def_readonly("grid_size", &analytic::TauResult::grid_size)
        .def_readonly("converged", &analytic::TauResult::converged);

    m.def("tau_sup", &analytic::tau_sup, py::arg("pert"), py::arg("y"),
          py::arg("grid_size") = analytic::kDefaultGridSize);
    m.def("tau_at", &analytic::tau_at, py::arg("pert"), py::arg("y"),
          py::arg("x"));

    py::class_<analytic::CountingDiagnostic>(m, "CountingDiagnostic")
        .def_readonly("residual", &analytic::CountingDiagnostic::residual)
        .def_readonly("fitted_const",
                      &analytic::CountingDiagnostic::fitted_const)
        .def_readonly("core_points",
                      &analytic::CountingDiagnostic::core_points);

    m.def("counting_diagnostic", &analytic::counting_diagnostic,
          py::arg("spectrum"), py::arg("y"), py::arg("window"),
          py::arg("grid_size") = analytic::kDefaultGridSize,
          "how far P_y[psi] + alpha sits from a constant on the core window");

    py::class_<analytic::PhiDecayReport>(m, "PhiDecayReport")
        .def_readonly("L", &analytic::PhiDecayReport::L)
        .def_readonly("d", &analytic::PhiDecayReport::d)
        .def_readonly("S_truncated", &analytic::PhiDecayReport::S_truncated)
        .def_readonly("tail_bound", &analytic::PhiDecayReport::tail_bound)
        .def_readonly("sum_bound", &analytic::PhiDecayReport::sum_bound)
        .def_readonly("A_exact", &analytic::PhiDecayReport::A_exact)
        .def_readonly("sum_within_bound",
                      &analytic::PhiDecayReport::sum_within_bound)
        .def_readonly("exact_within_sum",
                      &analytic::PhiDecayReport::exact_within_sum);

    m.def("phi_decay_check", &analytic::phi_decay_check, py::arg("L"));

    py::class_<analytic::NuReport>(m, "NuReport")
        .def_readonly("max_abs_nu", &analytic::NuReport::max_abs_nu)
        .def_readonly("max_nu", &analytic::NuReport::max_nu)
        .def_readonly("bound", &analytic::NuReport::bound)
        .def_readonly("grid_size", &analytic::NuReport::grid_size)
        .def_readonly("skipped", &analytic::NuReport::skipped);

    m.def("nu_bound_check", &analytic::nu_bound_check, py::arg("spectrum"),
          py::arg("y"), py::arg("grid_size") = analytic::kDefaultGridSize);

    // ---- triangular families ----

    py::class_<mz::TriangularFamily>(m, "TriangularFamily")
        .def_readonly("name", &mz::TriangularFamily::name)
        .def_readonly("seed", &mz::TriangularFamily::seed);

    m.def("canonical_family", &mz::canonical_family);
    m.def("counterexample_scan_family", &mz::counterexample_scan_family);
    m.def("kadec_family", &mz::kadec_family, py::arg("mu_max"),
          py::arg("seed"));
    m.def("avdonin_family", &mz::avdonin_family, py::arg("L"), py::arg("N"),
          py::arg("mu_star"), py::arg("seed"), py::arg("min_delta") = 0.05);
    m.def("rho_average", &mz::rho_average, py::arg("mu"), py::arg("N"));

    py::class_<mz::BoundCheck>(m, "BoundCheck")
        .def_readonly("bound_name", &mz::BoundCheck::bound_name)
        .def_readonly("value_log", &mz::BoundCheck::value_log)
        .def_readonly("margin_log", &mz::BoundCheck::margin_log)
        .def_readonly("pass_", &mz::BoundCheck::pass);

    py::class_<mz::ScanRecord>(m, "ScanRecord")
        .def_readonly("d", &mz::ScanRecord::d)
        .def_readonly("delta_circ", &mz::ScanRecord::delta_circ)
        .def_readonly("A", &mz::ScanRecord::A)
        .def_readonly("B", &mz::ScanRecord::B)
        .def_readonly("checks", &mz::ScanRecord::checks);

    py::class_<mz::ScanReport>(m, "ScanReport")
        .def_readonly("family", &mz::ScanReport::family)
        .def_readonly("seed", &mz::ScanReport::seed)
        .def_readonly("records", &mz::ScanReport::records)
        .def_readonly("A_inf", &mz::ScanReport::A_inf)
        .def_readonly("B_sup", &mz::ScanReport::B_sup)
        .def_readonly("delta_family", &mz::ScanReport::delta_family)
        .def_readonly("pass_count", &mz::ScanReport::pass_count)
        .def_readonly("fail_count", &mz::ScanReport::fail_count)
        .def_readonly("min_margin_log", &mz::ScanReport::min_margin_log);

    m.def("mz_scan", &mz::mz_scan, py::arg("family"), py::arg("d_values"),
          "exact bounds per dimension plus margins over every applicable "
          "closed-form bound (aggregates are range-restricted)");

    py::class_<mz::VerifyRecord>(m, "VerifyRecord")
        .def_readonly("trial", &mz::VerifyRecord::trial)
        .def_readonly("d", &mz::VerifyRecord::d)
        .def_readonly("A", &mz::VerifyRecord::A)
        .def_readonly("B", &mz::VerifyRecord::B)
        .def_readonly("bound", &mz::VerifyRecord::bound)
        .def_readonly("bound_log", &mz::VerifyRecord::bound_log)
        .def_readonly("margin_log", &mz::VerifyRecord::margin_log)
        .def_readonly("pass_", &mz::VerifyRecord::pass);

    py::class_<mz::VerifyReport>(m, "VerifyReport")
        .def_readonly("suite", &mz::VerifyReport::suite)
        .def_readonly("seed", &mz::VerifyReport::seed)
        .def_readonly("checks", &mz::VerifyReport::checks)
        .def_readonly("failures", &mz::VerifyReport::failures)
        .def_readonly("min_margin_log", &mz::VerifyReport::min_margin_log)
        .def_readonly("records", &mz::VerifyReport::records);

    m.def("mz_kadec_verify", &mz::mz_kadec_verify, py::arg("d_values"),
          py::arg("mu_max"), py::arg("trials"), py::arg("seed"));
    m.def("mz_general_kadec_verify", &mz::mz_general_kadec_verify,
          py::arg("base"), py::arg("mu"), py::arg("d_values"),
          py::arg("trials"), py::arg("seed"));

    m.attr("__all__") = py::make_tuple(
        "NodeSet", "PeriodicSpectrum", "PerturbationSpec", "ExactBounds",
        "Extrema", "PhaseGrid", "TauResult", "CountingDiagnostic",
        "PhiDecayReport", "NuReport", "TriangularFamily", "BoundCheck",
        "ScanRecord", "ScanReport", "VerifyRecord", "VerifyReport",
        "make_node_set", "roots_of_unity", "counterexample_family",
        "separation", "to_line", "line_separation", "parse_node_spec",
        "make_uniform_kadec", "make_block_avdonin", "make_constant_shift",
        "apply_perturbation", "block_mu_star", "exact_bounds", "inverse_norm",
        "kadec_bound", "kadec_bound_log", "avdonin_bound", "avdonin_bound_log",
        "sine_type_bound", "sine_type_bound_log", "general_stability_bound",
        "general_stability_bound_log", "bessel_upper", "ingham_bound",
        "periodic_bound", "periodic_bound_log", "gautschi_bound",
        "gautschi_bound_log", "basis_perturbation_bound", "hs_ratio_bound",
        "mz_kadec_bound", "mz_kadec_bound_log", "mz_avdonin_bound",
        "mz_avdonin_bound_log", "poisson_kernel_periodic",
        "poisson_kernel_sum", "poisson_kernel_tail_bound", "weight_extrema",
        "a2_constant", "phase_alpha", "phase_alpha_closed", "tau_sup",
        "tau_at", "counting_diagnostic", "phi_decay_check", "nu_bound_check",
        "canonical_family", "counterexample_scan_family", "kadec_family",
        "avdonin_family", "rho_average", "mz_scan", "mz_kadec_verify",
        "mz_general_kadec_verify");
}
