#include "riesz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "riesz/analytic.hpp"
#include "riesz/bounds.hpp"
#include "riesz/report.hpp"
#include "riesz/rng.hpp"
#include "riesz/spectra.hpp"
#include "riesz/vandermonde.hpp"

namespace riesz::cli {

namespace {

using report::Value;

constexpr double kLogTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void require_input(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("riesz::cli: " + msg);
}

// ---- random draws (all rejection chains are pinned by the trial RNG) ----

spectra::NodeSet draw_node_set(CounterRng& rng, int d) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> theta(static_cast<std::size_t>(d));
        for (auto& v : theta) v = rng.next_double();
        try {
            return spectra::make_node_set(std::move(theta));
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("riesz::cli: node draw kept colliding at d = " +
                             std::to_string(d));
}

// ---- report envelope ----

Value envelope(const std::string& command, Value params, std::uint64_t seed) {
    auto v = Value::object();
    v.set("command", command);
    v.set("params", std::move(params));
    v.set("seed", seed);
    return v;
}

Value summary_value(int pass_count, int fail_count, Value min_margin_log) {
    auto s = Value::object();
    s.set("pass_count", pass_count);
    s.set("fail_count", fail_count);
    s.set("min_margin_log", std::move(min_margin_log));
    return s;
}

std::string csv_header(const std::string& command, const Value& params,
                       std::uint64_t seed) {
    Value h = envelope(command, Value(params), seed);
    return "# " + h.dump(0) + "\n";
}

Value verify_records(const mz::VerifyReport& r) {
    auto arr = Value::array();
    for (const auto& rec : r.records) {
        auto o = Value::object();
        o.set("trial", rec.trial);
        o.set("d", rec.d);
        o.set("A", rec.A);
        o.set("B", rec.B);
        o.set("bound", rec.bound);
        o.set("bound_log", rec.bound_log);
        o.set("margin_log", rec.margin_log);
        o.set("pass", rec.pass);
        arr.push(std::move(o));
    }
    return arr;
}

Value scan_records(const mz::ScanReport& r) {
    auto arr = Value::array();
    for (const auto& rec : r.records) {
        auto o = Value::object();
        o.set("d", rec.d);
        o.set("delta_circ", rec.delta_circ);
        o.set("A", rec.A);
        o.set("B", rec.B);
        auto checks = Value::array();
        for (const auto& c : rec.checks) {
            auto co = Value::object();
            co.set("bound_name", c.bound_name);
            co.set("value_log", c.value_log);
            co.set("margin_log", c.margin_log);
            co.set("pass", c.pass);
            checks.push(std::move(co));
        }
        o.set("checks", std::move(checks));
        arr.push(std::move(o));
    }
    return arr;
}

struct Outcome {
    std::string body;
    int status = 0;
};

// ---- command handlers ----

Outcome run_exact(const RunConfig& cfg) {
    const auto nodes = spectra::parse_node_spec(cfg.nodes);
    const auto eb = vandermonde::exact_bounds(nodes);
    const double delta_circ = spectra::separation(nodes);

    auto params = Value::object();
    params.set("nodes", cfg.nodes);

    if (cfg.format == Format::csv) {
        std::string body = csv_header("exact", params, cfg.seed);
        body += "d,delta_circ,A_exact,B_exact,sigma_min,sigma_max\n";
        body += std::to_string(nodes.d) + "," + report::fmt(delta_circ) + "," +
                report::fmt(eb.A) + "," + report::fmt(eb.B) + "," +
                report::fmt(eb.sigma_min) + "," + report::fmt(eb.sigma_max) +
                "\n";
        return {std::move(body), 0};
    }

    auto rec = Value::object();
    rec.set("d", nodes.d);
    rec.set("delta_circ", delta_circ);
    rec.set("A", eb.A);
    rec.set("B", eb.B);
    rec.set("sigma_min", eb.sigma_min);
    rec.set("sigma_max", eb.sigma_max);

    auto root = envelope("exact", std::move(params), cfg.seed);
    root.set("records", Value::array().push(std::move(rec)));
    root.set("summary", summary_value(0, 0, Value()));
    return {root.dump() + "\n", 0};
}

Outcome run_bound(const RunConfig& cfg) {
    auto params = Value::object();
    params.set("formula", cfg.formula);
    double value = 0.0;
    double value_log = 0.0;

    const std::string& f = cfg.formula;
    if (f == "kadec") {
        params.set("mu", cfg.mu);
        value = bounds::kadec_bound(cfg.mu);
        value_log = bounds::kadec_bound_log(cfg.mu);
    } else if (f == "avdonin") {
        params.set("delta", cfg.delta).set("L", cfg.L).set("N", cfg.N);
        params.set("mu_star", cfg.mu_star);
        value = bounds::avdonin_bound(cfg.delta, cfg.L, cfg.N, cfg.mu_star);
        value_log = bounds::avdonin_bound_log(cfg.delta, cfg.L, cfg.N, cfg.mu_star);
    } else if (f == "sine-type") {
        params.set("delta", cfg.delta).set("y", cfg.y);
        params.set("m", cfg.m).set("M", cfg.M);
        value = bounds::sine_type_bound(cfg.delta, cfg.y, cfg.m, cfg.M);
        value_log = bounds::sine_type_bound_log(cfg.delta, cfg.y, cfg.m, cfg.M);
    } else if (f == "general-stability") {
        params.set("delta", cfg.delta).set("y0", cfg.y0).set("tau", cfg.tau);
        value = bounds::general_stability_bound(cfg.delta, cfg.y0, cfg.tau);
        value_log = bounds::general_stability_bound_log(cfg.delta, cfg.y0, cfg.tau);
    } else if (f == "bessel") {
        params.set("delta", cfg.delta);
        value = bounds::bessel_upper(cfg.delta);
        value_log = std::log(value);
    } else if (f == "ingham") {
        params.set("a", cfg.a).set("delta", cfg.delta);
        value = bounds::ingham_bound(cfg.a, cfg.delta);
        value_log = std::log(value);
    } else if (f == "periodic") {
        params.set("delta", cfg.delta).set("K", cfg.K);
        value = bounds::periodic_bound(cfg.delta, cfg.K);
        value_log = bounds::periodic_bound_log(cfg.delta, cfg.K);
    } else if (f == "gautschi") {
        params.set("nodes", cfg.nodes);
        const auto nodes = spectra::parse_node_spec(cfg.nodes);
        value = bounds::gautschi_bound(nodes);
        value_log = bounds::gautschi_bound_log(nodes);
    } else if (f == "basis-perturbation") {
        params.set("A", cfg.A).set("delta", cfg.delta).set("mu", cfg.mu);
        value = bounds::basis_perturbation_bound(cfg.A, cfg.delta, cfg.mu);
        value_log = std::log(value);
    } else if (f == "hs-ratio") {
        params.set("m", cfg.m).set("M", cfg.M);
        value = bounds::hs_ratio_bound(cfg.m, cfg.M);
        value_log = std::log(value);
    } else if (f == "mz-kadec") {
        params.set("mu", cfg.mu);
        value = bounds::mz_kadec_bound(cfg.mu);
        value_log = bounds::mz_kadec_bound_log(cfg.mu);
    } else if (f == "mz-avdonin") {
        params.set("delta", cfg.delta).set("L", cfg.L).set("N", cfg.N);
        params.set("mu_star", cfg.mu_star);
        value = bounds::mz_avdonin_bound(cfg.delta, cfg.L, cfg.N, cfg.mu_star);
        value_log = bounds::mz_avdonin_bound_log(cfg.delta, cfg.L, cfg.N, cfg.mu_star);
    } else {
        require_input(false, "unknown bound formula: " + f);
    }

    if (cfg.format == Format::csv) {
        std::string body = csv_header("bound", params, cfg.seed);
        body += "name,value,value_log\n";
        body += f + "," + report::fmt(value) + "," + report::fmt(value_log) + "\n";
        return {std::move(body), 0};
    }

    auto rec = Value::object();
    rec.set("name", f);
    rec.set("value", value);
    rec.set("value_log", value_log);
    auto root = envelope("bound", std::move(params), cfg.seed);
    root.set("records", Value::array().push(std::move(rec)));
    root.set("summary", summary_value(0, 0, Value()));
    return {root.dump() + "\n", 0};
}

std::vector<int> sweep_dimensions(const RunConfig& cfg, int stride) {
    if (!cfg.d_values.empty()) return cfg.d_values;
    require_input(cfg.dmax >= stride, "dmax must be at least " +
                                          std::to_string(stride));
    std::vector<int> ds;
    for (int d = stride; d <= cfg.dmax; d += stride) ds.push_back(d);
    return ds;
}

Outcome run_sweep(const RunConfig& cfg) {
    mz::TriangularFamily family;
    auto params = Value::object();
    params.set("family", cfg.family);
    int stride = 1;
    if (cfg.family == "canonical") {
        family = mz::canonical_family();
    } else if (cfg.family == "counterexample") {
        family = mz::counterexample_scan_family();
    } else if (cfg.family == "kadec") {
        family = mz::kadec_family(cfg.mu_max, cfg.seed);
        params.set("mu_max", cfg.mu_max);
    } else if (cfg.family == "avdonin") {
        family = mz::avdonin_family(cfg.L, cfg.N, cfg.mu_star, cfg.seed,
                                    cfg.min_delta);
        params.set("L", cfg.L).set("N", cfg.N).set("mu_star", cfg.mu_star);
        params.set("min_delta", cfg.min_delta);
        stride = cfg.N; // block length must divide every scanned dimension
    } else {
        require_input(false, "unknown family: " + cfg.family);
    }

    const auto ds = sweep_dimensions(cfg, stride);
    auto dlist = Value::array();
    for (int d : ds) dlist.push(d);
    params.set("d_values", std::move(dlist));

    const auto scan = mz::mz_scan(family, ds);

    if (cfg.format == Format::csv) {
        return {csv_header("sweep", params, cfg.seed) + report::scan_csv(scan),
                0};
    }

    auto root = envelope("sweep", std::move(params), cfg.seed);
    root.set("records", scan_records(scan));
    auto aggregates = Value::object();
    aggregates.set("A_inf", scan.A_inf);
    aggregates.set("B_sup", scan.B_sup);
    aggregates.set("delta_family", scan.delta_family);
    auto summary = summary_value(scan.pass_count, scan.fail_count,
                                 Value(scan.min_margin_log));
    summary.set("range_restricted", std::move(aggregates));
    root.set("summary", std::move(summary));
    return {root.dump() + "\n", 0};
}

Outcome run_verify(const RunConfig& cfg) {
    mz::VerifyReport rep;
    auto params = Value::object();
    params.set("suite", cfg.suite);
    params.set("trials", cfg.trials);

    if (cfg.suite == "kadec") {
        params.set("dmax", cfg.dmax).set("mu_max", cfg.mu_max);
        std::vector<int> ds;
        for (int d = 1; d <= cfg.dmax; ++d) ds.push_back(d);
        rep = mz::mz_kadec_verify(ds, cfg.mu_max, cfg.trials, cfg.seed);
    } else if (cfg.suite == "general-kadec") {
        params.set("dmax", cfg.dmax).set("mu", cfg.mu);
        std::vector<int> ds;
        for (int d = 1; d <= cfg.dmax; ++d) ds.push_back(d);
        rep = mz::mz_general_kadec_verify(mz::canonical_family(), cfg.mu, ds,
                                          cfg.trials, cfg.seed);
    } else if (cfg.suite == "avdonin") {
        params.set("dmax", cfg.dmax);
        rep = avdonin_verify(cfg.trials, cfg.dmax, cfg.seed);
    } else if (cfg.suite == "sine-type") {
        params.set("kmax", cfg.kmax);
        rep = sine_type_verify(cfg.trials, cfg.kmax, cfg.seed);
    } else if (cfg.suite == "gautschi") {
        params.set("dmax", cfg.dmax);
        rep = gautschi_verify(cfg.trials, cfg.dmax, cfg.seed);
    } else {
        require_input(false, "unknown suite: " + cfg.suite);
    }

    const int status = rep.failures == 0 ? 0 : 1;
    if (cfg.format == Format::csv) {
        return {csv_header("verify", params, cfg.seed) +
                    report::verify_csv(rep),
                status};
    }
    auto root = envelope("verify", std::move(params), cfg.seed);
    root.set("records", verify_records(rep));
    root.set("summary", summary_value(rep.checks - rep.failures, rep.failures,
                                      Value(rep.min_margin_log)));
    return {root.dump() + "\n", status};
}

Outcome run_a2(const RunConfig& cfg) {
    const auto nodes = spectra::parse_node_spec(cfg.nodes);
    const auto spec = spectra::to_line(nodes);
    const auto grid = analytic::periodic_weight(spec, cfg.y, cfg.grid_size);
    const double a2 = analytic::a2_constant(grid, cfg.max_scale);

    auto params = Value::object();
    params.set("nodes", cfg.nodes);
    params.set("y", cfg.y);
    params.set("grid_size", cfg.grid_size);
    params.set("max_scale", cfg.max_scale);

    if (cfg.format == Format::csv) {
        std::string body = csv_header("a2", params, cfg.seed);
        body += "period,y,grid_size,max_scale,a2\n";
        body += report::fmt(spec.period) + "," + report::fmt(cfg.y) + "," +
                std::to_string(cfg.grid_size) + "," +
                report::fmt(cfg.max_scale) + "," + report::fmt(a2) + "\n";
        return {std::move(body), 0};
    }

    auto rec = Value::object();
    rec.set("period", spec.period);
    rec.set("y", cfg.y);
    rec.set("grid_size", cfg.grid_size);
    rec.set("max_scale", cfg.max_scale);
    rec.set("a2", a2);
    auto root = envelope("a2", std::move(params), cfg.seed);
    root.set("records", Value::array().push(std::move(rec)));
    root.set("summary", summary_value(0, 0, Value()));
    return {root.dump() + "\n", 0};
}

Outcome run_phase(const RunConfig& cfg) {
    const auto nodes = spectra::parse_node_spec(cfg.nodes);
    const auto spec = spectra::to_line(nodes);
    const auto grid = analytic::phase_alpha(spec, cfg.y, cfg.grid_size);

    auto params = Value::object();
    params.set("nodes", cfg.nodes);
    params.set("y", cfg.y);
    params.set("grid_size", cfg.grid_size);

    const double h = grid.period / grid.grid_size;
    if (cfg.format == Format::csv) {
        std::vector<double> xs(grid.samples.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            xs[i] = static_cast<double>(i) * h;
        const std::string header =
            envelope("phase", Value(params), cfg.seed).dump(0);
        return {report::grid_csv(header, "x", "alpha", xs, grid.samples), 0};
    }

    auto records = Value::array();
    for (std::size_t i = 0; i < grid.samples.size(); ++i) {
        const double x = static_cast<double>(i) * h;
        auto rec = Value::object();
        rec.set("x", x);
        rec.set("alpha", grid.samples[i]);
        rec.set("alpha_closed", analytic::phase_alpha_closed(spec, cfg.y, x));
        records.push(std::move(rec));
    }
    auto root = envelope("phase", std::move(params), cfg.seed);
    root.set("records", std::move(records));
    auto summary = summary_value(0, 0, Value());
    summary.set("period_closure", grid.period_closure);
    root.set("summary", std::move(summary));
    return {root.dump() + "\n", 0};
}

Outcome run_check_poisson(const RunConfig& cfg) {
    require_input(cfg.t_points >= 1 && cfg.y_points >= 1,
                  "t_points and y_points must be positive");
    require_input(cfg.half_range >= 1, "half_range must be positive");

    auto params = Value::object();
    params.set("t_points", cfg.t_points);
    params.set("y_points", cfg.y_points);
    params.set("half_range", static_cast<std::int64_t>(cfg.half_range));

    const double y_lo = 0.1;
    const double y_hi = 8.0;
    int pass_count = 0;
    int fail_count = 0;
    auto records = Value::array();
    std::string csv_rows;

    for (int j = 0; j < cfg.y_points; ++j) {
        const double frac =
            cfg.y_points == 1 ? 0.0
                              : static_cast<double>(j) / (cfg.y_points - 1);
        const double y = y_lo * std::pow(y_hi / y_lo, frac);
        for (int i = 0; i < cfg.t_points; ++i) {
            const double t = (i + 0.5) / cfg.t_points - 0.5;
            const double closed = analytic::poisson_kernel_periodic(t, y, 1.0);
            const double truncated =
                analytic::poisson_kernel_sum(t, y, 1.0, cfg.half_range);
            const double tail =
                analytic::poisson_kernel_tail_bound(t, y, 1.0, cfg.half_range);
            const double diff = std::abs(closed - truncated);
            bool ok = diff <= tail + 1e-12;
            double pi_gap = std::numeric_limits<double>::quiet_NaN();
            double pi_cap = std::numeric_limits<double>::quiet_NaN();
            if (y >= 2.0) {
                pi_gap = std::abs(closed - kPi);
                pi_cap = 6.0 * kPi * std::exp(-2.0 * kPi * y);
                ok = ok && pi_gap <= pi_cap;
            }
            (ok ? pass_count : fail_count) += 1;

            if (cfg.format == Format::csv) {
                csv_rows += report::fmt(t) + "," + report::fmt(y) + "," +
                            report::fmt(closed) + "," +
                            report::fmt(truncated) + "," + report::fmt(diff) +
                            "," + report::fmt(tail) + "," +
                            report::fmt(pi_gap) + "," + report::fmt(pi_cap) +
                            "," + (ok ? "true" : "false") + "\n";
            } else {
                auto rec = Value::object();
                rec.set("t", t);
                rec.set("y", y);
                rec.set("closed", closed);
                rec.set("truncated", truncated);
                rec.set("abs_diff", diff);
                rec.set("tail_bound", tail);
                rec.set("pi_gap", y >= 2.0 ? Value(pi_gap) : Value());
                rec.set("pi_cap", y >= 2.0 ? Value(pi_cap) : Value());
                rec.set("pass", ok);
                records.push(std::move(rec));
            }
        }
    }

    const int status = fail_count == 0 ? 0 : 1;
    if (cfg.format == Format::csv) {
        std::string body = csv_header("check-poisson", params, cfg.seed);
        body += "t,y,closed,truncated,abs_diff,tail_bound,pi_gap,pi_cap,pass\n";
        body += csv_rows;
        return {std::move(body), status};
    }
    auto root = envelope("check-poisson", std::move(params), cfg.seed);
    root.set("records", std::move(records));
    root.set("summary", summary_value(pass_count, fail_count, Value()));
    return {root.dump() + "\n", status};
}

Outcome run_phi_decay(const RunConfig& cfg) {
    require_input(!cfg.phi_orders.empty(), "no orders given");
    auto params = Value::object();
    auto orders = Value::array();
    for (int L : cfg.phi_orders) orders.push(L);
    params.set("orders", std::move(orders));

    int pass_count = 0;
    int fail_count = 0;
    auto records = Value::array();
    std::string csv_rows;
    for (int L : cfg.phi_orders) {
        const auto rep = analytic::phi_decay_check(L);
        const bool ok = rep.sum_within_bound && rep.exact_within_sum;
        (ok ? pass_count : fail_count) += 1;
        if (cfg.format == Format::csv) {
            csv_rows += std::to_string(rep.L) + "," + std::to_string(rep.d) +
                        "," + report::fmt(rep.S_truncated) + "," +
                        report::fmt(rep.tail_bound) + "," +
                        report::fmt(rep.sum_bound) + "," +
                        report::fmt(rep.A_exact) + "," +
                        (rep.sum_within_bound ? "true" : "false") + "," +
                        (rep.exact_within_sum ? "true" : "false") + "," +
                        (ok ? "true" : "false") + "\n";
        } else {
            auto rec = Value::object();
            rec.set("L", rep.L);
            rec.set("d", rep.d);
            rec.set("S_truncated", rep.S_truncated);
            rec.set("tail_bound", rep.tail_bound);
            rec.set("sum_bound", rep.sum_bound);
            rec.set("A_exact", rep.A_exact);
            rec.set("sum_within_bound", rep.sum_within_bound);
            rec.set("exact_within_sum", rep.exact_within_sum);
            rec.set("pass", ok);
            records.push(std::move(rec));
        }
    }

    const int status = fail_count == 0 ? 0 : 1;
    if (cfg.format == Format::csv) {
        std::string body = csv_header("phi-decay", params, cfg.seed);
        body +=
            "L,d,S_truncated,tail_bound,sum_bound,A_exact,"
            "sum_within_bound,exact_within_sum,pass\n";
        body += csv_rows;
        return {std::move(body), status};
    }
    auto root = envelope("phi-decay", std::move(params), cfg.seed);
    root.set("records", std::move(records));
    root.set("summary", summary_value(pass_count, fail_count, Value()));
    return {root.dump() + "\n", status};
}

Outcome dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::exact: return run_exact(cfg);
        case Command::bound: return run_bound(cfg);
        case Command::sweep: return run_sweep(cfg);
        case Command::verify: return run_verify(cfg);
        case Command::a2: return run_a2(cfg);
        case Command::phase: return run_phase(cfg);
        case Command::check_poisson: return run_check_poisson(cfg);
        case Command::phi_decay: return run_phi_decay(cfg);
    }
    throw std::logic_error("riesz::cli: unreachable command");
}

int emit(const Outcome& outcome, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << outcome.body;
        return outcome.status;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f)
        throw std::runtime_error("riesz::cli: cannot open output file: " +
                                 output);
    f << outcome.body;
    out << "wrote " << output << "\n";
    return outcome.status;
}

std::string invocation(const std::vector<std::string>& args) {
    std::string s = "invocation: rieszbounds";
    for (const auto& a : args) {
        s += ' ';
        s += a;
    }
    return s;
}

} // namespace

mz::VerifyReport avdonin_verify(int trials, int dmax, std::uint64_t seed) {
    require_input(trials >= 1, "trials must be positive");
    require_input(dmax >= 2, "dmax must be at least 2");

    mz::VerifyReport report;
    report.suite = "avdonin";
    report.seed = seed;
    report.min_margin_log = kInf;

    static constexpr int kBlockChoices[3] = {2, 4, 8};
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<std::uint64_t>(t) + 1);
        int N = 0;
        do {
            N = kBlockChoices[rng.below(3)];
        } while (N > dmax);
        const int d =
            N * (1 + static_cast<int>(rng.below(
                         static_cast<std::uint64_t>(dmax / N))));
        const double L = rng.uniform(0.3, 2.0);
        const double mu_star = rng.uniform(0.0, 0.2);

        spectra::NodeSet nodes;
        spectra::PerturbationSpec pert;
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            pert = spectra::make_block_avdonin(d, L, N, mu_star,
                                               rng.next_u64());
            try {
                nodes = spectra::apply_perturbation(spectra::roots_of_unity(d),
                                                    pert);
            } catch (const std::invalid_argument&) {
                continue;
            }
            found = d * spectra::separation(nodes) >= 0.05;
        }
        if (!found)
            throw std::runtime_error(
                "riesz::cli: block draw kept violating the separation floor "
                "at d = " +
                std::to_string(d));

        const auto eb = vandermonde::exact_bounds(nodes);
        const double delta = d * spectra::separation(nodes);
        const double rho = mz::rho_average(pert.mu, N);
        const double bound_log = bounds::mz_avdonin_bound_log(delta, L, N, rho);

        mz::VerifyRecord rec;
        rec.trial = t;
        rec.d = d;
        rec.A = eb.A;
        rec.B = eb.B;
        rec.bound = std::exp(bound_log);
        rec.bound_log = bound_log;
        rec.margin_log = std::log(eb.A) - bound_log;
        rec.pass = rec.margin_log >= -kLogTol;
        report.checks += 1;
        if (!rec.pass) report.failures += 1;
        report.min_margin_log = std::min(report.min_margin_log, rec.margin_log);
        report.records.push_back(rec);
    }
    return report;
}

mz::VerifyReport sine_type_verify(int trials, int kmax, std::uint64_t seed) {
    require_input(trials >= 1, "trials must be positive");
    require_input(kmax >= 1, "kmax must be positive");

    mz::VerifyReport report;
    report.suite = "sine-type";
    report.seed = seed;
    report.min_margin_log = kInf;

    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<std::uint64_t>(t) + 1);
        const int K =
            1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(kmax)));

        spectra::NodeSet nodes;
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            try {
                nodes = draw_node_set(rng, K);
            } catch (const std::runtime_error&) {
                continue;
            }
            found = K * spectra::separation(nodes) >= 0.05;
        }
        if (!found)
            throw std::runtime_error(
                "riesz::cli: periodic draw kept violating the separation "
                "floor at K = " +
                std::to_string(K));

        const double y = K * std::log(3.0) / (2.0 * kPi);
        const auto spec = spectra::to_line(nodes);
        const auto grid = analytic::periodic_weight(spec, y);
        const auto ext = analytic::weight_extrema(grid);
        const double delta = K * spectra::separation(nodes);
        const double measured_log =
            bounds::sine_type_bound_log(delta, y, ext.min, ext.max);
        const double universal_log = bounds::periodic_bound_log(delta, K);
        const double bound_log = std::max(measured_log, universal_log);

        const auto eb = vandermonde::exact_bounds(nodes);
        mz::VerifyRecord rec;
        rec.trial = t;
        rec.d = K;
        rec.A = eb.A;
        rec.B = eb.B;
        rec.bound = std::exp(bound_log);
        rec.bound_log = bound_log;
        rec.margin_log = std::min(std::log(eb.A) - measured_log,
                                  std::log(eb.A) - universal_log);
        rec.pass = rec.margin_log >= -kLogTol;
        report.checks += 1;
        if (!rec.pass) report.failures += 1;
        report.min_margin_log = std::min(report.min_margin_log, rec.margin_log);
        report.records.push_back(rec);
    }
    return report;
}

mz::VerifyReport gautschi_verify(int trials, int dmax, std::uint64_t seed) {
    require_input(trials >= 1, "trials must be positive");
    require_input(dmax >= 1, "dmax must be positive");

    mz::VerifyReport report;
    report.suite = "gautschi";
    report.seed = seed;
    report.min_margin_log = kInf;

    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<std::uint64_t>(t) + 1);
        const int d =
            1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dmax)));

        spectra::NodeSet nodes;
        double inv = 0.0;
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            nodes = draw_node_set(rng, d);
            try {
                inv = vandermonde::inverse_norm(
                    vandermonde::build_vandermonde(nodes));
            } catch (const std::runtime_error&) {
                continue; // near-singular draw: reject
            }
            found = true;
        }
        if (!found)
            throw std::runtime_error(
                "riesz::cli: random draw stayed near-singular at d = " +
                std::to_string(d));

        const double bound_log = bounds::gautschi_bound_log(nodes);
        const auto eb = vandermonde::exact_bounds(nodes);

        mz::VerifyRecord rec;
        rec.trial = t;
        rec.d = d;
        rec.A = eb.A;
        rec.B = eb.B;
        rec.bound = std::exp(bound_log);
        rec.bound_log = bound_log;
        rec.margin_log = bound_log - std::log(inv);
        rec.pass = rec.margin_log >= -kLogTol;
        report.checks += 1;
        if (!rec.pass) report.failures += 1;
        report.min_margin_log = std::min(report.min_margin_log, rec.margin_log);
        report.records.push_back(rec);
    }
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "exact Riesz bounds of exponential systems, with every closed-form "
        "bound they dominate"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_str = "json";

    // one shared config option: flags mirror as `key = value` lines inside a
    // [subcommand] section; flags given on the command line win
    app.set_config("--config", "", "key = value file mirroring the flags");

    const auto add_output_flags = [&](CLI::App* sub) {
        sub->fallthrough(); // lets --config trail the subcommand
        sub->add_option("--format", format_str, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--output", cfg.output,
                        "report path (default: stdout)");
        sub->add_option("--seed", cfg.seed, "RNG seed, recorded in the report")
            ->capture_default_str();
    };

    auto* exact = app.add_subcommand("exact", "exact bounds of one node set");
    exact->add_option("--nodes", cfg.nodes,
                      "roots:<d> | counter:<d> | file:<path>")
        ->required();
    add_output_flags(exact);
    exact->callback([&] { cfg.command = Command::exact; });

    auto* bound =
        app.add_subcommand("bound", "evaluate one closed-form bound");
    bound->require_subcommand(1);
    bound->callback([&] { cfg.command = Command::bound; });
    const auto leaf = [&](const char* name, const char* desc) {
        auto* s = bound->add_subcommand(name, desc);
        std::string captured = name;
        s->callback([&cfg, captured] { cfg.formula = captured; });
        add_output_flags(s);
        return s;
    };
    leaf("kadec", "2 sin^2((pi/4)(1 - 4 mu))")
        ->add_option("--mu", cfg.mu, "sup displacement, grid units");
    {
        auto* s = leaf("avdonin", "block-averaged displacement bound");
        s->add_option("--delta", cfg.delta, "separation");
        s->add_option("--L", cfg.L, "hard displacement bound");
        s->add_option("--N", cfg.N, "block length");
        s->add_option("--mu-star", cfg.mu_star, "sup block mean");
    }
    {
        auto* s = leaf("sine-type", "two-constant horizontal-line bound");
        s->add_option("--delta", cfg.delta, "separation");
        s->add_option("--y", cfg.y, "line height");
        s->add_option("--m", cfg.m, "lower modulus constant");
        s->add_option("--M", cfg.M, "upper modulus constant");
    }
    {
        auto* s = leaf("general-stability", "phase-modulus stability bound");
        s->add_option("--delta", cfg.delta, "separation");
        s->add_option("--y0", cfg.y0, "height, at least 1");
        s->add_option("--tau", cfg.tau, "phase modulus, below pi/4");
    }
    leaf("bessel", "upper bound 8 pi / min(delta, 1)")
        ->add_option("--delta", cfg.delta, "separation");
    {
        auto* s = leaf("ingham", "(a/pi^2)(1 - 1/(a delta)^2) for a delta > 1");
        s->add_option("--a", cfg.a, "interval half-length parameter");
        s->add_option("--delta", cfg.delta, "separation");
    }
    {
        auto* s = leaf("periodic", "universal density-one periodic bound");
        s->add_option("--delta", cfg.delta, "separation, in (0, 1]");
        s->add_option("--K", cfg.K, "period");
    }
    leaf("gautschi", "row-product bound on the inverse norm")
        ->add_option("--nodes", cfg.nodes,
                     "roots:<d> | counter:<d> | file:<path>")
        ->required();
    {
        auto* s = leaf("basis-perturbation",
                       "(sqrt(A) - 8 pi mu / delta)^2 under displacement mu");
        s->add_option("--A", cfg.A, "lower bound of the base system");
        s->add_option("--delta", cfg.delta, "separation");
        s->add_option("--mu", cfg.mu, "sup displacement, grid units");
    }
    {
        auto* s = leaf("hs-ratio", "two-height modulus ratio m / M");
        s->add_option("--m", cfg.m, "lower modulus constant");
        s->add_option("--M", cfg.M, "upper modulus constant");
    }
    leaf("mz-kadec", "sampling form of the quarter bound")
        ->add_option("--mu", cfg.mu, "sup displacement, grid units");
    {
        auto* s = leaf("mz-avdonin", "sampling form of the block bound");
        s->add_option("--delta", cfg.delta, "family separation");
        s->add_option("--L", cfg.L, "hard displacement bound");
        s->add_option("--N", cfg.N, "block length");
        s->add_option("--mu-star", cfg.mu_star, "block-average magnitude");
    }

    auto* sweep = app.add_subcommand(
        "sweep", "scan a triangular family across dimensions");
    sweep->add_option("--family", cfg.family,
                      "canonical | counterexample | kadec | avdonin")
        ->required()
        ->check(CLI::IsMember(
            {"canonical", "counterexample", "kadec", "avdonin"}));
    sweep->add_option("--d", cfg.d_values, "explicit dimension list")
        ->delimiter(',');
    sweep->add_option("--dmax", cfg.dmax, "scan 1..dmax when --d is absent")
        ->capture_default_str();
    sweep->add_option("--mu-max", cfg.mu_max, "kadec: sup displacement")
        ->capture_default_str();
    sweep->add_option("--L", cfg.L, "avdonin: hard displacement bound")
        ->capture_default_str();
    sweep->add_option("--N", cfg.N, "avdonin: block length")
        ->capture_default_str();
    sweep->add_option("--mu-star", cfg.mu_star, "avdonin: sup block mean")
        ->capture_default_str();
    sweep->add_option("--min-delta", cfg.min_delta,
                      "avdonin: redraw floor on d * delta_circ")
        ->capture_default_str();
    add_output_flags(sweep);
    sweep->callback([&] { cfg.command = Command::sweep; });

    auto* verify =
        app.add_subcommand("verify", "randomized dominance suite");
    verify->add_option("--suite", cfg.suite,
                       "kadec | avdonin | general-kadec | sine-type | gautschi")
        ->required()
        ->check(CLI::IsMember(
            {"kadec", "avdonin", "general-kadec", "sine-type", "gautschi"}));
    verify->add_option("--trials", cfg.trials, "independent trials")
        ->capture_default_str();
    verify->add_option("--dmax", cfg.dmax, "largest dimension")
        ->capture_default_str();
    verify->add_option("--kmax", cfg.kmax, "sine-type: largest period")
        ->capture_default_str();
    verify->add_option("--mu-max", cfg.mu_max, "kadec: sup displacement")
        ->capture_default_str();
    verify->add_option("--mu", cfg.mu, "general-kadec: sup displacement")
        ->capture_default_str();
    add_output_flags(verify);
    verify->callback([&] { cfg.command = Command::verify; });

    auto* a2 = app.add_subcommand(
        "a2", "Muckenhoupt estimate of the periodic weight");
    a2->add_option("--nodes", cfg.nodes, "roots:<d> | counter:<d> | file:<path>")
        ->required();
    a2->add_option("--y", cfg.y, "weight height")->capture_default_str();
    a2->add_option("--grid-size", cfg.grid_size, "power-of-two sample count")
        ->capture_default_str();
    a2->add_option("--max-scale", cfg.max_scale,
                   "largest interval, in periods")
        ->capture_default_str();
    add_output_flags(a2);
    a2->callback([&] { cfg.command = Command::a2; });

    auto* phase = app.add_subcommand("phase", "phase function samples");
    phase->add_option("--nodes", cfg.nodes,
                      "roots:<d> | counter:<d> | file:<path>")
        ->required();
    phase->add_option("--y", cfg.y, "height")->capture_default_str();
    phase->add_option("--grid-size", cfg.grid_size,
                      "power-of-two sample count")
        ->capture_default_str();
    add_output_flags(phase);
    phase->callback([&] { cfg.command = Command::phase; });

    auto* poisson = app.add_subcommand(
        "check-poisson", "closed kernel form vs truncated lattice sum");
    poisson->add_option("--t-points", cfg.t_points, "offsets across one period")
        ->capture_default_str();
    poisson->add_option("--y-points", cfg.y_points,
                        "log-spaced heights in [0.1, 8]")
        ->capture_default_str();
    poisson->add_option("--half-range", cfg.half_range,
                        "truncation radius of the lattice sum")
        ->capture_default_str();
    add_output_flags(poisson);
    poisson->callback([&] { cfg.command = Command::check_poisson; });

    auto* phi = app.add_subcommand(
        "phi-decay", "spectral-sum decay of the flat-top family");
    phi->add_option("--L", cfg.phi_orders, "orders, each in [2, 8]")
        ->delimiter(',')
        ->capture_default_str();
    add_output_flags(phi);
    phi->callback([&] { cfg.command = Command::phi_decay; });

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("rieszbounds");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    cfg.format = format_str == "csv" ? Format::csv : Format::json;

    try {
        return emit(dispatch(cfg), cfg.output, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << invocation(args) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n" << invocation(args) << "\n";
        return 3;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace riesz::cli
