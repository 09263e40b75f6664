#include "riesz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "riesz/rng.hpp"
#include <nlohmann/json.hpp>

namespace riesz::spectra {

namespace {

double mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0; // floor rounding at negative multiples of 1
    return r;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("riesz::spectra: " + msg);
}

} // namespace

NodeSet make_node_set(std::vector<double> raw) {
    require(!raw.empty(), "node set is empty");
    for (double& x : raw) {
        require(std::isfinite(x), "node is not finite");
        x = mod1(x);
    }
    std::sort(raw.begin(), raw.end());
    const int d = static_cast<int>(raw.size());
    for (int j = 0; j + 1 < d; ++j)
        require(raw[j + 1] - raw[j] > kCollisionTol,
                "circular collision between nodes " + std::to_string(raw[j]) +
                    " and " + std::to_string(raw[j + 1]));
    if (d > 1)
        require(1.0 - (raw.back() - raw.front()) > kCollisionTol,
                "circular collision across the wrap between " +
                    std::to_string(raw.back()) + " and " +
                    std::to_string(raw.front()));
    return NodeSet{d, std::move(raw)};
}

double separation(const NodeSet& nodes) {
    if (nodes.d == 1) return 1.0;
    double gap = 1.0 - (nodes.theta.back() - nodes.theta.front());
    for (int j = 0; j + 1 < nodes.d; ++j)
        gap = std::min(gap, nodes.theta[j + 1] - nodes.theta[j]);
    return gap;
}

NodeSet roots_of_unity(int d) {
    require(d >= 1, "d must be positive");
    std::vector<double> t(d);
    for (int j = 0; j < d; ++j) t[j] = static_cast<double>(j) / d;
    return NodeSet{d, std::move(t)};
}

NodeSet counterexample_family(int d) {
    require(d >= 1, "d must be positive");
    std::vector<double> t{0.0};
    const int k = d / 2;
    if (d % 2 == 1) {
        for (int j = 1; j <= k; ++j) {
            t.push_back((j - 0.25) / d);
            t.push_back(mod1(-(j - 0.25) / d));
        }
    } else {
        for (int j = 1; j <= k - 1; ++j) {
            t.push_back((j - 0.25) / d);
            t.push_back(mod1(-(j - 0.25) / d));
        }
        t.push_back((k - 0.25) / d);
    }
    return make_node_set(std::move(t));
}

PeriodicSpectrum to_line(const NodeSet& nodes) {
    PeriodicSpectrum spec;
    spec.period = nodes.d;
    spec.points.reserve(nodes.theta.size());
    for (double th : nodes.theta) spec.points.push_back(nodes.d * th);
    return spec;
}

double line_separation(const PeriodicSpectrum& spec) {
    const int n = static_cast<int>(spec.points.size());
    require(n >= 1, "empty spectrum");
    if (n == 1) return spec.period;
    double gap = spec.period - (spec.points.back() - spec.points.front());
    for (int j = 0; j + 1 < n; ++j)
        gap = std::min(gap, spec.points[j + 1] - spec.points[j]);
    return gap;
}

PerturbationSpec make_uniform_kadec(int d, double mu_max, std::uint64_t seed) {
    require(d >= 1, "d must be positive");
    require(mu_max >= 0.0 && mu_max < 0.25, "mu_max must lie in [0, 1/4)");
    PerturbationSpec p;
    p.kind = PerturbationKind::uniform_kadec;
    p.d = d;
    p.seed = seed;
    p.mu_max = mu_max;
    p.mu.resize(d);
    CounterRng rng(seed);
    for (int j = 0; j < d; ++j) p.mu[j] = rng.uniform(-mu_max, mu_max);
    return p;
}

double block_mu_star(const std::vector<double>& mu, int N) {
    const int d = static_cast<int>(mu.size());
    require(N >= 1 && N <= d, "block length out of range");
    double worst = 0.0;
    for (int m = 0; m < d; ++m) {
        double s = 0.0;
        for (int i = 0; i < N; ++i) s += mu[(m * N + i) % d];
        worst = std::max(worst, std::abs(s) / N);
    }
    return worst;
}

PerturbationSpec make_block_avdonin(int d, double L, int N, double mu_star,
                                    std::uint64_t seed) {
    require(d >= 1, "d must be positive");
    require(N >= 1 && d % N == 0, "block length must divide d");
    require(L > 0.0, "L must be positive");
    require(mu_star >= 0.0 && mu_star < 0.25, "mu_star must lie in [0, 1/4)");
    require(mu_star <= L, "target mu_star exceeds the displacement bound L");
    PerturbationSpec p;
    p.kind = PerturbationKind::block_avdonin;
    p.d = d;
    p.seed = seed;
    p.L = L;
    p.N = N;
    p.mu_star = mu_star;
    p.mu.resize(d);

    // Per aligned block: draw, center to zero mean, then shift the whole block
    // by +-mu_star. Centered draws live in [-2, 2], so the scale (L - mu_star)/2
    // keeps |mu_j| <= L while every block mean is exactly +-mu_star.
    CounterRng rng(seed);
    const int blocks = d / N;
    const double scale = (L - mu_star) / 2.0;
    for (int m = 0; m < blocks; ++m) {
        std::vector<double> r(N);
        double mean = 0.0;
        for (int i = 0; i < N; ++i) {
            r[i] = rng.uniform(-1.0, 1.0);
            mean += r[i];
        }
        mean /= N;
        const double sign = (rng.next_double() < 0.5) ? -1.0 : 1.0;
        for (int i = 0; i < N; ++i)
            p.mu[m * N + i] = scale * (r[i] - mean) + sign * mu_star;
    }
    return p;
}

PerturbationSpec make_constant_shift(int d, double c) {
    require(d >= 1, "d must be positive");
    require(std::isfinite(c), "shift is not finite");
    PerturbationSpec p;
    p.kind = PerturbationKind::constant_shift;
    p.d = d;
    p.shift = c;
    p.mu.assign(d, c);
    return p;
}

NodeSet apply_perturbation(const NodeSet& base, const PerturbationSpec& pert) {
    require(base.d == pert.d, "perturbation size does not match node set");
    std::vector<double> t(base.d);
    for (int j = 0; j < base.d; ++j)
        t[j] = base.theta[j] + pert.mu[j] / base.d;
    return make_node_set(std::move(t));
}

NodeSet read_nodes_text(std::istream& in) {
    std::vector<double> vals;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double x;
        if (ls >> x) {
            vals.push_back(x);
            std::string rest;
            require(!(ls >> rest), "line " + std::to_string(lineno) +
                                       ": trailing content after node value");
        } else {
            std::string rest;
            require(!(ls.clear(), ls >> rest),
                    "line " + std::to_string(lineno) + ": not a number");
        }
    }
    return make_node_set(std::move(vals));
}

NodeSet read_nodes_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("riesz::spectra: bad JSON: ") +
                                    e.what());
    }
    require(j.is_array(), "JSON node file must be an array of numbers");
    std::vector<double> vals;
    for (const auto& v : j) {
        require(v.is_number(), "JSON node array holds a non-number");
        vals.push_back(v.get<double>());
    }
    return make_node_set(std::move(vals));
}

NodeSet read_nodes(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open node file: " + path);
    int c = in.peek();
    while (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        in.get();
        c = in.peek();
    }
    return (c == '[') ? read_nodes_json(in) : read_nodes_text(in);
}

NodeSet parse_node_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    require(colon != std::string::npos,
            "node spec must be roots:<d>, counter:<d> or file:<path>");
    const std::string head = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);
    if (head == "file") return read_nodes(tail);
    std::size_t used = 0;
    int d = 0;
    try {
        d = std::stoi(tail, &used);
    } catch (const std::exception&) {
        require(false, "node spec count is not an integer: " + tail);
    }
    require(used == tail.size(), "node spec count is not an integer: " + tail);
    if (head == "roots") return roots_of_unity(d);
    if (head == "counter") return counterexample_family(d);
    require(false, "unknown node spec kind: " + head);
    return {};
}

} // namespace riesz::spectra
