#include "riesz/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "riesz/vandermonde.hpp"

namespace riesz::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("riesz::analytic: ") + msg);
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void validate_spectrum(const spectra::PeriodicSpectrum& spec) {
    require(std::isfinite(spec.period) && spec.period > 0.0,
            "period must be positive");
    require(!spec.points.empty(), "spectrum has no points");
    for (std::size_t k = 0; k < spec.points.size(); ++k) {
        const double x = spec.points[k];
        require(std::isfinite(x) && x >= 0.0 && x < spec.period,
                "spectrum points must lie in [0, period)");
        if (k > 0)
            require(x > spec.points[k - 1], "spectrum points must be strictly increasing");
    }
}

double kernel_decay(double y, double P) { return std::exp(-kTwoPi * y / P); }

// arctan(q sin t / (1 - q cos t)); the conjugate series sum_k (q^k/k) sin(kt)
double conj_atan(double q, double t) {
    return std::atan2(q * std::sin(t), 1.0 - q * std::cos(t));
}

// golden-section minimum of f on [a, b]
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double a, double b) {
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * (std::abs(a) + std::abs(b) + 1.0);
         ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

} // namespace

// ---- periodic Poisson kernel ----

double poisson_kernel_periodic(double t, double y, double P) {
    require(std::isfinite(t), "t must be finite");
    require(y > 0.0, "y must be positive");
    require(P > 0.0, "P must be positive");
    const double q = kernel_decay(y, P);
    const double denom = 1.0 - 2.0 * q * std::cos(kTwoPi * t / P) + q * q;
    return (kPi / P) * (1.0 - q * q) / denom;
}

double poisson_kernel_sum(double t, double y, double P, long long half_range) {
    require(y > 0.0, "y must be positive");
    require(P > 0.0, "P must be positive");
    require(half_range >= 0, "half_range must be nonnegative");
    double s = 0.0;
    for (long long n = -half_range; n <= half_range; ++n) {
        const double u = t - static_cast<double>(n) * P;
        s += y / (u * u + y * y);
    }
    return s;
}

double poisson_kernel_tail_bound(double t, double y, double P,
                                 long long half_range) {
    require(y > 0.0 && P > 0.0, "y and P must be positive");
    const double R = static_cast<double>(half_range) * P;
    require(R > std::abs(t), "half_range * P must exceed |t|");
    return ((kPi / 2.0 - std::atan((R - t) / y)) +
            (kPi / 2.0 - std::atan((R + t) / y))) /
           P;
}

// ---- weights ----

WeightGrid periodic_weight(const spectra::PeriodicSpectrum& spec, double y,
                           int grid_size) {
    validate_spectrum(spec);
    require(y > 0.0, "y must be positive");
    require(power_of_two(grid_size) && grid_size >= 256,
            "grid_size must be a power of two >= 256");
    const double P = spec.period;
    const double q = kernel_decay(y, P);
    const double q2 = q * q;
    WeightGrid grid;
    grid.period = P;
    grid.y = y;
    grid.grid_size = grid_size;
    grid.eval = [pts = spec.points, P, q, q2](double x) {
        double w = 1.0;
        for (double xk : pts)
            w *= 1.0 - 2.0 * q * std::cos(kTwoPi * (x - xk) / P) + q2;
        return w;
    };
    grid.samples.resize(grid_size);
    const double h = P / grid_size;
    for (int i = 0; i < grid_size; ++i) grid.samples[i] = grid.eval(i * h);
    return grid;
}

Extrema weight_extrema(const WeightGrid& grid) {
    require(!grid.samples.empty(), "weight grid is empty");
    const int n = static_cast<int>(grid.samples.size());
    const double h = grid.period / n;
    int imin = 0, imax = 0;
    for (int i = 1; i < n; ++i) {
        if (grid.samples[i] < grid.samples[imin]) imin = i;
        if (grid.samples[i] > grid.samples[imax]) imax = i;
    }
    Extrema e;
    e.min = grid.samples[imin];
    e.max = grid.samples[imax];
    e.argmin = imin * h;
    e.argmax = imax * h;
    e.grid_size = n;
    if (grid.eval) {
        const auto& f = grid.eval;
        auto [xm, fm] = golden_min(f, e.argmin - h, e.argmin + h);
        if (fm < e.min) {
            e.min = fm;
            e.argmin = xm;
        }
        auto [xM, fM] = golden_min([&f](double x) { return -f(x); },
                                   e.argmax - h, e.argmax + h);
        if (-fM > e.max) {
            e.max = -fM;
            e.argmax = xM;
        }
        e.refined = true;
    }
    return e;
}

CertifiedExtrema certified_weight_extrema(const spectra::PeriodicSpectrum& spec,
                                          double y, int grid_size) {
    CertifiedExtrema out;
    bool first = true;
    double prev_min = 0.0, prev_max = 0.0;
    for (int gs = grid_size; gs <= kMaxGridSize; gs *= 2) {
        const Extrema e = weight_extrema(periodic_weight(spec, y, gs));
        if (first) {
            out.extrema = e;
            first = false;
        } else {
            // envelopes only tighten, so refinement is monotone by construction
            prev_min = out.extrema.min;
            prev_max = out.extrema.max;
            if (e.min < out.extrema.min) {
                out.extrema.min = e.min;
                out.extrema.argmin = e.argmin;
            }
            if (e.max > out.extrema.max) {
                out.extrema.max = e.max;
                out.extrema.argmax = e.argmax;
            }
            out.extrema.grid_size = gs;
            const double dm = std::abs(out.extrema.min - prev_min);
            const double dM = std::abs(out.extrema.max - prev_max);
            if (dm <= kRefineTol * (std::abs(prev_min) + 1e-300) &&
                dM <= kRefineTol * (std::abs(prev_max) + 1e-300)) {
                out.converged = true;
                break;
            }
        }
    }
    return out;
}

double a2_constant(const WeightGrid& grid, double max_scale_periods) {
    require(!grid.samples.empty(), "weight grid is empty");
    require(max_scale_periods > 0.0, "max_scale_periods must be positive");
    const int n = static_cast<int>(grid.samples.size());
    for (double w : grid.samples)
        require(w > 0.0 && std::isfinite(w), "weight samples must be positive");

    std::vector<double> pw(n + 1, 0.0), pv(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        pw[i + 1] = pw[i] + grid.samples[i];
        pv[i + 1] = pv[i] + 1.0 / grid.samples[i];
    }
    const double Tw = pw[n], Tv = pv[n];

    // sum of `count` consecutive samples starting at index `start`, periodic
    auto range_sum = [&](const std::vector<double>& p, double total, int start,
                         long long count) {
        const long long full = count / n;
        const int rem = static_cast<int>(count % n);
        double s = full * total;
        const int end = start + rem;
        s += (end <= n) ? p[end] - p[start] : (p[n] - p[start]) + p[end - n];
        return s;
    };

    double best = 0.0;
    for (long long L = 1; static_cast<double>(L) <= max_scale_periods * n;
         L *= 2) {
        const int wrapL = static_cast<int>(L % n);
        for (int i = 0; i < n; ++i) {
            const int j = (i + wrapL) % n;
            const double sw =
                range_sum(pw, Tw, i, L + 1) - 0.5 * (grid.samples[i] + grid.samples[j]);
            const double sv = range_sum(pv, Tv, i, L + 1) -
                              0.5 * (1.0 / grid.samples[i] + 1.0 / grid.samples[j]);
            best = std::max(best, sw * sv / (static_cast<double>(L) * L));
        }
    }
    return best;
}

// ---- phase ----

PhaseGrid phase_alpha(const spectra::PeriodicSpectrum& spec, double y,
                      int grid_size) {
    validate_spectrum(spec);
    require(y > 0.0, "y must be positive");
    require(power_of_two(grid_size), "grid_size must be a power of two");
    const double P = spec.period;
    const long long panels = 8LL * grid_size;
    const double h = P / panels;

    auto g = [&](double t) {
        double s = 0.0;
        for (double xk : spec.points) s += poisson_kernel_periodic(t - xk, y, P);
        return s;
    };

    PhaseGrid grid;
    grid.period = P;
    grid.y = y;
    grid.grid_size = grid_size;
    grid.samples.resize(grid_size);
    grid.samples[0] = 0.0;

    double integral = 0.0;
    double g_left = g(0.0);
    for (long long k = 0; k < panels; ++k) {
        const double g_mid = g((k + 0.5) * h);
        const double g_right = g((k + 1.0) * h);
        integral += (h / 6.0) * (g_left + 4.0 * g_mid + g_right);
        g_left = g_right;
        if ((k + 1) % 8 == 0) {
            const long long i = (k + 1) / 8;
            const double x = i * (P / grid_size);
            const double alpha = 2.0 * integral - kTwoPi * x;
            if (i < grid_size)
                grid.samples[static_cast<std::size_t>(i)] = alpha;
            else
                grid.period_closure = alpha;
        }
    }
    return grid;
}

double phase_alpha_closed(const spectra::PeriodicSpectrum& spec, double y,
                          double x) {
    validate_spectrum(spec);
    require(y > 0.0, "y must be positive");
    const double P = spec.period;
    const double q = kernel_decay(y, P);
    const double m = static_cast<double>(spec.points.size());
    double s = 0.0;
    for (double xk : spec.points)
        s += conj_atan(q, kTwoPi * (x - xk) / P) - conj_atan(q, kTwoPi * (-xk) / P);
    return 2.0 * s + kTwoPi * x * (m - P) / P;
}

// ---- phase modulus tau ----

namespace {

// F(x) = sum_j [Phi(x + mu_j - j) - Phi(x - j)] with P = d; the arctan parts
// carry the oscillation, the linear parts collapse to pi * sum(mu) / d
struct TauField {
    double P;
    double q;
    double linear;
    const std::vector<double>* mu;

    TauField(const spectra::PerturbationSpec& pert, double y)
        : P(pert.d), q(kernel_decay(y, pert.d)), mu(&pert.mu) {
        double sum = 0.0;
        for (double m : *mu) sum += m;
        linear = kPi * sum / P;
    }

    double operator()(double x) const {
        double s = linear;
        for (std::size_t j = 0; j < mu->size(); ++j) {
            const double base = kTwoPi * (x - static_cast<double>(j)) / P;
            s += conj_atan(q, base + kTwoPi * (*mu)[j] / P) - conj_atan(q, base);
        }
        return s;
    }
};

} // namespace

double tau_at(const spectra::PerturbationSpec& pert, double y, double x) {
    require(pert.d >= 1 && static_cast<int>(pert.mu.size()) == pert.d,
            "perturbation is empty or inconsistent");
    require(y > 0.0, "y must be positive");
    return std::abs(TauField(pert, y)(x));
}

double tau_direct_sum(const spectra::PerturbationSpec& pert, double y, double x,
                      long long half_range) {
    require(pert.d >= 1 && static_cast<int>(pert.mu.size()) == pert.d,
            "perturbation is empty or inconsistent");
    require(y > 0.0, "y must be positive");
    const int d = pert.d;
    double s = 0.0;
    for (long long n = -half_range; n <= half_range; ++n) {
        const int j = static_cast<int>(((n % d) + d) % d);
        const double u = x - static_cast<double>(n);
        s += std::atan((u + pert.mu[j]) / y) - std::atan(u / y);
    }
    return std::abs(s);
}

TauResult tau_sup(const spectra::PerturbationSpec& pert, double y,
                  int grid_size) {
    require(pert.d >= 1 && static_cast<int>(pert.mu.size()) == pert.d,
            "perturbation is empty or inconsistent");
    require(y > 0.0, "y must be positive");
    require(power_of_two(grid_size), "grid_size must be a power of two");
    const TauField F(pert, y);
    const double P = F.P;

    TauResult out;
    bool first = true;
    for (int gs = grid_size; gs <= kMaxGridSize; gs *= 2) {
        const double h = P / gs;
        double best = -1.0, bestx = 0.0;
        for (int i = 0; i < gs; ++i) {
            const double v = std::abs(F(i * h));
            if (v > best) {
                best = v;
                bestx = i * h;
            }
        }
        auto [xr, negv] = golden_min([&F](double x) { return -std::abs(F(x)); },
                                     bestx - h, bestx + h);
        if (-negv > best) {
            best = -negv;
            bestx = xr;
        }
        const double prev = out.tau;
        if (best > out.tau) {
            out.tau = best;
            out.argmax = bestx;
        }
        out.grid_size = gs;
        if (!first && out.tau - prev <= kRefineTol * (prev + 1e-300)) {
            out.converged = true;
            break;
        }
        first = false;
    }
    return out;
}

// ---- counting diagnostic ----

namespace {

// N(x) summed over residue classes by closed form
double count_at(const std::vector<double>& pts, double P, double x) {
    double n = 0.0;
    for (double xk : pts) {
        if (x >= 0.0)
            n += std::floor((x - xk) / P) + 1.0;
        else
            n += std::ceil((x - xk) / P);
    }
    return n;
}

} // namespace

CountingDiagnostic counting_diagnostic(const spectra::PeriodicSpectrum& spec,
                                       double y, double window, int grid_size) {
    validate_spectrum(spec);
    require(y > 0.0, "y must be positive");
    require(power_of_two(grid_size), "grid_size must be a power of two");
    const double P = spec.period;
    const double m = static_cast<double>(spec.points.size());
    require(std::abs(m - P) < 1e-9,
            "counting diagnostic requires a density-one spectrum");
    require(window >= 4.0 * P - 1e-9, "window must cover at least 4 periods");

    const long long periods =
        static_cast<long long>(std::ceil(window / P - 1e-9));
    const double W = static_cast<double>(periods) * P;
    const double h = P / grid_size;
    const long long half = periods * grid_size; // sample count per half-window

    CountingDiagnostic diag;
    CountingGrid& grid = diag.grid;
    grid.window = W;
    grid.step = h;
    grid.x.resize(static_cast<std::size_t>(2 * half + 1));
    grid.counts.resize(grid.x.size());
    grid.psi.resize(grid.x.size());
    for (long long i = 0; i <= 2 * half; ++i) {
        const double x = static_cast<double>(i - half) * h;
        const double n = count_at(spec.points, P, x);
        grid.x[static_cast<std::size_t>(i)] = x;
        grid.counts[static_cast<std::size_t>(i)] = n;
        grid.psi[static_cast<std::size_t>(i)] = kTwoPi * (x - n);
    }

    // jump locations of N inside [-W, W]
    std::vector<double> breaks{-W};
    for (double xk : spec.points) {
        const long long lo = static_cast<long long>(std::ceil((-W - xk) / P));
        for (long long n = lo; xk + static_cast<double>(n) * P < W; ++n) {
            const double lam = xk + static_cast<double>(n) * P;
            if (lam > -W) breaks.push_back(lam);
        }
    }
    breaks.push_back(W);
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> level(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        level[i] = count_at(spec.points, P, 0.5 * (breaks[i] + breaks[i + 1]));

    // period mean of psi: (2 pi / P)(P^2/2 - sum_k (P - x_k))
    double mean_defect = 0.0;
    for (double xk : spec.points) mean_defect += P - xk;
    const double psi_mean = (kTwoPi / P) * (0.5 * P * P - mean_defect);

    // normalized Poisson extension of psi restricted to [-W, W]; the linear
    // and the piecewise-constant parts both integrate in closed form, and the
    // omitted tail contributes its periodic mean
    auto extension = [&](double x) {
        const double mass =
            (std::atan((W - x) / y) + std::atan((W + x) / y)) / kPi;
        const double lu = (W - x) * (W - x) + y * y;
        const double lv = (W + x) * (W + x) + y * y;
        const double lin = x * mass + (y / kTwoPi) * (std::log(lu) - std::log(lv));
        double step = 0.0;
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
            step += level[i] * (std::atan((breaks[i + 1] - x) / y) -
                                std::atan((breaks[i] - x) / y));
        step /= kPi;
        return kTwoPi * (lin - step) + psi_mean * (1.0 - mass);
    };

    const PhaseGrid phase = phase_alpha(spec, y, grid_size);
    double fmin = std::numeric_limits<double>::infinity();
    double fmax = -fmin;
    const long long core = half / 2;
    for (long long i = -core; i <= core; ++i) {
        const double x = static_cast<double>(i) * h;
        const int idx = static_cast<int>(((i % grid_size) + grid_size) % grid_size);
        const double f = extension(x) + phase.samples[static_cast<std::size_t>(idx)];
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    diag.residual = 0.5 * (fmax - fmin);
    diag.fitted_const = 0.5 * (fmax + fmin);
    diag.core_points = static_cast<int>(2 * core + 1);
    return diag;
}

// ---- spectral decay family ----

double phi_kernel(int L, double x) {
    require(L >= 1, "L must be positive");
    if (x == 0.0) return 1.0;
    const double t = kPi * x / L;
    const double u = std::sin(t) / t;
    double p = 1.0;
    for (int i = 0; i < L; ++i) p *= u;
    return p;
}

PhiDecayReport phi_decay_check(int L) {
    require(L >= 2 && L <= 8, "L must lie in [2, 8]");
    PhiDecayReport rep;
    rep.L = L;
    rep.d = 4 * L;

    std::vector<double> theta(rep.d);
    for (int j = 0; j < rep.d; ++j)
        theta[j] = (L + 0.5 * j) / static_cast<double>(rep.d);
    const spectra::NodeSet nodes = spectra::make_node_set(std::move(theta));
    rep.A_exact = vandermonde::exact_bounds(nodes).A;

    const double R = 1e4 * L;
    const double period = 4.0 * L;
    double S = 0.0;
    for (int j = 0; j < rep.d; ++j) {
        const double xj = L + 0.5 * j;
        const long long lo = static_cast<long long>(std::ceil((-R - xj) / period));
        const long long hi = static_cast<long long>(std::floor((R - xj) / period));
        for (long long n = lo; n <= hi; ++n) {
            const double phi = phi_kernel(L, xj + static_cast<double>(n) * period);
            S += phi * phi;
        }
    }
    rep.S_truncated = S;

    // |phi_L| <= (L/pi)^L |x|^-L and spectrum gaps are >= 1/2, so each side's
    // tail is below 2 (L/pi)^{2L} (R - 1/2)^{1-2L} / (2L - 1)
    rep.tail_bound = 4.0 * std::pow(L / kPi, 2.0 * L) *
                     std::pow(R - 0.5, 1.0 - 2.0 * L) / (2.0 * L - 1.0);
    rep.sum_bound = 8.0 * std::pow(kPi, -static_cast<double>(L));
    rep.sum_within_bound = rep.S_truncated <= rep.sum_bound + rep.tail_bound;
    rep.exact_within_sum =
        rep.A_exact <= rep.S_truncated + rep.tail_bound + 1e-12;
    return rep;
}

// ---- two-height ratio ----

NuReport nu_bound_check(const spectra::PeriodicSpectrum& spec, double y,
                        int grid_size) {
    validate_spectrum(spec);
    require(y > 0.0, "y must be positive");
    require(power_of_two(grid_size), "grid_size must be a power of two");
    const double P = spec.period;
    const double delta = spectra::line_separation(spec);
    NuReport rep;
    rep.grid_size = grid_size;
    rep.bound = kTwoPi * y * (delta * delta + 4.0 * y * y) /
                (delta * delta * delta);
    rep.max_nu = -std::numeric_limits<double>::infinity();

    const double b = kPi * y / P;
    // log((cosh 2b - cos 2a)/2) = log|sin(a + ib)|^2, overflow-safe
    auto log_den = [&](double a2) {
        const double z = 2.0 * b;
        if (z > 40.0)
            return z - 2.0 * std::log(2.0) +
                   std::log1p(std::exp(-2.0 * z) - 2.0 * std::cos(a2) * std::exp(-z));
        return std::log(0.5 * (std::cosh(z) - std::cos(a2)));
    };

    const double h = P / grid_size;
    for (int i = 0; i < grid_size; ++i) {
        const double x = i * h;
        double dist = P;
        for (double xk : spec.points) {
            double r = std::abs(x - xk);
            r -= P * std::floor(r / P);
            dist = std::min(dist, std::min(r, P - r));
        }
        if (dist < 1e-9 * P) {
            ++rep.skipped;
            continue;
        }
        double nu = std::log1p(y * y / (dist * dist));
        for (double xk : spec.points) {
            const double a = kPi * (x - xk) / P;
            nu += 2.0 * std::log(std::abs(std::sin(a))) - log_den(2.0 * a);
        }
        rep.max_abs_nu = std::max(rep.max_abs_nu, std::abs(nu));
        rep.max_nu = std::max(rep.max_nu, nu);
    }
    return rep;
}

} // namespace riesz::analytic
