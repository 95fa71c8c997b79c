#include "wavectl/core.hpp"

#include <cmath>
#include <sstream>

namespace wavectl {

Grid Grid::uniform(int cells) {
    if (cells < 2) throw ParamViolation("grid cells must satisfy n >= 2");
    Grid g;
    g.n = cells;
    g.h = 1.0 / cells;
    return g;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> xs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) xs[static_cast<std::size_t>(i)] = x(i);
    xs.back() = 1.0;
    return xs;
}

ScalarField ScalarField::sample(const Grid& g, const std::function<double(double)>& f) {
    ScalarField out(g);
    for (int i = 0; i <= g.n; ++i) out.values[static_cast<std::size_t>(i)] = f(g.x(i));
    return out;
}

bool ScalarField::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

WavePair::WavePair(ScalarField d, ScalarField v) : u(std::move(d)), ut(std::move(v)) {
    if (u.grid != ut.grid) throw ParamViolation("wave pair fields must share one grid");
}

namespace {

void require(bool ok, const char* inequality) {
    if (!ok) {
        std::ostringstream os;
        os << "parameter violation: " << inequality;
        throw ParamViolation(os.str());
    }
}

}  // namespace

const Params& validate_params(const Params& p) {
    require(p.q > 0.0, "q > 0");
    if (p.variant == Variant::UnstableSpring) {
        require(p.c0 > 0.0 && p.c0 < 1.0, "c0 in (0,1)");
        require(p.c1 > 0.0, "c1 > 0");
        require(p.c2 > 0.0, "c2 > 0");
        require(p.c3 > 0.0, "c3 > 0");
    } else {
        require(p.q != 1.0, "q != 1");
        require(p.c0 != 1.0, "c0 != 1");
        require(p.c2 != 1.0, "c2 != 1");
        require(p.c1 / (1.0 - p.c0) > 0.0, "c1/(1-c0) > 0");
        require((p.c0 - p.q) / (1.0 - p.c0) > 0.0, "(c0-q)/(1-c0) > 0");
        require((p.c2 - p.q) / (1.0 - p.c2) > 0.0, "(c2-q)/(1-c2) > 0");
        require(p.c3 > 0.0, "c3 > 0");
    }
    return p;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform in [-1,1), deterministic in (seed, k).
double noise_sample(std::uint64_t seed, std::uint64_t k) {
    const std::uint64_t bits = splitmix64(seed ^ splitmix64(k + 1));
    const double unit = static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
    return 2.0 * unit - 1.0;
}

}  // namespace

double sample_disturbance(const DisturbanceSpec& spec, double t) {
    return std::visit(
        [t](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZeroSignal>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, ConstantSignal>) {
                return s.amplitude;
            } else if constexpr (std::is_same_v<T, HarmonicSum>) {
                double d = 0.0;
                for (const auto& term : s.terms)
                    d += term.sin_amp * std::sin(term.freq * t) +
                         term.cos_amp * std::cos(term.freq * t);
                return d;
            } else if constexpr (std::is_same_v<T, BoundedNoise>) {
                if (s.interval <= 0.0) return 0.0;
                const auto k = static_cast<std::uint64_t>(std::floor(t / s.interval));
                return s.amplitude * noise_sample(s.seed, k);
            } else {
                return s.amplitude * std::exp(-s.rate * t) * std::sin(5.0 * t);
            }
        },
        spec);
}

double disturbance_bound(const DisturbanceSpec& spec) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZeroSignal>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, ConstantSignal>) {
                return std::abs(s.amplitude);
            } else if constexpr (std::is_same_v<T, HarmonicSum>) {
                double b = 0.0;
                for (const auto& term : s.terms)
                    b += std::abs(term.sin_amp) + std::abs(term.cos_amp);
                return b;
            } else {
                return std::abs(s.amplitude);
            }
        },
        spec);
}

double eval_uncertainty(const UncertaintySpec& spec, const WavePair& s) {
    return std::visit(
        [&s](const auto& u) -> double {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, ZeroUncertainty>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, TraceGain>) {
                return u.gain * s.u.right();
            } else if constexpr (std::is_same_v<T, EnergySaturation>) {
                return u.gain * std::tanh(u.scale * energy_norm_sq(s));
            } else {
                return u.gain * std::sin(integral(s.u));
            }
        },
        spec);
}

std::vector<double> spatial_derivative(const ScalarField& f) {
    const int n = f.grid.n;
    const double h = f.grid.h;
    const auto& v = f.values;
    std::vector<double> d(v.size());
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (int i = 1; i < n; ++i)
        d[static_cast<std::size_t>(i)] =
            (v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i) - 1]) / (2.0 * h);
    d[static_cast<std::size_t>(n)] =
        (3.0 * v[static_cast<std::size_t>(n)] - 4.0 * v[static_cast<std::size_t>(n) - 1] +
         v[static_cast<std::size_t>(n) - 2]) /
        (2.0 * h);
    return d;
}

namespace {

double trapezoid(const std::vector<double>& samples, double h) {
    double acc = 0.5 * (samples.front() + samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) acc += samples[i];
    return acc * h;
}

}  // namespace

double energy_norm_sq(const WavePair& s) {
    const auto ux = spatial_derivative(s.u);
    std::vector<double> sq(s.u.values.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double a = s.u.values[i];
        const double b = ux[i];
        const double c = s.ut.values[i];
        sq[i] = a * a + b * b + c * c;
    }
    return trapezoid(sq, s.u.grid.h);
}

double h1_norm_sq(const ScalarField& f) {
    const auto fx = spatial_derivative(f);
    std::vector<double> sq(f.values.size());
    for (std::size_t i = 0; i < sq.size(); ++i)
        sq[i] = f.values[i] * f.values[i] + fx[i] * fx[i];
    return trapezoid(sq, f.grid.h);
}

double h1_norm_sq(const TransportField& f) { return h1_norm_sq(f.f); }

double integral(const ScalarField& f) { return trapezoid(f.values, f.grid.h); }

}  // namespace wavectl
