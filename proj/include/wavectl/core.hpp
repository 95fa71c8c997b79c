#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "wavectl/errors.hpp"

namespace wavectl {

/// Uniform mesh on [0,1] with n cells and n+1 nodes x_i = i*h, h = 1/n.
struct Grid {
    int n = 0;
    double h = 0.0;

    static Grid uniform(int cells);

    double x(int i) const { return i * h; }
    std::vector<double> nodes() const;

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Nodal samples of one field on a Grid (n+1 values).
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.n) + 1, fill) {}

    static ScalarField sample(const Grid& g, const std::function<double(double)>& f);

    double left() const { return values.front(); }
    double right() const { return values.back(); }
    bool all_finite() const;
};

/// (displacement, velocity) state of one second-order wave subsystem.
/// The velocity field is stored at the trailing half time step of the
/// explicit scheme; see kernels::wave_step.
struct WavePair {
    ScalarField u;   // displacement
    ScalarField ut;  // velocity

    WavePair() = default;
    WavePair(ScalarField d, ScalarField v);

    const Grid& grid() const { return u.grid; }
};

/// State of one first-order transport subsystem f_t = -f_x.
struct TransportField {
    ScalarField f;

    TransportField() = default;
    explicit TransportField(ScalarField field) : f(std::move(field)) {}
    explicit TransportField(const Grid& g, double fill = 0.0) : f(g, fill) {}
};

enum class Variant { UnstableSpring, AntistableDamper };

/// Boundary coefficient q and the four design gains c0..c3.
struct Params {
    Variant variant = Variant::UnstableSpring;
    double q = 1.0;
    double c0 = 0.5, c1 = 1.0, c2 = 1.0, c3 = 1.0;
};

/// Checks the variant-specific admissible region and returns p unchanged.
/// UnstableSpring: q > 0, c0 in (0,1), c1,c2,c3 > 0.
/// AntistableDamper: q > 0, q != 1, c1/(1-c0) > 0, (c0-q)/(1-c0) > 0,
/// (c2-q)/(1-c2) > 0, c3 > 0 (the ratios are what must be positive, not the
/// individual gains).
const Params& validate_params(const Params& p);

// --- disturbance signals d(t) ---------------------------------------------

struct ZeroSignal {};
struct ConstantSignal {
    double amplitude = 0.0;
};
struct HarmonicTerm {
    double sin_amp = 0.0;  // coefficient of sin(freq*t)
    double cos_amp = 0.0;  // coefficient of cos(freq*t)
    double freq = 0.0;
};
struct HarmonicSum {
    std::vector<HarmonicTerm> terms;
};
/// Seeded piecewise-constant signal, constant on intervals of width
/// `interval` (the runner sets this to the simulation step), clipped to
/// [-amplitude, amplitude]. Bit-reproducible for a fixed seed.
struct BoundedNoise {
    double amplitude = 0.0;
    std::uint64_t seed = 0;
    double interval = 0.01;
};
/// amplitude * exp(-rate*t) * sin(5t); square-integrable on [0,inf).
struct L2DecayingSignal {
    double amplitude = 0.0;
    double rate = 1.0;
};

using DisturbanceSpec =
    std::variant<ZeroSignal, ConstantSignal, HarmonicSum, BoundedNoise, L2DecayingSignal>;

double sample_disturbance(const DisturbanceSpec& spec, double t);

/// Supremum of |d(t)| implied by the spec (used by property tests).
double disturbance_bound(const DisturbanceSpec& spec);

// --- internal uncertainty families f(w, w_t) -------------------------------

struct ZeroUncertainty {};
/// f = gain * w(1,t)
struct TraceGain {
    double gain = 0.0;
};
/// f = gain * tanh(scale * ||(w,w_t)||^2)
struct EnergySaturation {
    double gain = 0.0;
    double scale = 1.0;
};
/// f = gain * sin( integral of w over [0,1] )
struct MeanSine {
    double gain = 0.0;
};

using UncertaintySpec = std::variant<ZeroUncertainty, TraceGain, EnergySaturation, MeanSine>;

double eval_uncertainty(const UncertaintySpec& spec, const WavePair& s);

// --- norms ------------------------------------------------------------------

/// Nodal spatial derivative: centered interior, 3-point one-sided at the ends.
std::vector<double> spatial_derivative(const ScalarField& f);

/// ||(u,ut)||^2 = int (u^2 + u_x^2 + ut^2), trapezoid quadrature.
double energy_norm_sq(const WavePair& s);

/// ||f||^2_{H1} = int (f^2 + f_x^2), trapezoid quadrature.
double h1_norm_sq(const TransportField& f);
double h1_norm_sq(const ScalarField& f);

/// int f dx, trapezoid.
double integral(const ScalarField& f);

}  // namespace wavectl
