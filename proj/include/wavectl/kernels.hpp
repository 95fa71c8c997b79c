#pragma once

#include <span>
#include <variant>

#include "wavectl/core.hpp"

namespace wavectl::kernels {

// Left-end conditions, all of the form u_x(0) = <affine in u(0), u_t(0), data>.

/// u_x(0) = a*u(0) + b*external
struct RobinDisplacement {
    double a = 0.0;
    double b = 0.0;
    double external = 0.0;
};
/// u_x(0) = a*u(0) + b*u_t(0) + c*external
struct RobinVelocity {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double external = 0.0;
};
/// u_x(0) = a*u(0) + b*u_t(0)
struct MixedVelocityDisplacement {
    double a = 0.0;
    double b = 0.0;
};

using LeftBC = std::variant<RobinDisplacement, RobinVelocity, MixedVelocityDisplacement>;

// Right-end conditions.

/// u_x(1) = g
struct NeumannFlux {
    double g = 0.0;
};
/// u(1) = g, imposed by overwriting the boundary node after the step.
struct DirichletValue {
    double g = 0.0;
};
/// u_x(1) = -a*u_t(1) - b*u(1)
struct DampedSpring {
    double a = 0.0;
    double b = 0.0;
};

using RightBC = std::variant<NeumannFlux, DirichletValue, DampedSpring>;

struct WaveBC {
    LeftBC left;
    RightBC right;
};

/// Time step paired with its grid; the explicit schemes require dt <= h.
/// dt == h is the default and makes the transport shift exact.
struct StepSizes {
    double dt = 0.0;
    Grid grid;

    static StepSizes unit_cfl(const Grid& g) { return StepSizes{g.h, g}; }
    void check() const;
};

/// One explicit step of u_tt = u_xx (+source), second order in space.
///
/// The update is kick-drift: ut += dt*Lu, then u += dt*ut, so the stored
/// velocity lives on the staggered half-step grid and the displacement
/// follows the standard three-level leapfrog orbit. Boundary conditions are
/// eliminated through second-order ghost nodes; velocity terms in a boundary
/// condition are taken at the midpoint of the step (one scalar solve per end).
/// A Dirichlet right end is imposed exactly on the new level, with the node
/// velocity kept consistent with the drift identity.
WavePair wave_step(const WavePair& s, const WaveBC& bc, const StepSizes& sizes,
                   std::span<const double> source = {});

/// Shifts a synchronous initial velocity back by half a step so that the
/// first wave_step kick lands on the correct staggered level. Call once on
/// initial data, with the boundary data of the initial instant.
WavePair prepare_initial_velocity(const WavePair& s, const WaveBC& bc, const StepSizes& sizes,
                                  std::span<const double> source = {});

/// One step of f_t = -f_x with the given inflow value f(0, t+dt).
/// With dt == h this is the exact characteristic shift
/// (new[i] = old[i-1], new[0] = inflow); with dt < h, first-order upwind.
TransportField transport_step(const TransportField& f, double inflow, const StepSizes& sizes);

enum class End { Left, Right };

/// 3-point one-sided second-order boundary derivative; exact on quadratics.
double boundary_derivative(const ScalarField& f, End end);

enum class KernelSign { Forward, Inverse };

/// Trapezoid quadrature of int_0^{x_upper*h} e^{+-rate*(x - xi)} f(xi) dxi,
/// with x = x_upper*h; Forward uses +rate, Inverse uses -rate.
double exp_kernel_integral(const ScalarField& f, double rate, int x_upper, KernelSign sign);

}  // namespace wavectl::kernels
