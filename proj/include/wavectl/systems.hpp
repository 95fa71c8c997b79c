#pragma once

#include <optional>
#include <utility>

#include "wavectl/controller.hpp"
#include "wavectl/core.hpp"
#include "wavectl/kernels.hpp"

namespace wavectl {

/// Everything a single run needs besides the state itself.
struct VariantConfig {
    Params params;
    UncertaintySpec uncertainty = ZeroUncertainty{};
    DisturbanceSpec disturbance = ZeroSignal{};
    kernels::StepSizes sizes;
    bool control_enabled = true;
};

/// Initial fields for the coupled loop. Z0 is used by the anti-stable
/// variant only.
struct InitialData {
    ScalarField w0, w1;        // plant
    ScalarField v0, v1;        // estimator wave state
    ScalarField z0, z1;        // estimator output wave state
    ScalarField what0, what1;  // observer
    ScalarField W0, Y0;
    std::optional<ScalarField> Z0;

    static InitialData zero(const Grid& g, Variant variant);
};

/// Verifies the coupling identities on the initial data:
///   z0(1) - v0(1) - W0(1) + w0(1) = 0
///   W0(0) + c0*(v0(0) - w0(0)) = 0
///   Y0(0) + c0*(what0(0) - w0(0)) = 0
///   Z0(0) + c2*what0(0) = 0          (anti-stable only)
/// tol < 0 selects the default 1e-12 * max(1, trace scale).
/// Throws Incompatible listing every violated identity with its residual.
void check_compatibility(const InitialData& init, const Params& p, double tol = -1.0);

/// Shifts W0, Y0, Z0 by the constant needed to satisfy their identities and
/// re-imposes z0(1) exactly (constant shift of z0 plus exact boundary value).
InitialData auto_correct_compatibility(InitialData init, const Params& p);

/// Full coupled state at one time level. All fields share one grid.
struct ClosedLoopState {
    double t = 0.0;
    WavePair w, v, z, what;
    TransportField W, Y;
    std::optional<TransportField> Z;
};

struct EstimatorState {
    WavePair v;
    TransportField W;
    WavePair z;
};

struct ObserverState {
    WavePair what;
    TransportField Y;
};

/// Measured plant traces driving the estimator across one step: the step
/// kicks use the traces at the current level, the inflow and the Dirichlet
/// coupling are re-imposed with the traces at the completed level.
struct EstimatorInputs {
    double u = 0.0;
    double w0_now = 0.0;
    double w0_next = 0.0;
    double w1_next = 0.0;
};

struct ObserverInputs {
    double u = 0.0;
    double w0_now = 0.0;
    double w0_next = 0.0;
    double zx1_now = 0.0;  // estimator boundary derivative from the current level
};

/// Advances the plant one step with right flux u + F.
WavePair plant_step(const WavePair& w, double u, double F, const VariantConfig& cfg);

/// Advances (v, W, z); exposes the disturbance estimate via -z_x(1).
EstimatorState estimator_step(const EstimatorState& est, const EstimatorInputs& in,
                              const VariantConfig& cfg);

/// Advances (what, Y): copy of the plant driven by u - z_x(1) - Y_x(1) with
/// boundary output injection through the measured trace w(0,t).
ObserverState observer_step(const ObserverState& obs, const ObserverInputs& in,
                            const VariantConfig& cfg);

/// Advances the auxiliary transport channel with inflow -c2*what(0) taken at
/// the completed level. Anti-stable variant only.
TransportField aux_Z_step(const TransportField& Z, double what0_next, const VariantConfig& cfg);

/// Volterra transform out(x) = in(x) + (c2+q) * int_0^x e^{q(x-xi)} in(xi) dxi.
ScalarField backstepping_forward(const ScalarField& what, const Params& p);

/// Inverse transform out(x) = in(x) - (c2+q) * int_0^x e^{-c2(x-xi)} in(xi) dxi.
ScalarField backstepping_inverse(const ScalarField& wtil, const Params& p);

struct StepTrace {
    double u = 0.0;
    double F = 0.0;
};

/// Control and total disturbance that a step from this state applies.
StepTrace evaluate_feedback(const ClosedLoopState& s, const VariantConfig& cfg);

/// -z_x(1,t), the running estimate of F(t).
double estimate_trace(const ClosedLoopState& s);

/// Max absolute residual of the coupling identities at this level.
double coupling_residual(const ClosedLoopState& s, const VariantConfig& cfg);

/// One global step: measure -> control -> disturb -> advance plant,
/// estimator, observer and transports -> re-impose couplings.
std::pair<ClosedLoopState, StepTrace> closed_loop_step(const ClosedLoopState& s,
                                                       const VariantConfig& cfg);

/// Assembles the t=0 state and shifts every wave velocity to the staggered
/// half-step level using the boundary data of the initial instant.
ClosedLoopState make_initial_state(const InitialData& init, const VariantConfig& cfg);

}  // namespace wavectl
