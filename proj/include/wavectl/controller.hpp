#pragma once

#include <optional>

#include "wavectl/core.hpp"

namespace wavectl {

/// Observer/estimator traces feeding the feedback laws. Boundary traces must
/// agree with the field samples at the last node.
struct ControlInputs {
    ScalarField what;    // observer displacement
    ScalarField what_t;  // observer velocity
    double what1 = 0.0;
    double what_t1 = 0.0;
    double zx1 = 0.0;  // estimator boundary derivative z_x(1)
    double Yx1 = 0.0;  // output-injection channel derivative Y_x(1)
    std::optional<double> Z1;   // auxiliary channel trace Z(1)
    std::optional<double> Zx1;  // auxiliary channel derivative Z_x(1)

    static ControlInputs from_fields(const WavePair& observer, const ScalarField& z_field,
                                     const ScalarField& y_field, const ScalarField* z_aux);
};

/// u = z_x(1) + Y_x(1) - c3*what_t(1) - (c2+q)*what(1)
///     - (c2+q) * int_0^1 e^{q(1-xi)} [c3*what_t(xi) + q*what(xi)] dxi
double control_unstable(const ControlInputs& in, const Params& p);

/// u = -c3*what(1) - c3*Z(1) + z_x(1) + Y_x(1) - Z_x(1)
double control_antistable(const ControlInputs& in, const Params& p);

/// Dispatches on the variant.
double control(const ControlInputs& in, const Params& p);

/// F(t) = f(w, w_t) + d(t)
double total_disturbance(const WavePair& w, const UncertaintySpec& spec_f,
                         const DisturbanceSpec& spec_d, double t);

}  // namespace wavectl
