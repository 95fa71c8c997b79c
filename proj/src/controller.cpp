#include "wavectl/controller.hpp"

#include <cmath>

#include "wavectl/kernels.hpp"

namespace wavectl {

ControlInputs ControlInputs::from_fields(const WavePair& observer, const ScalarField& z_field,
                                         const ScalarField& y_field, const ScalarField* z_aux) {
    ControlInputs in;
    in.what = observer.u;
    in.what_t = observer.ut;
    in.what1 = observer.u.right();
    in.what_t1 = observer.ut.right();
    in.zx1 = kernels::boundary_derivative(z_field, kernels::End::Right);
    in.Yx1 = kernels::boundary_derivative(y_field, kernels::End::Right);
    if (z_aux != nullptr) {
        in.Z1 = z_aux->right();
        in.Zx1 = kernels::boundary_derivative(*z_aux, kernels::End::Right);
    }
    return in;
}

double control_unstable(const ControlInputs& in, const Params& p) {
    if (p.variant != Variant::UnstableSpring)
        throw VariantMismatch("control_unstable requires the unstable-spring variant");
    const int n = in.what.grid.n;
    ScalarField integrand = in.what;
    for (int i = 0; i <= n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        integrand.values[k] = p.c3 * in.what_t.values[k] + p.q * in.what.values[k];
    }
    const double kernel_term =
        kernels::exp_kernel_integral(integrand, p.q, n, kernels::KernelSign::Forward);
    return in.zx1 + in.Yx1 - p.c3 * in.what_t1 - (p.c2 + p.q) * in.what1 -
           (p.c2 + p.q) * kernel_term;
}

double control_antistable(const ControlInputs& in, const Params& p) {
    if (p.variant != Variant::AntistableDamper)
        throw VariantMismatch("control_antistable requires the anti-stable-damper variant");
    if (!in.Z1 || !in.Zx1)
        throw MissingZ("control_antistable needs the auxiliary transport traces Z(1), Z_x(1)");
    return -p.c3 * in.what1 - p.c3 * (*in.Z1) + in.zx1 + in.Yx1 - (*in.Zx1);
}

double control(const ControlInputs& in, const Params& p) {
    return p.variant == Variant::UnstableSpring ? control_unstable(in, p)
                                                : control_antistable(in, p);
}

double total_disturbance(const WavePair& w, const UncertaintySpec& spec_f,
                         const DisturbanceSpec& spec_d, double t) {
    return eval_uncertainty(spec_f, w) + sample_disturbance(spec_d, t);
}

}  // namespace wavectl
