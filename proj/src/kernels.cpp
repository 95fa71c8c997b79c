#include "wavectl/kernels.hpp"

#include <cmath>
#include <sstream>

namespace wavectl::kernels {

namespace {

// Coefficients of u_x(0) = alpha*u(0) + beta*u_t(0) + gamma.
struct LeftCoeffs {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

LeftCoeffs left_coeffs(const LeftBC& bc) {
    return std::visit(
        [](const auto& b) -> LeftCoeffs {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, RobinDisplacement>) {
                return {b.a, 0.0, b.b * b.external};
            } else if constexpr (std::is_same_v<T, RobinVelocity>) {
                return {b.a, b.b, b.c * b.external};
            } else {
                return {b.a, b.b, 0.0};
            }
        },
        bc);
}

void check_finite(const WavePair& s, double h) {
    if (!s.u.all_finite() || !s.ut.all_finite()) {
        std::ostringstream os;
        os << "wave step produced non-finite samples (h=" << h << ")";
        throw NonFinite(os.str());
    }
}

}  // namespace

void StepSizes::check() const {
    if (!(dt > 0.0)) throw CflViolation("dt must be positive");
    if (dt > grid.h * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "CFL violation: dt=" << dt << " exceeds h=" << grid.h;
        throw CflViolation(os.str());
    }
}

WavePair wave_step(const WavePair& s, const WaveBC& bc, const StepSizes& sizes,
                   std::span<const double> source) {
    sizes.check();
    const int n = sizes.grid.n;
    const double h = sizes.grid.h;
    const double dt = sizes.dt;
    const double ih2 = 1.0 / (h * h);
    const auto& u = s.u.values;
    const auto& ut = s.ut.values;
    const bool dirichlet_right = std::holds_alternative<DirichletValue>(bc.right);

    auto src = [&source](int i) -> double {
        return source.empty() ? 0.0 : source[static_cast<std::size_t>(i)];
    };

    WavePair out = s;
    auto& un = out.u.values;
    auto& utn = out.ut.values;

    // kick: interior
    for (int i = 1; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double a = (u[k + 1] - 2.0 * u[k] + u[k - 1]) * ih2 + src(i);
        utn[k] = ut[k] + dt * a;
    }

    // kick: left ghost node, boundary velocity at the step midpoint
    {
        const LeftCoeffs c = left_coeffs(bc.left);
        const double expl =
            2.0 * (u[1] - u[0]) * ih2 - (2.0 / h) * (c.alpha * u[0] + c.gamma) + src(0);
        const double den = 1.0 + dt * c.beta / h;
        utn[0] = (ut[0] * (1.0 - dt * c.beta / h) + dt * expl) / den;
    }

    // kick: right end
    if (!dirichlet_right) {
        const auto kn = static_cast<std::size_t>(n);
        if (const auto* flux = std::get_if<NeumannFlux>(&bc.right)) {
            const double a = 2.0 * (u[kn - 1] - u[kn]) * ih2 + (2.0 / h) * flux->g + src(n);
            utn[kn] = ut[kn] + dt * a;
        } else {
            const auto& ds = std::get<DampedSpring>(bc.right);
            const double expl =
                2.0 * (u[kn - 1] - u[kn]) * ih2 - (2.0 / h) * ds.b * u[kn] + src(n);
            const double den = 1.0 + dt * ds.a / h;
            utn[kn] = (ut[kn] * (1.0 - dt * ds.a / h) + dt * expl) / den;
        }
    }

    // drift
    const int last = dirichlet_right ? n - 1 : n;
    for (int i = 0; i <= last; ++i) {
        const auto k = static_cast<std::size_t>(i);
        un[k] = u[k] + dt * utn[k];
    }
    if (dirichlet_right) {
        const auto kn = static_cast<std::size_t>(n);
        const double g = std::get<DirichletValue>(bc.right).g;
        un[kn] = g;
        utn[kn] = (g - u[kn]) / dt;
    }

    check_finite(out, h);
    return out;
}

WavePair prepare_initial_velocity(const WavePair& s, const WaveBC& bc, const StepSizes& sizes,
                                  std::span<const double> source) {
    sizes.check();
    const int n = sizes.grid.n;
    const double h = sizes.grid.h;
    const double ih2 = 1.0 / (h * h);
    const auto& u = s.u.values;
    const auto& ut = s.ut.values;

    auto src = [&source](int i) -> double {
        return source.empty() ? 0.0 : source[static_cast<std::size_t>(i)];
    };

    std::vector<double> accel(u.size(), 0.0);
    for (int i = 1; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        accel[k] = (u[k + 1] - 2.0 * u[k] + u[k - 1]) * ih2 + src(i);
    }
    {
        const LeftCoeffs c = left_coeffs(bc.left);
        accel[0] = 2.0 * (u[1] - u[0]) * ih2 -
                   (2.0 / h) * (c.alpha * u[0] + c.beta * ut[0] + c.gamma) + src(0);
    }
    if (const auto* flux = std::get_if<NeumannFlux>(&bc.right)) {
        const auto kn = static_cast<std::size_t>(n);
        accel[kn] = 2.0 * (u[kn - 1] - u[kn]) * ih2 + (2.0 / h) * flux->g + src(n);
    } else if (const auto* ds = std::get_if<DampedSpring>(&bc.right)) {
        const auto kn = static_cast<std::size_t>(n);
        accel[kn] = 2.0 * (u[kn - 1] - u[kn]) * ih2 -
                    (2.0 / h) * (ds->a * ut[kn] + ds->b * u[kn]) + src(n);
    }
    // Dirichlet right end: node n is overwritten each step, leave it be.

    WavePair out = s;
    for (std::size_t k = 0; k < accel.size(); ++k)
        out.ut.values[k] = ut[k] - 0.5 * sizes.dt * accel[k];
    check_finite(out, h);
    return out;
}

TransportField transport_step(const TransportField& f, double inflow, const StepSizes& sizes) {
    sizes.check();
    if (!std::isfinite(inflow)) throw NonFinite("transport inflow is non-finite");
    const int n = sizes.grid.n;
    const auto& v = f.f.values;
    TransportField out = f;
    auto& w = out.f.values;

    if (sizes.dt == sizes.grid.h) {
        // exact characteristic shift
        for (int i = n; i >= 1; --i)
            w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i) - 1];
    } else {
        const double lambda = sizes.dt / sizes.grid.h;
        for (int i = n; i >= 1; --i) {
            const auto k = static_cast<std::size_t>(i);
            w[k] = v[k] - lambda * (v[k] - v[k - 1]);
        }
    }
    w[0] = inflow;

    if (!out.f.all_finite()) throw NonFinite("transport step produced non-finite samples");
    return out;
}

double boundary_derivative(const ScalarField& f, End end) {
    const auto& v = f.values;
    const double h = f.grid.h;
    const auto n = static_cast<std::size_t>(f.grid.n);
    if (end == End::Left) return (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    return (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h);
}

double exp_kernel_integral(const ScalarField& f, double rate, int x_upper, KernelSign sign) {
    if (x_upper <= 0) return 0.0;
    const double h = f.grid.h;
    const double r = (sign == KernelSign::Forward) ? rate : -rate;
    const auto& v = f.values;
    // exponent r*(x - xi) with x = x_upper*h, xi = j*h
    double acc = 0.5 * (std::exp(r * h * x_upper) * v[0] + v[static_cast<std::size_t>(x_upper)]);
    for (int j = 1; j < x_upper; ++j)
        acc += std::exp(r * h * (x_upper - j)) * v[static_cast<std::size_t>(j)];
    return acc * h;
}

}  // namespace wavectl::kernels
