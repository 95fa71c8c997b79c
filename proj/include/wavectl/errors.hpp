#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wavectl {

/// A design-parameter tuple violates the admissible region for its variant.
struct ParamViolation : std::runtime_error {
    explicit ParamViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Time step exceeds the explicit-stability limit dt <= h.
struct CflViolation : std::runtime_error {
    explicit CflViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A step produced NaN/Inf samples (numerical blow-up).
struct NonFinite : std::runtime_error {
    explicit NonFinite(const std::string& what, double when = -1.0)
        : std::runtime_error(what), time(when) {}
    double time;  // simulation time of the failed step, -1 if unknown
};

/// Initial data violates one or more coupling identities.
struct Incompatible : std::runtime_error {
    Incompatible(const std::string& what, std::vector<std::pair<std::string, double>> v)
        : std::runtime_error(what), violations(std::move(v)) {}
    std::vector<std::pair<std::string, double>> violations;  // identity name -> residual
};

/// Operation called for the wrong plant variant.
struct VariantMismatch : std::runtime_error {
    explicit VariantMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Anti-stable control law evaluated without the auxiliary transport traces.
struct MissingZ : std::runtime_error {
    explicit MissingZ(const std::string& what) : std::runtime_error(what) {}
};

/// Too few usable samples for a log-linear decay fit.
struct DegenerateSeries : std::runtime_error {
    explicit DegenerateSeries(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavectl
