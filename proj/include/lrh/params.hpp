#pragma once
#include <algorithm>

#include "lrh/errors.hpp"

namespace lrh {

// Physical parameters of the long-range Hartree problem, 1/2 < gamma < 1.
struct HartreeParams {
    double gamma = 0.7;
    double kappa = 1.0;
    int dim = 2;
    double rho = 0.8;
    double epsilon_pm = 0.05;   // the eps of the "+-0" norms and of [a]_+ at a = 0

    void validate() const {
        if (!(gamma > 0.5 && gamma < 1.0))
            throw ConfigError("HartreeParams: gamma must lie in (1/2, 1)");
        if (dim < 2) throw ConfigError("HartreeParams: dim must be >= 2");
        if (!(rho > 1.0 - 0.5 * gamma && rho < 0.5 * dim))
            throw ConfigError("HartreeParams: rho must lie in (1 - gamma/2, n/2)");
        if (!(epsilon_pm > 0.0))
            throw ConfigError("HartreeParams: epsilon_pm must be positive");
    }

    double delta() const { return rho - 1.0 + 0.5 * gamma; }
};

// [a]_+ = max(a, 0) for a != 0, and eps at the equality case a = 0.
inline double bracket_plus(double a, double eps) {
    if (a == 0.0) return eps;
    return a > 0.0 ? a : 0.0;
}

// Decay exponents lambda_j = gamma - (1/2)[1 + j + gamma - 2 rho]_+ of s and
// grad s; lambda = lambda_1 ^ (2 lambda_0 - 1) drives every small-time bound.
struct LambdaExponents {
    double lambda0;
    double lambda1;
    double lambda;

    static LambdaExponents from(const HartreeParams& p) {
        LambdaExponents e{};
        e.lambda0 = p.gamma - 0.5 * bracket_plus(1.0 + p.gamma - 2.0 * p.rho, p.epsilon_pm);
        e.lambda1 = p.gamma - 0.5 * bracket_plus(2.0 + p.gamma - 2.0 * p.rho, p.epsilon_pm);
        e.lambda = std::min(e.lambda1, 2.0 * e.lambda0 - 1.0);
        return e;
    }

    // Subcriticality gate: both exponents must make N(t) time-integrable at 0.
    bool admissible() const { return lambda1 > 0.0 && 2.0 * lambda0 - 1.0 > 0.0; }
};

} // namespace lrh
