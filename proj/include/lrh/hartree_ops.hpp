#pragma once
#include <utility>
#include <vector>

#include "lrh/cutoffs.hpp"
#include "lrh/multipliers.hpp"
#include "lrh/params.hpp"

namespace lrh {

// Riesz identity constant: |x|^{-gamma} * rho = C_{gamma,n} omega^{gamma-n} rho
// with C_{gamma,n} = 2^{n-gamma} pi^{n/2} Gamma((n-gamma)/2) / Gamma(gamma/2).
double riesz_constant(double gamma, int n);

// g(u) = kappa |x|^{-gamma} * |u|^2, evaluated as a Fourier multiplier on the
// dealiased density. Real-valued up to roundoff; returned as-is.
Field hartree_g(const Field& u, const HartreeParams& p);

// (g_L, g_S) = (chi_L g, chi_S g) at time t; g_L + g_S = g identically.
std::pair<Field, Field> g_split(const Field& u, double t, const HartreeParams& p);

// Phase phi(t) = -(1-gamma)^{-1} t^{gamma-1} g_L(v0), its gradient s and its
// exact time derivative  d_t phi = t^{gamma-2} g_L(v0)
//                               - (1-gamma)^{-1} t^{gamma-2} chi~_L g(v0).
struct PhaseState {
    double time = 0.0;
    Field phi;
    std::vector<Field> s;   // grad phi, one field per axis
    Field dt_phi;
};

PhaseState build_phase(const Field& v0, double t, const HartreeParams& p);

// Caches g(v0) in Fourier form; building PhaseState at any t is then a couple
// of cheap multiplier applications. Evolution rebuilds phases at every stage
// time through this.
class PhaseBuilder {
public:
    PhaseBuilder(const Field& v0, const HartreeParams& p);
    PhaseState at(double t) const;
    const Field& g0_hat() const { return g0_hat_; }
    const HartreeParams& params() const { return params_; }

private:
    HartreeParams params_;
    Field g0_hat_;   // spectral g(v0)
};

// Measured sides of ||grad^j s||_inf + ||omega^{n/2} grad^j s|| <= C t^{lambda_j - 1} a0^2
struct SNormSides {
    double lhs0 = 0.0, lhs1 = 0.0;       // j = 0, 1
    double rhs0 = 0.0, rhs1 = 0.0;       // t^{lambda_j - 1} * a0^2
    double c0 = 0.0, c1 = 0.0;           // ratios
    LambdaExponents lambdas{};
};

SNormSides s_norm_estimates(const PhaseState& st, const HartreeParams& p, double v0_h_rho);

} // namespace lrh
