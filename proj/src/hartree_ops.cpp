#include "lrh/hartree_ops.hpp"

#include <cmath>

#include "lrh/norms.hpp"

namespace lrh {

double riesz_constant(double gamma, int n) {
    if (!(gamma > 0.0 && gamma < n))
        throw DomainError("riesz_constant: requires 0 < gamma < n");
    return std::pow(2.0, n - gamma) * std::pow(pi, 0.5 * n) *
           std::tgamma(0.5 * (n - gamma)) / std::tgamma(0.5 * gamma);
}

Field hartree_g(const Field& u, const HartreeParams& p) {
    if (p.gamma >= p.dim)
        throw DomainError("hartree_g: multiplier identity requires gamma < n");
    const double c = p.kappa * riesz_constant(p.gamma, p.dim);
    Field dens = dealias(abs_squared(u));
    Field g = apply_omega_power(dens, p.gamma - p.dim);
    g *= c;
    return from_fourier(g);
}

std::pair<Field, Field> g_split(const Field& u, double t, const HartreeParams& p) {
    ChiCutoffs chi = chi_cutoffs(t);
    Field g = hartree_g(u, p);
    Field gl = from_fourier(apply_multiplier(g, chi.low));
    Field gs = g;
    gs -= gl;   // chi_L + chi_S = 1 holds exactly mode by mode this way
    return {std::move(gl), std::move(gs)};
}

PhaseBuilder::PhaseBuilder(const Field& v0, const HartreeParams& p)
    : params_(p), g0_hat_(to_fourier(hartree_g(v0, p))) {}

PhaseState PhaseBuilder::at(double t) const {
    if (!(t > 0.0)) throw DomainError("build_phase: t must be positive");
    ChiCutoffs chi = chi_cutoffs(t);
    const double gamma = params_.gamma;

    PhaseState st;
    st.time = t;
    Field gl_hat = apply_multiplier(g0_hat_, chi.low);
    Field phi_hat = gl_hat;
    phi_hat *= -std::pow(t, gamma - 1.0) / (1.0 - gamma);
    st.phi = from_fourier(phi_hat);
    st.s = gradient(phi_hat);
    for (auto& comp : st.s) comp = from_fourier(comp);

    Field dt_hat = gl_hat;
    dt_hat *= std::pow(t, gamma - 2.0);
    Field tilde_hat = apply_multiplier(g0_hat_, chi.tilde);
    tilde_hat *= std::pow(t, gamma - 2.0) / (1.0 - gamma);
    dt_hat -= tilde_hat;
    st.dt_phi = from_fourier(dt_hat);
    return st;
}

PhaseState build_phase(const Field& v0, double t, const HartreeParams& p) {
    return PhaseBuilder(v0, p).at(t);
}

SNormSides s_norm_estimates(const PhaseState& st, const HartreeParams& p, double v0_h_rho) {
    SNormSides out;
    out.lambdas = LambdaExponents::from(p);
    const int n = p.dim;

    double linf0 = 0.0, hn0 = 0.0;
    for (const auto& sa : st.s) {
        linf0 = std::max(linf0, lebesgue_norm(sa, r_infinity));
        double h = sobolev_norm(sa, 0.5 * n, true);
        hn0 += h * h;
    }
    out.lhs0 = linf0 + std::sqrt(hn0);

    double linf1 = 0.0, hn1 = 0.0;
    for (const auto& sa : st.s) {
        for (const auto& dsa : gradient(sa)) {
            linf1 = std::max(linf1, lebesgue_norm(dsa, r_infinity));
            double h = sobolev_norm(dsa, 0.5 * n, true);
            hn1 += h * h;
        }
    }
    out.lhs1 = linf1 + std::sqrt(hn1);

    const double a02 = v0_h_rho * v0_h_rho;
    out.rhs0 = std::pow(st.time, out.lambdas.lambda0 - 1.0) * a02;
    out.rhs1 = std::pow(st.time, out.lambdas.lambda1 - 1.0) * a02;
    out.c0 = out.rhs0 > 0.0 ? out.lhs0 / out.rhs0 : 0.0;
    out.c1 = out.rhs1 > 0.0 ? out.lhs1 / out.rhs1 : 0.0;
    return out;
}

} // namespace lrh
