#include "lrh/pc_transforms.hpp"

#include <cmath>

#include "lrh/norms.hpp"

namespace lrh {

namespace {

// Physical samples of (F f) on the dual grid (frequency lattice = dual lattice).
Field fourier_as_dual(const Field& f) {
    Field fh = to_fourier(f);
    const GridSpec& g = fh.grid();
    GridSpec dual = g.dual();
    Field out(dual, Space::physical);
    int idx[8];
    for (std::size_t i = 0; i < fh.size(); ++i) {
        decode_index(g, i, idx);
        std::size_t j = 0;
        for (int a = 0; a < g.dim; ++a)
            j = j * dual.points +
                static_cast<std::size_t>(g.signed_index(idx[a]) + g.points / 2);
        out[j] = fh[i];
    }
    return out;
}

} // namespace

Field conj_fourier(const Field& f) {
    Field out = fourier_as_dual(f);
    for (auto& z : out.values()) z = std::conj(z);
    return out;
}

Field pseudoconformal_invert(const Field& w_tilde, double t) {
    if (!(t > 0.0)) throw DomainError("pseudoconformal_invert: t must be positive");
    return conj_fourier(w_tilde);
}

double fh_norm(const Field& f, double rho) {
    // F^{-1} f = conj(F conj(f))
    return sobolev_norm(conj_fourier(conjugate(f)), rho, false);
}

Field chirp_multiply(const Field& f, double t) {
    if (t == 0.0) throw DomainError("chirp_multiply: t must be nonzero");
    Field out = from_fourier(f);
    const GridSpec& g = out.grid();
    int idx[8];
    for (std::size_t i = 0; i < out.size(); ++i) {
        decode_index(g, i, idx);
        out[i] *= std::exp(cplx{0.0, 0.5 * x_norm2(g, idx) / t});
    }
    return out;
}

Field mdfm_factorize(const Field& f, double t) {
    if (t == 0.0) throw DomainError("mdfm_factorize: t must be nonzero");
    const GridSpec& g = f.grid();
    Field fp = from_fourier(f);

    // Nyquist check on the chirp: phase increment per sample stays below pi on
    // the effective support of f.
    const double r_eff = effective_radius(fp);
    if (r_eff * g.spacing() / std::abs(t) > pi)
        throw ResolutionError("mdfm_factorize: quadratic phase unresolved at this t");
    // The rescaled lattice must stay inside the dual box.
    const GridSpec dual = g.dual();
    if (0.5 * g.box / std::abs(t) > 0.5 * dual.box * (1.0 + 1e-12))
        throw ResolutionError("mdfm_factorize: dilation leaves the dual box");

    Field G = fourier_as_dual(chirp_multiply(fp, t));
    Field dilated = dilate_sample(G, g, 1.0 / t);
    const cplx amp = std::pow(cplx{0.0, t}, -0.5 * g.dim);
    dilated *= amp;
    return chirp_multiply(dilated, t);
}

Field reconstruct_u(const Field& v, const PhaseState& phase, double t) {
    if (!(t > 0.0)) throw DomainError("reconstruct_u: t must be positive");
    const double tau = 1.0 / t;
    if (std::abs(phase.time - tau) > 1e-9 * tau)
        throw ConfigError("reconstruct_u: phase must be built at time 1/t");

    Field v_tilde = tilde_profile(v, tau);
    Field vc_tilde = conj_fourier(v_tilde);
    Field vc = from_fourier(free_propagate(vc_tilde, t));
    // u(t) spreads ballistically; it is representable on the dual box only
    // while its mass stays away from the boundary.
    if (boundary_mass_fraction(vc, vc.grid().box / 8.0) > 1e-8)
        throw ResolutionError("reconstruct_u: u(t) mass reaches the dual box boundary");

    Field phase_dilated = dilate_sample(phase.phi, vc.grid(), tau);
    Field out(vc.grid(), Space::physical);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::exp(cplx{0.0, phase_dilated[i].real()}) * vc[i];
    return out;
}

} // namespace lrh
