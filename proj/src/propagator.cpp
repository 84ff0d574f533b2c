#include "lrh/propagator.hpp"

#include <cmath>

namespace lrh {

PropagatorCache make_propagator(const GridSpec& g, double t, double eta) {
    if (eta < 0.0) throw DomainError("propagator: eta must be >= 0");
    if (eta > 0.0 && t < 0.0)
        throw DomainError("propagator: backward heat flow (eta > 0, t < 0)");
    PropagatorCache c{g, t, eta, std::vector<cplx>(g.size())};
    int idx[8];
    for (std::size_t i = 0; i < c.mult.size(); ++i) {
        decode_index(g, i, idx);
        double k2 = xi_norm2(g, idx);
        c.mult[i] = std::exp(cplx{-0.5 * eta * t * k2, -0.5 * t * k2});
    }
    return c;
}

Field apply_propagator(const Field& f, const PropagatorCache& cache) {
    Field out = to_fourier(f);
    if (!(out.grid() == cache.grid))
        throw ConfigError("apply_propagator: grid mismatch");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= cache.mult[i];
    return out;
}

Field free_propagate(const Field& f, double t, double eta) {
    return apply_propagator(f, make_propagator(f.grid(), t, eta));
}

Field tilde_profile(const Field& w, double t) { return free_propagate(w, -t, 0.0); }

} // namespace lrh
