#pragma once
#include "lrh/hartree_ops.hpp"
#include "lrh/interp.hpp"
#include "lrh/propagator.hpp"

namespace lrh {

// conj-Fourier partner: returns F^{-1}(conj f) = conj(F f), materialized as
// physical samples on the dual grid. Involutive: applying it twice returns f.
Field conj_fourier(const Field& f);

// Pseudoconformal inversion in Fourier form, w~(t) = conj(F w~_c(1/t)):
// given w~ at time t > 0, returns w~_c at time 1/t on the dual grid.
Field pseudoconformal_invert(const Field& w_tilde, double t);

// ||f; FH^rho|| = ||F^{-1} f; H^rho||, evaluated literally through the inverse
// transform on the dual grid.
double fh_norm(const Field& f, double rho);

// Multiplication by M(t) = exp(i |x|^2 / 2t).
Field chirp_multiply(const Field& f, double t);

// U(t) f through the factorization M(t) D(t) F M(t); the dilation D uses
// trigonometric interpolation on the rescaled lattice. Gaussian-class inputs
// only; agreement with free_propagate is interpolation-limited.
Field mdfm_factorize(const Field& f, double t);

// u(t) = exp(i (D_0(t) phi(1/t))) v_c(t)  with  v_c(t) = U(t) conj(F v~(1/t)).
// `v` is the amplitude at transformed time 1/t on the evolution grid, `phase`
// must be built at time 1/t; the result lives on the dual grid.
Field reconstruct_u(const Field& v, const PhaseState& phase, double t);

} // namespace lrh
